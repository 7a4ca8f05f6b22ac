#pragma once

#include "braidwalk/error.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace braidwalk {

/// Default ceiling on |G| for anything that enumerates a group.
inline constexpr std::uint64_t kDefaultOrderCap = 10'000'000;

enum class Family {
  Cyclic,
  CyclicProduct,
  Dihedral,
  CoxeterA,
  CoxeterB,
  CoxeterD,
  CoxeterI2,
  CoxeterProduct,
};

/// A finite group family instance. `parameter` is m for Cyclic, Dihedral and
/// CoxeterI2, and the rank for CoxeterA/B/D.
struct GroupSpec {
  Family family = Family::Cyclic;
  int parameter = 1;
  std::vector<int> moduli;          // CyclicProduct
  std::vector<GroupSpec> factors;   // CoxeterProduct, irreducible Coxeter specs only

  static GroupSpec cyclic(int m);
  static GroupSpec cyclic_product(std::vector<int> moduli);
  static GroupSpec dihedral(int m);
  static GroupSpec coxeter_a(int rank);
  static GroupSpec coxeter_b(int rank);
  static GroupSpec coxeter_d(int rank);
  static GroupSpec coxeter_i2(int m);
  static GroupSpec coxeter_product(std::vector<GroupSpec> factors);

  bool is_coxeter() const;
  /// Short label: Z5, Z2xZ4, Dih4, A3, B3, D4, I2(5), A1xB3.
  std::string name() const;

  /// Throws InvalidSpec when a parameter is out of range.
  void validate() const;
  /// |G| predicted from the family formula; nullopt if it overflows 64 bits.
  std::optional<std::uint64_t> predicted_order() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// One letter of a word: generator index and exponent sign (+1 or -1).
/// Letters order by generator first, with +1 before -1.
struct Letter {
  int generator = 0;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.generator <=> b.generator; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

using Word = std::vector<Letter>;

std::string to_string(const Word& word);

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;
};

/// Canonical element encoding; equal group elements have identical codes.
class Element {
 public:
  using Storage = boost::container::small_vector<std::int32_t, 12>;

  Element() = default;
  explicit Element(Storage code) : code_(std::move(code)) {}
  Element(std::initializer_list<std::int32_t> code) : code_(code) {}

  std::span<const std::int32_t> code() const { return {code_.data(), code_.size()}; }
  std::span<std::int32_t> code() { return {code_.data(), code_.size()}; }
  std::size_t size() const { return code_.size(); }

  friend bool operator==(const Element& a, const Element& b) { return a.code_ == b.code_; }
  friend bool operator<(const Element& a, const Element& b) { return a.code_ < b.code_; }

 private:
  Storage code_;
};

std::string to_string(const Element& element);

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

namespace detail {
class GroupFactor;
}

/// An enumerable finite group with a fixed, ordered generating set.
///
/// Generators are listed factor by factor, left factor first. Within a
/// family: Cyclic {a}; CyclicProduct {a_1, ..., a_k}; Dihedral {a (rotation),
/// b (reflection)}; CoxeterA(n) {s_1..s_n}, s_i = (i i+1); CoxeterB(n)
/// {s_1..s_n}, s_i = (i i+1) for i < n and s_n negating entry n; CoxeterD(n)
/// {s_1..s_n}, s_n = (n-1 n) with both signs flipped; CoxeterI2(m) {s_1, s_2},
/// two reflections whose product is a rotation of order m.
///
/// Encodings: residues for cyclic factors; (rotation, reflection bit) for
/// Dihedral and I2; one-line signed permutations of 1..n for A, B and D.
/// Multiplication composes as functions, (ab)(i) = a(b(i)).
class ConcreteGroup {
 public:
  const GroupSpec& spec() const { return spec_; }
  Element identity() const { return identity_; }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  const std::vector<Element>& generators() const { return generators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  /// The generator equals its own inverse, so only the +1 letter exists.
  bool is_involution(int generator) const { return involution_[static_cast<std::size_t>(generator)]; }
  std::uint64_t order() const { return order_; }

  /// Distinct letters of S ∪ S⁻¹ in letter order.
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  /// g · σ^sign.
  Element apply(const Element& g, Letter letter) const;
  /// Evaluates a word left to right from the identity.
  Element evaluate(const Word& word) const;
  /// g · σ for alphabet letter k. Every generator lives in a single direct
  /// factor, so only that slice of the code changes; `index` enters as
  /// dense_index(g) and leaves as the index of the product. Requires a
  /// dense index space.
  Element step(const Element& g, std::size_t k, std::uint64_t& index) const;

  /// Injective map into [0, index_space()); used for dense vertex lookup.
  std::uint64_t dense_index(const Element& e) const;
  std::uint64_t index_space() const { return index_space_; }

  bool contains(const Element& e) const;

 private:
  friend ConcreteGroup build_group(const GroupSpec& spec, std::uint64_t cap);
  ConcreteGroup() = default;

  GroupSpec spec_;
  std::vector<std::shared_ptr<const detail::GroupFactor>> factors_;
  std::vector<std::size_t> offsets_;
  Element identity_;
  std::vector<Element> generators_;
  std::vector<bool> involution_;
  std::vector<Letter> alphabet_;
  std::vector<std::size_t> letter_factor_;  // factor holding each letter's generator
  std::vector<Element> letter_element_;     // σ for each letter
  std::vector<std::uint64_t> strides_;      // mixed-radix weight of each factor in dense_index
  std::uint64_t order_ = 1;
  std::uint64_t index_space_ = 1;
};

/// Errors: CapExceeded when |G| > cap, InvalidSpec for bad parameters.
ConcreteGroup build_group(const GroupSpec& spec, std::uint64_t cap = kDefaultOrderCap);

/// The family presentation: <a | a^m>; <a, b | a^m, b^2, abab>; Coxeter
/// relators s_i^2 and (s_i s_j)^m(i,j); products add commutators between
/// generators of different factors (aba⁻¹b⁻¹, with involutive Coxeter and
/// reflection generators written with sign +1).
Presentation presentation_of(const GroupSpec& spec);

bool has_odd_relator(const Presentation& presentation);

/// Coxeter matrix entry m(i,j) for a Coxeter spec (2 across product factors).
std::vector<std::vector<int>> coxeter_matrix(const GroupSpec& spec);

}  // namespace braidwalk
