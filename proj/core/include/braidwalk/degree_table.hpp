#pragma once

#include "braidwalk/group.hpp"
#include "braidwalk/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidwalk {

/// An irreducible finite Coxeter type: A_n, B_n (C_n is accepted as an alias),
/// D_n, E6-E8, F4, G2, H3, H4, or I2(m) with `rank` holding m.
struct CoxeterType {
  char family = 'A';
  int rank = 1;

  /// Accepts "A3", "B3", "C3", "D4", "E8", "F4", "G2", "H3", "I2(5)".
  static CoxeterType parse(std::string_view text);
  std::string name() const;

  /// Concrete enumerable group for A, B, D, I2 and G2 (= I2(6)).
  std::optional<GroupSpec> group_spec() const;

  friend bool operator==(const CoxeterType&, const CoxeterType&) = default;
};

/// "A1xB3" or "A1*B3"; a single type is a one-element product.
std::vector<CoxeterType> parse_coxeter_product(std::string_view text);

/// Degrees of basic invariants, one row per irreducible type, read from the
/// text format of data/degree_table.txt.
class DegreeTable {
 public:
  /// Throws InvalidSpec on malformed input.
  static DegreeTable parse(std::string_view text);
  /// The table shipped with the library. On first use it is checked against
  /// the known group orders and reflection counts; a mismatch is fatal.
  static const DegreeTable& builtin();

  /// Throws InvalidSpec for unknown types or ranks outside a row's range.
  std::vector<int> degrees(const CoxeterType& type) const;
  std::vector<std::string> row_keys() const;

 private:
  struct Term {
    long long coefficient = 0;  // multiplies the row variable
    long long constant = 0;
  };
  struct Group {
    std::vector<Term> terms;
    bool run = false;  // "a, b, ..., c": arithmetic from a with step b - a up to c
  };
  struct Row {
    std::string key;
    char variable = 0;  // 0 for fixed rows
    int minimum = 0;
    std::vector<Group> groups;
  };
  std::vector<Row> rows_;
};

std::vector<int> degrees_of(const CoxeterType& type);
/// Multiset union of the factors' degrees.
std::vector<int> degrees_of(std::span<const CoxeterType> product);

/// |W| and Ref W from the classification, independent of the degree table.
BigInt known_order(const CoxeterType& type);
long long known_reflection_count(const CoxeterType& type);

}  // namespace braidwalk
