#pragma once

#include "braidwalk/group.hpp"
#include "braidwalk/rational.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>

namespace braidwalk {

/// Cay(G, S): vertices are group elements, with an arc g -> gσ for every
/// letter σ of S ∪ S⁻¹. Distances and parents come from a single FIFO BFS
/// from the identity with letters expanded in alphabet order, so every
/// parent chain spells the lexicographically smallest reduced word.
class CayleyGraph {
 public:
  struct Parent {
    std::uint32_t vertex;
    std::uint32_t letter;  // index into letters()
  };

  const ConcreteGroup& group() const { return *group_; }
  std::shared_ptr<const ConcreteGroup> group_ptr() const { return group_; }

  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t vertex) const { return elements_[vertex]; }
  std::optional<std::size_t> find(const Element& e) const;
  /// Throws UnknownElement.
  std::size_t index_of(const Element& e) const;

  std::span<const Letter> letters() const { return group_->alphabet(); }
  std::size_t letter_count() const { return group_->alphabet().size(); }
  std::size_t neighbor(std::size_t vertex, std::size_t letter) const {
    return neighbors_[vertex * letter_count() + letter];
  }
  std::span<const std::uint32_t> neighbors(std::size_t vertex) const {
    return {neighbors_.data() + vertex * letter_count(), letter_count()};
  }

  int distance(std::size_t vertex) const { return distance_[vertex]; }
  std::span<const int> distances() const { return distance_; }
  std::optional<Parent> parent(std::size_t vertex) const;
  int max_distance() const { return max_distance_; }
  bool bipartite() const { return bipartite_; }

 private:
  friend CayleyGraph build_cayley(std::shared_ptr<const ConcreteGroup> group, std::uint64_t cap);

  std::shared_ptr<const ConcreteGroup> group_;
  std::vector<Element> elements_;
  std::vector<std::uint32_t> dense_lookup_;  // empty when the index space is too large
  std::unordered_map<Element, std::uint32_t, ElementHash> sparse_lookup_;
  std::vector<std::uint32_t> neighbors_;
  std::vector<int> distance_;
  std::vector<Parent> parent_;
  int max_distance_ = 0;
  bool bipartite_ = true;
};

/// Errors: CapExceeded when |G| exceeds cap.
CayleyGraph build_cayley(std::shared_ptr<const ConcreteGroup> group, std::uint64_t cap = kDefaultOrderCap);
CayleyGraph build_cayley(const GroupSpec& spec, std::uint64_t cap = kDefaultOrderCap);

int length_of(const CayleyGraph& graph, const Element& g);
Word reduced_word(const CayleyGraph& graph, const Element& g);
Word reduced_word(const CayleyGraph& graph, std::size_t vertex);
bool is_bipartite(const CayleyGraph& graph);

/// A function on group elements with exact rational values. The length
/// functional is special-cased so that sums over large graphs stay in
/// machine integers.
class Functional {
 public:
  static Functional length();
  static Functional constant(Rational value);
  static Functional of(std::function<Rational(const Element&)> f, std::string name = "f");

  Rational operator()(const CayleyGraph& graph, std::size_t vertex) const;
  bool is_length() const { return kind_ == Kind::Length; }
  const std::string& name() const { return name_; }

  /// f evaluated at every vertex, as doubles.
  std::vector<double> tabulate(const CayleyGraph& graph) const;

 private:
  enum class Kind { Length, Constant, General };
  Kind kind_ = Kind::Length;
  Rational constant_;
  std::function<Rational(const Element&)> f_;
  std::string name_ = "length";
};

struct ParitySums {
  Rational even;
  Rational odd;
  Rational total;
};

/// Exact sums of f over {ℓ even}, {ℓ odd} and all of G.
ParitySums parity_sums(const CayleyGraph& graph, const Functional& f);

/// Edge list `u v gen sign` (gen 1-based), then a `# distances` block of
/// `vertex distance` lines.
void write_edge_list(std::ostream& out, const CayleyGraph& graph);

}  // namespace braidwalk
