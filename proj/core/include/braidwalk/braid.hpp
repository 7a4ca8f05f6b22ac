#pragma once

#include "braidwalk/cayley.hpp"
#include "braidwalk/polynomial.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidwalk {

/// σ_index^sign with 1 <= index < strands.
struct BraidLetter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the Artin generators σ_1..σ_{n-1}. The empty word is the
/// identity braid.
struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;

  /// Throws InvalidSpec for strands < 2 or an index outside 1..strands-1.
  void validate() const;
  std::size_t length() const { return letters.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Signed integer list: `[1, -2, 4]` is σ_1 σ_2⁻¹ σ_4.
BraidWord parse_braid_word(std::string_view text, int strands);
std::string format_braid_letters(const BraidWord& word);

/// One-line permutation of 1..n.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }
  /// (a ∘ b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  /// Cycles including fixed points.
  int cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Replaces each letter s_i of the lexicographically smallest reduced word
/// of g by σ_i. The graph must belong to a Coxeter group; for type A_{n-1}
/// the result lives in the braid group on n strands, for other types the
/// word is an Artin-Tits word over the same indices with strands = rank + 1.
BraidWord lift_to_braid(const CayleyGraph& graph, const Element& g);
BraidWord lift_to_braid(const CayleyGraph& graph, std::size_t vertex);

/// Cancels adjacent σ_i σ_i⁻¹ and σ_i⁻¹ σ_i pairs until none remain.
BraidWord free_reduce(const BraidWord& word);

/// Image under σ_i ↦ (i i+1), multiplied left to right; signs are ignored.
Permutation underlying_permutation(const BraidWord& word);

/// Link components of the closure = cycles of the underlying permutation.
int closure_components(const BraidWord& word);

/// Σ_{w ∈ S_n} x^{c(w)} = x(x+1)...(x+n-1). Throws InvalidSpec for n < 1.
IntPolynomial cycle_count_polynomial(int n);

struct ComponentLimits {
  Rational even_steps;
  Rational odd_steps;
};

/// Limits of E[c(closure of the lifted walk)] on S_n along even and odd
/// steps: H_n + (-1)^n/(n(n-1)) on even steps and H_n - (-1)^n/(n(n-1))
/// on odd steps. At n = 2 the even class is {id}, whose closure has two
/// components, which fixes the sign. Throws InvalidSpec for n < 2.
ComponentLimits component_limits(int n);

/// Places the words side by side on disjoint strand blocks: word k is
/// shifted by the strand counts of words 0..k-1. Throws InvalidSpec on an
/// empty list.
BraidWord block_diagonal_compose(std::span<const BraidWord> words);

}  // namespace braidwalk
