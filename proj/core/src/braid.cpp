#include "braidwalk/braid.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>

namespace braidwalk {

void BraidWord::validate() const {
  if (strands < 2) throw InvalidSpec("a braid needs at least two strands");
  for (const auto& l : letters) {
    if (l.index < 1 || l.index >= strands)
      throw InvalidSpec("braid generator index " + std::to_string(l.index) + " outside 1.." +
                        std::to_string(strands - 1));
    if (l.sign != 1 && l.sign != -1) throw InvalidSpec("braid letter sign must be +1 or -1");
  }
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw InvalidSpec("malformed braid word '" + std::string(text) + "'");
  }
  if (!doc.is_array()) throw InvalidSpec("a braid word is a JSON array of signed generator indices");
  BraidWord word{strands, {}};
  for (const auto& v : doc) {
    if (!v.is_number_integer() || v.get<long long>() == 0)
      throw InvalidSpec("braid letters are non-zero integers");
    const auto i = v.get<long long>();
    if (i > strands || -i > strands) throw InvalidSpec("braid generator index out of range");
    word.letters.push_back({static_cast<int>(i < 0 ? -i : i), i < 0 ? -1 : 1});
  }
  word.validate();
  return word;
}

std::string format_braid_letters(const BraidWord& word) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    out << (i ? ", " : "") << word.letters[i].sign * word.letters[i].index;
  }
  out << ']';
  return out.str();
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidSpec("composing permutations of different sizes");
  Permutation out;
  out.images.reserve(b.images.size());
  for (int image : b.images) out.images.push_back(a(image));
  return out;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images.size() + 1, false);
  int cycles = 0;
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = (*this)(i)) seen[static_cast<std::size_t>(i)] = true;
  }
  return cycles;
}

BraidWord lift_to_braid(const CayleyGraph& graph, std::size_t vertex) {
  const GroupSpec& spec = graph.group().spec();
  if (!spec.is_coxeter()) throw InvalidSpec(spec.name() + " is not a Coxeter group; nothing to lift");
  BraidWord out{graph.group().generator_count() + 1, {}};
  for (const Letter& l : reduced_word(graph, vertex)) out.letters.push_back({l.generator + 1, 1});
  return out;
}

BraidWord lift_to_braid(const CayleyGraph& graph, const Element& g) { return lift_to_braid(graph, graph.index_of(g)); }

BraidWord free_reduce(const BraidWord& word) {
  BraidWord out{word.strands, {}};
  for (const auto& l : word.letters) {
    if (!out.letters.empty() && out.letters.back().index == l.index && out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Permutation underlying_permutation(const BraidWord& word) {
  word.validate();
  Permutation p = Permutation::identity(word.strands);
  for (const auto& l : word.letters) {
    // right multiplication by (i i+1) swaps the entries in positions i, i+1
    std::swap(p.images[static_cast<std::size_t>(l.index - 1)], p.images[static_cast<std::size_t>(l.index)]);
  }
  return p;
}

int closure_components(const BraidWord& word) { return underlying_permutation(word).cycle_count(); }

IntPolynomial cycle_count_polynomial(int n) {
  if (n < 1) throw InvalidSpec("cycle_count_polynomial needs n >= 1");
  IntPolynomial f({1});
  for (int i = 0; i < n; ++i) f = f * IntPolynomial({BigInt(i), BigInt(1)});
  return f;
}

ComponentLimits component_limits(int n) {
  if (n < 2) throw InvalidSpec("component_limits needs n >= 2");
  const Rational h = harmonic_number(static_cast<unsigned>(n));
  const Rational correction(n % 2 == 0 ? 1 : -1, static_cast<long long>(n) * (n - 1));
  return {h + correction, h - correction};
}

BraidWord block_diagonal_compose(std::span<const BraidWord> words) {
  if (words.empty()) throw InvalidSpec("block_diagonal_compose needs at least one word");
  BraidWord out{0, {}};
  for (const auto& w : words) {
    w.validate();
    for (const auto& l : w.letters) out.letters.push_back({l.index + out.strands, l.sign});
    out.strands += w.strands;
  }
  return out;
}

}  // namespace braidwalk
