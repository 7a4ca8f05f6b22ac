#include "braidwalk/group.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braidwalk {

namespace detail {

using Code = std::span<const std::int32_t>;
using MutableCode = std::span<std::int32_t>;

/// One direct factor of a ConcreteGroup, operating on a slice of the code.
class GroupFactor {
 public:
  virtual ~GroupFactor() = default;
  virtual std::size_t width() const = 0;
  virtual void identity(MutableCode out) const = 0;
  virtual void multiply(Code a, Code b, MutableCode out) const = 0;
  virtual void inverse(Code a, MutableCode out) const = 0;
  virtual std::vector<std::vector<std::int32_t>> generators() const = 0;
  virtual std::uint64_t order() const = 0;
  virtual std::uint64_t index_space() const = 0;
  virtual std::uint64_t dense_index(Code a) const = 0;
  virtual bool contains(Code a) const = 0;
};

namespace {

std::int32_t mod(std::int64_t value, std::int32_t m) {
  const auto r = static_cast<std::int32_t>(value % m);
  return r < 0 ? r + m : r;
}

class CyclicFactor final : public GroupFactor {
 public:
  explicit CyclicFactor(int m) : m_(m) {}
  std::size_t width() const override { return 1; }
  void identity(MutableCode out) const override { out[0] = 0; }
  void multiply(Code a, Code b, MutableCode out) const override {
    out[0] = mod(static_cast<std::int64_t>(a[0]) + b[0], m_);
  }
  void inverse(Code a, MutableCode out) const override { out[0] = mod(-static_cast<std::int64_t>(a[0]), m_); }
  std::vector<std::vector<std::int32_t>> generators() const override { return {{mod(1, m_)}}; }
  std::uint64_t order() const override { return static_cast<std::uint64_t>(m_); }
  std::uint64_t index_space() const override { return order(); }
  std::uint64_t dense_index(Code a) const override { return static_cast<std::uint64_t>(a[0]); }
  bool contains(Code a) const override { return a[0] >= 0 && a[0] < m_; }

 private:
  std::int32_t m_;
};

/// Encodes rot^r · ref^f as (r, f).
class DihedralFactor final : public GroupFactor {
 public:
  DihedralFactor(int m, bool reflection_generators) : m_(m), reflections_(reflection_generators) {}
  std::size_t width() const override { return 2; }
  void identity(MutableCode out) const override { out[0] = 0, out[1] = 0; }
  void multiply(Code a, Code b, MutableCode out) const override {
    const std::int64_t turn = a[1] ? -static_cast<std::int64_t>(b[0]) : b[0];
    out[0] = mod(a[0] + turn, m_);
    out[1] = a[1] ^ b[1];
  }
  void inverse(Code a, MutableCode out) const override {
    out[0] = a[1] ? a[0] : mod(-static_cast<std::int64_t>(a[0]), m_);
    out[1] = a[1];
  }
  std::vector<std::vector<std::int32_t>> generators() const override {
    if (reflections_) return {{0, 1}, {mod(1, m_), 1}};
    return {{mod(1, m_), 0}, {0, 1}};
  }
  std::uint64_t order() const override { return 2 * static_cast<std::uint64_t>(m_); }
  std::uint64_t index_space() const override { return order(); }
  std::uint64_t dense_index(Code a) const override { return 2 * static_cast<std::uint64_t>(a[0]) + a[1]; }
  bool contains(Code a) const override { return a[0] >= 0 && a[0] < m_ && (a[1] == 0 || a[1] == 1); }

 private:
  std::int32_t m_;
  bool reflections_;
};

enum class PermKind { A, B, D };

/// Signed permutations of 1..n in one-line notation.
class SignedPermutationFactor final : public GroupFactor {
 public:
  SignedPermutationFactor(int points, PermKind kind) : n_(points), kind_(kind) {}
  std::size_t width() const override { return static_cast<std::size_t>(n_); }
  void identity(MutableCode out) const override { std::iota(out.begin(), out.end(), 1); }
  void multiply(Code a, Code b, MutableCode out) const override {
    for (int i = 0; i < n_; ++i) {
      const std::int32_t image = b[i];
      const std::int32_t sign = image < 0 ? -1 : 1;
      out[i] = sign * a[sign * image - 1];
    }
  }
  void inverse(Code a, MutableCode out) const override {
    for (int i = 0; i < n_; ++i) {
      const std::int32_t image = a[i];
      const std::int32_t sign = image < 0 ? -1 : 1;
      out[sign * image - 1] = sign * (i + 1);
    }
  }
  std::vector<std::vector<std::int32_t>> generators() const override {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> id(static_cast<std::size_t>(n_));
    std::iota(id.begin(), id.end(), 1);
    for (int i = 0; i + 1 < n_; ++i) {
      auto s = id;
      std::swap(s[i], s[i + 1]);
      out.push_back(std::move(s));
    }
    if (kind_ == PermKind::B) {
      auto s = id;
      s[n_ - 1] = -s[n_ - 1];
      out.push_back(std::move(s));
    } else if (kind_ == PermKind::D) {
      auto s = id;
      s[n_ - 2] = -n_;
      s[n_ - 1] = -(n_ - 1);
      out.push_back(std::move(s));
    }
    return out;
  }
  std::uint64_t order() const override {
    std::uint64_t out = 1;
    for (int i = 2; i <= n_; ++i) out *= static_cast<std::uint64_t>(i);
    if (kind_ == PermKind::B) out <<= n_;
    if (kind_ == PermKind::D) out <<= (n_ - 1);
    return out;
  }
  std::uint64_t index_space() const override {
    std::uint64_t out = 1;
    for (int i = 2; i <= n_; ++i) out *= static_cast<std::uint64_t>(i);
    return kind_ == PermKind::A ? out : out << n_;
  }
  std::uint64_t dense_index(Code a) const override {
    std::uint64_t rank = 0;
    std::uint64_t signs = 0;
    for (int i = 0; i < n_; ++i) {
      const std::int32_t ai = a[i] < 0 ? -a[i] : a[i];
      std::uint64_t smaller = 0;
      for (int j = i + 1; j < n_; ++j) {
        const std::int32_t aj = a[j] < 0 ? -a[j] : a[j];
        smaller += aj < ai;
      }
      rank = rank * static_cast<std::uint64_t>(n_ - i) + smaller;
      signs = (signs << 1) | (a[i] < 0);
    }
    return kind_ == PermKind::A ? rank : (rank << n_) | signs;
  }
  bool contains(Code a) const override {
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    int negatives = 0;
    for (int i = 0; i < n_; ++i) {
      const std::int32_t v = a[i] < 0 ? -a[i] : a[i];
      if (v < 1 || v > n_ || seen[v]) return false;
      seen[v] = true;
      negatives += a[i] < 0;
    }
    if (kind_ == PermKind::A) return negatives == 0;
    if (kind_ == PermKind::D) return negatives % 2 == 0;
    return true;
  }

 private:
  int n_;
  PermKind kind_;
};

void append_factors(const GroupSpec& spec, std::vector<std::shared_ptr<const GroupFactor>>& out) {
  switch (spec.family) {
    case Family::Cyclic:
      out.push_back(std::make_shared<CyclicFactor>(spec.parameter));
      break;
    case Family::CyclicProduct:
      for (int m : spec.moduli) out.push_back(std::make_shared<CyclicFactor>(m));
      break;
    case Family::Dihedral:
      out.push_back(std::make_shared<DihedralFactor>(spec.parameter, false));
      break;
    case Family::CoxeterI2:
      out.push_back(std::make_shared<DihedralFactor>(spec.parameter, true));
      break;
    case Family::CoxeterA:
      out.push_back(std::make_shared<SignedPermutationFactor>(spec.parameter + 1, PermKind::A));
      break;
    case Family::CoxeterB:
      out.push_back(std::make_shared<SignedPermutationFactor>(spec.parameter, PermKind::B));
      break;
    case Family::CoxeterD:
      out.push_back(std::make_shared<SignedPermutationFactor>(spec.parameter, PermKind::D));
      break;
    case Family::CoxeterProduct:
      for (const auto& f : spec.factors) append_factors(f, out);
      break;
  }
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::cyclic(int m) { return {Family::Cyclic, m, {}, {}}; }
GroupSpec GroupSpec::cyclic_product(std::vector<int> moduli) {
  return {Family::CyclicProduct, 0, std::move(moduli), {}};
}
GroupSpec GroupSpec::dihedral(int m) { return {Family::Dihedral, m, {}, {}}; }
GroupSpec GroupSpec::coxeter_a(int rank) { return {Family::CoxeterA, rank, {}, {}}; }
GroupSpec GroupSpec::coxeter_b(int rank) { return {Family::CoxeterB, rank, {}, {}}; }
GroupSpec GroupSpec::coxeter_d(int rank) { return {Family::CoxeterD, rank, {}, {}}; }
GroupSpec GroupSpec::coxeter_i2(int m) { return {Family::CoxeterI2, m, {}, {}}; }
GroupSpec GroupSpec::coxeter_product(std::vector<GroupSpec> factors) {
  return {Family::CoxeterProduct, 0, {}, std::move(factors)};
}

bool GroupSpec::is_coxeter() const {
  switch (family) {
    case Family::CoxeterA:
    case Family::CoxeterB:
    case Family::CoxeterD:
    case Family::CoxeterI2:
    case Family::CoxeterProduct:
      return true;
    default:
      return false;
  }
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::Cyclic:
      return "Z" + std::to_string(parameter);
    case Family::CyclicProduct: {
      std::string out;
      for (std::size_t i = 0; i < moduli.size(); ++i) out += (i ? "xZ" : "Z") + std::to_string(moduli[i]);
      return out;
    }
    case Family::Dihedral:
      return "Dih" + std::to_string(parameter);
    case Family::CoxeterA:
      return "A" + std::to_string(parameter);
    case Family::CoxeterB:
      return "B" + std::to_string(parameter);
    case Family::CoxeterD:
      return "D" + std::to_string(parameter);
    case Family::CoxeterI2:
      return "I2(" + std::to_string(parameter) + ")";
    case Family::CoxeterProduct: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "x" : "") + factors[i].name();
      return out;
    }
  }
  return "?";
}

void GroupSpec::validate() const {
  auto require = [this](bool ok, const char* what) {
    if (!ok) throw InvalidSpec(name() + ": " + what);
  };
  switch (family) {
    case Family::Cyclic:
      require(parameter >= 1, "cyclic order must be positive");
      break;
    case Family::CyclicProduct:
      require(!moduli.empty(), "cyclic product needs at least one modulus");
      for (int m : moduli) require(m > 1, "cyclic product moduli must exceed 1");
      break;
    case Family::Dihedral:
      require(parameter >= 2, "dihedral parameter must be at least 2");
      break;
    case Family::CoxeterA:
      require(parameter >= 1, "type A rank must be at least 1");
      break;
    case Family::CoxeterB:
      require(parameter >= 2, "type B rank must be at least 2");
      break;
    case Family::CoxeterD:
      require(parameter >= 4, "type D rank must be at least 4");
      break;
    case Family::CoxeterI2:
      require(parameter >= 3, "I2(m) needs m >= 3");
      break;
    case Family::CoxeterProduct:
      require(!factors.empty(), "Coxeter product must be non-empty");
      for (const auto& f : factors) {
        require(f.is_coxeter() && f.family != Family::CoxeterProduct,
                "Coxeter product factors must be irreducible Coxeter specs");
        f.validate();
      }
      break;
  }
}

std::optional<std::uint64_t> GroupSpec::predicted_order() const {
  using u128 = boost::multiprecision::uint128_t;
  constexpr u128 limit = ~std::uint64_t{0};
  auto factorial = [&](int n) -> std::optional<u128> {
    u128 out = 1;
    for (int i = 2; i <= n; ++i) {
      out *= static_cast<u128>(i);
      if (out > limit) return std::nullopt;
    }
    return out;
  };
  auto with_power_of_two = [&](std::optional<u128> base, int bits) -> std::optional<std::uint64_t> {
    if (!base || bits >= 64) return std::nullopt;
    const u128 out = *base << bits;
    if (out > limit) return std::nullopt;
    return static_cast<std::uint64_t>(out);
  };
  switch (family) {
    case Family::Cyclic:
      return static_cast<std::uint64_t>(parameter);
    case Family::Dihedral:
    case Family::CoxeterI2:
      return 2 * static_cast<std::uint64_t>(parameter);
    case Family::CoxeterA:
      return with_power_of_two(factorial(parameter + 1), 0);
    case Family::CoxeterB:
      return with_power_of_two(factorial(parameter), parameter);
    case Family::CoxeterD:
      return with_power_of_two(factorial(parameter), parameter - 1);
    case Family::CyclicProduct: {
      u128 out = 1;
      for (int m : moduli) {
        out *= static_cast<u128>(m);
        if (out > limit) return std::nullopt;
      }
      return static_cast<std::uint64_t>(out);
    }
    case Family::CoxeterProduct: {
      u128 out = 1;
      for (const auto& f : factors) {
        const auto part = f.predicted_order();
        if (!part) return std::nullopt;
        out *= *part;
        if (out > limit) return std::nullopt;
      }
      return static_cast<std::uint64_t>(out);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Words and elements

std::string to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ' ';
    out << 's' << word[i].generator + 1;
    if (word[i].sign < 0) out << "^-1";
  }
  return out.str();
}

std::string to_string(const Element& element) {
  std::ostringstream out;
  out << '[';
  const auto code = element.code();
  for (std::size_t i = 0; i < code.size(); ++i) out << (i ? ", " : "") << code[i];
  out << ']';
  return out.str();
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (std::int32_t v : e.code()) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// ConcreteGroup

Element ConcreteGroup::multiply(const Element& a, const Element& b) const {
  Element out(Element::Storage(a.size()));
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const std::size_t w = factors_[f]->width();
    factors_[f]->multiply(a.code().subspan(offsets_[f], w), b.code().subspan(offsets_[f], w),
                          out.code().subspan(offsets_[f], w));
  }
  return out;
}

Element ConcreteGroup::inverse(const Element& a) const {
  Element out(Element::Storage(a.size()));
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const std::size_t w = factors_[f]->width();
    factors_[f]->inverse(a.code().subspan(offsets_[f], w), out.code().subspan(offsets_[f], w));
  }
  return out;
}

Element ConcreteGroup::apply(const Element& g, Letter letter) const {
  const Element& gen = generators_.at(static_cast<std::size_t>(letter.generator));
  if (letter.sign > 0 || involution_[static_cast<std::size_t>(letter.generator)]) return multiply(g, gen);
  return multiply(g, inverse(gen));
}

Element ConcreteGroup::evaluate(const Word& word) const {
  Element g = identity_;
  for (const Letter& letter : word) {
    if (letter.generator < 0 || letter.generator >= generator_count())
      throw InvalidSpec("letter refers to a generator the group does not have");
    g = apply(g, letter);
  }
  return g;
}

Element ConcreteGroup::step(const Element& g, std::size_t k, std::uint64_t& index) const {
  const std::size_t f = letter_factor_[k];
  const std::size_t off = offsets_[f];
  const std::size_t w = factors_[f]->width();
  Element out = g;
  const auto before = g.code().subspan(off, w);
  const auto after = out.code().subspan(off, w);
  factors_[f]->multiply(before, letter_element_[k].code().subspan(off, w), after);
  index += (factors_[f]->dense_index(after) - factors_[f]->dense_index(before)) * strides_[f];
  return out;
}

std::uint64_t ConcreteGroup::dense_index(const Element& e) const {
  std::uint64_t index = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    index = index * factors_[f]->index_space() +
            factors_[f]->dense_index(e.code().subspan(offsets_[f], factors_[f]->width()));
  }
  return index;
}

bool ConcreteGroup::contains(const Element& e) const {
  if (e.size() != identity_.size()) return false;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (!factors_[f]->contains(e.code().subspan(offsets_[f], factors_[f]->width()))) return false;
  }
  return true;
}

ConcreteGroup build_group(const GroupSpec& spec, std::uint64_t cap) {
  spec.validate();
  const auto predicted = spec.predicted_order();
  if (!predicted || *predicted > cap) {
    throw CapExceeded(spec.name() + ": group order exceeds the enumeration cap of " + std::to_string(cap));
  }

  ConcreteGroup group;
  group.spec_ = spec;
  detail::append_factors(spec, group.factors_);

  std::size_t width = 0;
  for (const auto& f : group.factors_) {
    group.offsets_.push_back(width);
    width += f->width();
  }
  group.identity_ = Element(Element::Storage(width));
  for (std::size_t f = 0; f < group.factors_.size(); ++f) {
    group.factors_[f]->identity(group.identity_.code().subspan(group.offsets_[f], group.factors_[f]->width()));
  }

  long double space = 1;
  std::vector<std::size_t> generator_factor;
  for (std::size_t f = 0; f < group.factors_.size(); ++f) {
    const auto& factor = group.factors_[f];
    group.order_ *= factor->order();
    group.index_space_ *= factor->index_space();
    space *= static_cast<long double>(factor->index_space());
    for (const auto& local : factor->generators()) {
      Element gen = group.identity_;
      std::copy(local.begin(), local.end(), gen.code().begin() + static_cast<std::ptrdiff_t>(group.offsets_[f]));
      group.generators_.push_back(std::move(gen));
      generator_factor.push_back(f);
    }
  }
  group.strides_.assign(group.factors_.size(), 1);
  for (std::size_t f = group.factors_.size(); f-- > 1;) {
    group.strides_[f - 1] = group.strides_[f] * group.factors_[f]->index_space();
  }
  if (space > 1.8e19L) group.index_space_ = 0;  // no dense index; callers fall back to hashing

  for (int g = 0; g < group.generator_count(); ++g) {
    const Element& gen = group.generators_[static_cast<std::size_t>(g)];
    const bool involution = group.multiply(gen, gen) == group.identity_;
    group.involution_.push_back(involution);
    group.alphabet_.push_back({g, +1});
    group.letter_factor_.push_back(generator_factor[static_cast<std::size_t>(g)]);
    group.letter_element_.push_back(gen);
    if (!involution) {
      group.alphabet_.push_back({g, -1});
      group.letter_factor_.push_back(generator_factor[static_cast<std::size_t>(g)]);
      group.letter_element_.push_back(group.inverse(gen));
    }
  }
  return group;
}

// ---------------------------------------------------------------------------
// Presentations

namespace {

struct GeneratorBlock {
  int first = 0;
  int count = 0;
  bool self_inverse_letters = false;  // Coxeter reflections: signs normalized to +1
};

Word power(Letter letter, int exponent) { return Word(static_cast<std::size_t>(exponent), letter); }

void append_coxeter_block(const GroupSpec& spec, int first, Presentation& out) {
  const auto m = coxeter_matrix(spec);
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) out.relators.push_back(power({first + i, 1}, 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Word r;
      for (int k = 0; k < m[i][j]; ++k) {
        r.push_back({first + i, 1});
        r.push_back({first + j, 1});
      }
      out.relators.push_back(std::move(r));
    }
  }
}

}  // namespace

std::vector<std::vector<int>> coxeter_matrix(const GroupSpec& spec) {
  spec.validate();
  auto chain = [](int n) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
    return m;
  };
  switch (spec.family) {
    case Family::CoxeterA:
      return chain(spec.parameter);
    case Family::CoxeterB: {
      auto m = chain(spec.parameter);
      const int n = spec.parameter;
      m[n - 2][n - 1] = m[n - 1][n - 2] = 4;
      return m;
    }
    case Family::CoxeterD: {
      auto m = chain(spec.parameter);
      const int n = spec.parameter;
      m[n - 2][n - 1] = m[n - 1][n - 2] = 2;
      m[n - 3][n - 1] = m[n - 1][n - 3] = 3;
      return m;
    }
    case Family::CoxeterI2:
      return {{1, spec.parameter}, {spec.parameter, 1}};
    case Family::CoxeterProduct: {
      std::vector<std::vector<int>> blocks;
      std::vector<std::vector<std::vector<int>>> parts;
      std::size_t total = 0;
      for (const auto& f : spec.factors) {
        parts.push_back(coxeter_matrix(f));
        total += parts.back().size();
      }
      std::vector<std::vector<int>> m(total, std::vector<int>(total, 2));
      std::size_t offset = 0;
      for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.size(); ++i)
          for (std::size_t j = 0; j < p.size(); ++j) m[offset + i][offset + j] = p[i][j];
        offset += p.size();
      }
      return m;
    }
    default:
      throw InvalidSpec(spec.name() + " is not a Coxeter group");
  }
}

Presentation presentation_of(const GroupSpec& spec) {
  spec.validate();
  Presentation out;
  std::vector<GeneratorBlock> blocks;

  switch (spec.family) {
    case Family::Cyclic:
      out.generator_count = 1;
      out.relators.push_back(power({0, 1}, spec.parameter));
      blocks.push_back({0, 1, false});
      break;
    case Family::CyclicProduct:
      for (int m : spec.moduli) {
        const int g = out.generator_count++;
        out.relators.push_back(power({g, 1}, m));
        blocks.push_back({g, 1, false});
      }
      break;
    case Family::Dihedral:
      out.generator_count = 2;
      out.relators.push_back(power({0, 1}, spec.parameter));
      out.relators.push_back(power({1, 1}, 2));
      out.relators.push_back({{0, 1}, {1, 1}, {0, 1}, {1, 1}});
      break;
    case Family::CoxeterProduct:
      for (const auto& f : spec.factors) {
        const int first = out.generator_count;
        append_coxeter_block(f, first, out);
        const int count = static_cast<int>(coxeter_matrix(f).size());
        out.generator_count += count;
        blocks.push_back({first, count, true});
      }
      break;
    default:  // irreducible Coxeter
      append_coxeter_block(spec, 0, out);
      out.generator_count = static_cast<int>(coxeter_matrix(spec).size());
      break;
  }

  // Generators of distinct direct factors commute.
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
      for (int i = 0; i < blocks[x].count; ++i) {
        for (int j = 0; j < blocks[y].count; ++j) {
          const int a = blocks[x].first + i;
          const int b = blocks[y].first + j;
          const int inv_a = blocks[x].self_inverse_letters ? 1 : -1;
          const int inv_b = blocks[y].self_inverse_letters ? 1 : -1;
          out.relators.push_back({{a, 1}, {b, 1}, {a, inv_a}, {b, inv_b}});
        }
      }
    }
  }
  return out;
}

bool has_odd_relator(const Presentation& presentation) {
  return std::any_of(presentation.relators.begin(), presentation.relators.end(),
                     [](const Word& r) { return r.size() % 2 == 1; });
}

}  // namespace braidwalk
