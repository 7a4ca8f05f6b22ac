#include <doctest.h>
#include "braidwalk/limits.hpp"
#include "braidwalk/oracles.hpp"
#include "braidwalk/walk.hpp"

#include <algorithm>

using namespace braidwalk;

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

IntPolynomial poly(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (long long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

LimitValue enumerated_limit(const GroupSpec& spec) {
  const CayleyGraph graph = build_cayley(spec);
  return limiting_expectation(graph, presentation_of(spec), Functional::length());
}

}  // namespace

TEST_SUITE("limits") {

TEST_CASE("cyclic limits") {
  CHECK(cyclic_limit(5) == LimitValue::single(Rational(6, 5)));
  CHECK(cyclic_limit(6) == LimitValue::parity_split(Rational(4, 3), Rational(5, 3)));
  CHECK(cyclic_limit(8) == LimitValue::parity_split(2, 2));
  CHECK(cyclic_limit(2) == LimitValue::parity_split(0, 1));
  CHECK(cyclic_limit(8).to_string() == "2");
  CHECK(cyclic_limit(6).to_string() == "(4/3, 5/3)");
  CHECK_THROWS_AS(cyclic_limit(1), InvalidSpec);
}

TEST_CASE("cyclic limits average the length over the reachable class") {
  for (int m = 2; m <= 40; ++m) {
    const LimitValue v = cyclic_limit(m);
    if (m % 2 == 1) {
      CHECK(v.even == oracle::cyclic_average_length(m));
    } else {
      CHECK((v.even + v.odd) / 2 == oracle::cyclic_average_length(m));
    }
  }
}

TEST_CASE("product limits") {
  const Rational thirds[] = {Rational(2, 3), Rational(2, 3)};
  CHECK(product_limit(thirds) == Rational(4, 3));
  const Rational mixed[] = {Rational(1, 2), Rational(1)};
  CHECK(product_limit(mixed) == Rational(3, 2));
  const Rational trivial[] = {Rational(0), Rational(5, 4)};
  CHECK(product_limit(trivial) == Rational(5, 4));

  CHECK(cyclic_product_limit(std::vector<int>{3, 3}) == Rational(4, 3));
  CHECK(cyclic_product_limit(std::vector<int>{2, 2}) == 1);
  CHECK(cyclic_product_limit(std::vector<int>{2, 4}) == Rational(3, 2));
  CHECK_THROWS_AS(cyclic_product_limit(std::vector<int>{3}), InvalidSpec);
  CHECK_THROWS_AS(cyclic_product_limit(std::vector<int>{3, 1}), InvalidSpec);
}

TEST_CASE("cyclic product limits agree with enumeration") {
  for (const std::vector<int>& moduli : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 5}, {4, 6}, {2, 2, 2}, {5, 7}}) {
    const LimitValue e = enumerated_limit(GroupSpec::cyclic_product(moduli));
    CHECK(e.coincides());
    CHECK(e.even == cyclic_product_limit(moduli));
  }
}

TEST_CASE("degree table rows") {
  CHECK(degrees_of(CoxeterType::parse("A3")) == std::vector<int>{2, 3, 4});
  CHECK(degrees_of(CoxeterType::parse("B3")) == std::vector<int>{2, 4, 6});
  CHECK(degrees_of(CoxeterType::parse("C3")) == std::vector<int>{2, 4, 6});
  CHECK(degrees_of(CoxeterType::parse("E8")) == std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
  CHECK(degrees_of(CoxeterType::parse("H3")) == std::vector<int>{2, 6, 10});
  CHECK(degrees_of(CoxeterType::parse("I2(7)")) == std::vector<int>{2, 7});
  CHECK(sorted(degrees_of(CoxeterType::parse("D4"))) == std::vector<int>{2, 4, 4, 6});
  CHECK(sorted(degrees_of(CoxeterType::parse("D5"))) == std::vector<int>{2, 4, 5, 6, 8});
  const auto product = parse_coxeter_product("A1xB2");
  CHECK(sorted(degrees_of(product)) == std::vector<int>{2, 2, 4});
  CHECK(parse_coxeter_product("A1*I2(5)").size() == 2);
}

TEST_CASE("degree products give the known orders and reflection counts") {
  for (const char* key : {"A1", "A7", "B5", "D6", "E6", "E7", "E8", "F4", "G2", "H3", "H4", "I2(9)"}) {
    const CoxeterType type = CoxeterType::parse(key);
    const auto d = degrees_of(type);
    BigInt order = 1;
    for (int x : d) order *= x;
    CHECK(order == known_order(type));
    CHECK(reflection_count(d) == known_reflection_count(type));
  }
}

TEST_CASE("type parsing") {
  CHECK(CoxeterType::parse("I2(5)") == CoxeterType{'I', 5});
  CHECK(CoxeterType::parse("I2(5)").name() == "I2(5)");
  CHECK(CoxeterType::parse("B3").name() == "B3");
  CHECK(CoxeterType::parse("G2").group_spec() == GroupSpec::coxeter_i2(6));
  CHECK(CoxeterType::parse("A3").group_spec() == GroupSpec::coxeter_a(3));
  CHECK_FALSE(CoxeterType::parse("E6").group_spec().has_value());
  for (const char* bad : {"", "X3", "A0", "I2(2)", "I2(x)", "B"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(degrees_of(CoxeterType::parse(bad)), InvalidSpec);
  }
  CHECK_THROWS_AS(degrees_of(CoxeterType::parse("D3")), InvalidSpec);
  CHECK_THROWS_AS(degrees_of(CoxeterType::parse("E9")), InvalidSpec);
}

TEST_CASE("degree table parsing") {
  const DegreeTable table = DegreeTable::parse("# comment\nA n>=1 2,3,...,n+1\nX - 2,5\n");
  CHECK(table.degrees(CoxeterType{'A', 4}) == std::vector<int>{2, 3, 4, 5});
  CHECK(table.row_keys() == std::vector<std::string>{"A", "X"});
  CHECK_THROWS_AS(DegreeTable::parse("A n>=1\n"), InvalidSpec);
  CHECK_THROWS_AS(DegreeTable::parse("A n>=1 2,...,n\n"), InvalidSpec);
  CHECK_THROWS_AS(DegreeTable::parse("A n>=1 2,4,...,7\n").degrees(CoxeterType{'A', 2}), InvalidSpec);
}

TEST_CASE("Poincare polynomials") {
  CHECK(poincare_polynomial(std::vector<int>{2, 3}) == poly({1, 2, 2, 1}));
  CHECK(poincare_polynomial(std::vector<int>{2, 4}) == poly({1, 2, 2, 2, 1}));
  CHECK(poincare_polynomial(std::vector<int>{2}) == poly({1, 1}));
  CHECK(poincare_polynomial(std::vector<int>{1, 2}) == poly({1, 1}));
  CHECK(poincare_polynomial(std::vector<int>{}) == poly({1}));
  CHECK_THROWS_AS(poincare_polynomial(std::vector<int>{0}), InvalidSpec);
}

TEST_CASE("Poincare polynomials match enumerated length histograms") {
  for (const char* key : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2", "I2(5)", "I2(8)"}) {
    CAPTURE(key);
    const CoxeterType type = CoxeterType::parse(key);
    const IntPolynomial p = poincare_polynomial(degrees_of(type));
    CHECK(p == IntPolynomial(oracle::length_histogram(*type.group_spec())));
    CHECK(p.is_palindromic());
    CHECK(p.degree() == reflection_count(degrees_of(type)));
  }
}

TEST_CASE("length sums") {
  const LengthSums a3 = length_sums(std::vector<int>{2, 3, 4});
  CHECK(a3.total == 72);
  CHECK(a3.signed_sum == 0);
  const LengthSums a2 = length_sums(std::vector<int>{2, 3});
  CHECK(a2.total == 9);
  CHECK(a2.signed_sum == -1);
  const LengthSums a1 = length_sums(std::vector<int>{2});
  CHECK(a1.total == 1);
  CHECK(a1.signed_sum == -1);
  const auto e8 = degrees_of(CoxeterType::parse("E8"));
  CHECK(length_sums(e8).total == known_order(CoxeterType{'E', 8}) * 120 / 2);
  CHECK(length_sums(e8).signed_sum == 0);
}

TEST_CASE("Coxeter limits") {
  CHECK(coxeter_limit(CoxeterType::parse("B3")).to_string() == "9/2");
  CHECK(coxeter_limit(CoxeterType::parse("I2(5)")) == LimitValue::parity_split(Rational(12, 5), Rational(13, 5)));
  CHECK(coxeter_limit(CoxeterType::parse("H3")).to_string() == "15/2");
  CHECK(coxeter_limit(CoxeterType::parse("A1")) == LimitValue::parity_split(0, 1));
  CHECK(coxeter_limit(CoxeterType::parse("A2")) == LimitValue::parity_split(Rational(4, 3), Rational(5, 3)));
  CHECK(coxeter_limit(CoxeterType::parse("E8")).to_string() == "60");
  CHECK(coxeter_limit(parse_coxeter_product("A1xB3")).to_string() == "5");
  CHECK(coxeter_limit(parse_coxeter_product("A1xA1")).to_string() == "1");
  CHECK_THROWS_AS(coxeter_limit(std::vector<CoxeterType>{}), InvalidSpec);
}

TEST_CASE("Coxeter limits agree with the degree form and with enumeration") {
  for (const char* key : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "I2(3)", "I2(4)", "I2(7)", "I2(10)", "G2"}) {
    CAPTURE(key);
    const CoxeterType type = CoxeterType::parse(key);
    const LimitValue closed = coxeter_limit(type);
    const LimitValue from_degrees = coxeter_limit_from_degrees(degrees_of(type));
    CHECK(closed.even == from_degrees.even);
    CHECK(closed.odd == from_degrees.odd);
    const LimitValue walked = enumerated_limit(*type.group_spec());
    CHECK(closed.even == walked.even);
    CHECK(closed.odd == walked.odd);
  }
  for (const char* key : {"A1xA2", "A1xB2", "B2xI2(5)", "A2xA2"}) {
    CAPTURE(key);
    const auto product = parse_coxeter_product(key);
    std::vector<GroupSpec> factors;
    for (const auto& t : product) factors.push_back(*t.group_spec());
    const LimitValue walked = enumerated_limit(GroupSpec::coxeter_product(factors));
    CHECK(coxeter_limit(product).even == walked.even);
    CHECK(coxeter_limit(product).odd == walked.odd);
  }
}

TEST_CASE("exceptional limits for odd dihedral types") {
  for (int m = 3; m <= 15; m += 2) {
    const LimitValue v = coxeter_limit(CoxeterType{'I', m});
    CHECK(v.even == Rational(m, 2) - Rational(1, 2 * m));
    CHECK(v.odd == Rational(m, 2) + Rational(1, 2 * m));
  }
}

}
