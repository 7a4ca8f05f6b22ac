#include <doctest.h>
#include "braidwalk/limits.hpp"
#include "braidwalk/oracles.hpp"
#include "braidwalk/walk.hpp"

#include <cmath>

using namespace braidwalk;

namespace {

struct Setup {
  CayleyGraph graph;
  Presentation presentation;
};

Setup setup(const GroupSpec& spec) { return {build_cayley(spec), presentation_of(spec)}; }

double max_abs_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_SUITE("walk") {

TEST_CASE("uniform step distributions") {
  const ConcreteGroup z5 = build_group(GroupSpec::cyclic(5));
  const StepDistribution d = uniform_step_distribution(z5);
  CHECK(d.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(d.hold == 0);
  const StepDistribution lazy = uniform_step_distribution(z5, Rational(1, 4));
  CHECK(lazy.weight(0) == Rational(3, 8));
  const ConcreteGroup dih = build_group(GroupSpec::dihedral(4));
  CHECK(uniform_step_distribution(dih).weights == std::vector<Rational>(3, Rational(1, 3)));
  CHECK_THROWS_AS(uniform_step_distribution(z5, 1), InvalidSpec);
  CHECK_THROWS_AS(uniform_step_distribution(z5, -1), InvalidSpec);
}

TEST_CASE("weighted step distributions share mass between a letter and its inverse") {
  const ConcreteGroup dih = build_group(GroupSpec::dihedral(4));
  const StepDistribution d = weighted_step_distribution(dih, {1, 2});
  CHECK(d.weights == std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 2)});
  const StepDistribution lazy = weighted_step_distribution(dih, {1, 2}, Rational(1, 2));
  CHECK(lazy.weights == std::vector<Rational>{Rational(1, 8), Rational(1, 8), Rational(1, 4)});
  const StepDistribution off = weighted_step_distribution(dih, {0, 1});
  CHECK(off.weights == std::vector<Rational>{0, 0, 1});
  CHECK_THROWS_AS(weighted_step_distribution(dih, {0, 0}), InvalidSpec);
  CHECK_THROWS_AS(weighted_step_distribution(dih, {1}), InvalidSpec);
  CHECK_THROWS_AS(weighted_step_distribution(dih, {-1, 2}), InvalidSpec);
}

TEST_CASE("validation rejects malformed and asymmetric kernels") {
  const ConcreteGroup z5 = build_group(GroupSpec::cyclic(5));
  CHECK_THROWS_AS(validate(StepDistribution{{Rational(2, 3), Rational(1, 3)}, 0}, z5), InvalidSpec);
  CHECK_THROWS_AS(validate(StepDistribution{{Rational(1, 2), Rational(1, 4)}, 0}, z5), InvalidSpec);
  CHECK_THROWS_AS(validate(StepDistribution{{1}, 0}, z5), InvalidSpec);
  CHECK_THROWS_AS(validate(StepDistribution{{Rational(3, 4), Rational(-1, 4)}, Rational(1, 2)}, z5), InvalidSpec);
  CHECK_NOTHROW(validate(StepDistribution{{Rational(1, 4), Rational(1, 4)}, Rational(1, 2)}, z5));
}

TEST_CASE("transition matrices are doubly stochastic") {
  for (const GroupSpec& spec : {GroupSpec::cyclic(7), GroupSpec::dihedral(5), GroupSpec::coxeter_b(3),
                                GroupSpec::cyclic_product({2, 3, 5})}) {
    const CayleyGraph graph = build_cayley(spec);
    CHECK(is_doubly_stochastic(graph, uniform_step_distribution(graph.group())));
    CHECK(is_doubly_stochastic(graph, uniform_step_distribution(graph.group(), Rational(1, 3))));
  }
  CHECK_THROWS_AS(is_doubly_stochastic(build_cayley(GroupSpec::coxeter_a(6)),
                                       uniform_step_distribution(build_group(GroupSpec::coxeter_a(6)))),
                  CapExceeded);
}

TEST_CASE("simulate") {
  const CayleyGraph graph = build_cayley(GroupSpec::coxeter_a(3));
  const StepDistribution dist = uniform_step_distribution(graph.group());

  const WalkResult empty = simulate(graph, dist, 0, 1, Functional::length());
  CHECK(empty.samples == std::vector<double>{0.0});
  CHECK(empty.visited == std::vector<std::uint32_t>{0});

  const WalkResult a = simulate(graph, dist, 500, 42, Functional::length());
  const WalkResult b = simulate(graph, dist, 500, 42, Functional::length());
  const WalkResult c = simulate(graph, dist, 500, 43, Functional::length());
  CHECK(a.samples == b.samples);
  CHECK(a.visited == b.visited);
  CHECK(a.visited != c.visited);
  REQUIRE(a.visited.size() == 501);
  CHECK(a.seed == 42);
  CHECK(a.steps == 500);
  for (std::size_t i = 1; i < a.visited.size(); ++i) {
    bool adjacent = false;
    for (auto u : graph.neighbors(a.visited[i - 1])) adjacent |= u == a.visited[i];
    CHECK(adjacent);
    CHECK(static_cast<int>(a.samples[i]) % 2 == static_cast<int>(i % 2));
  }

  const WalkResult quiet = simulate(graph, dist, 500, 42, Functional::length(), false);
  CHECK(quiet.visited.empty());
  CHECK(quiet.samples == a.samples);
  CHECK_THROWS_AS(simulate(graph, dist, -1, 42, Functional::length()), InvalidSpec);
}

TEST_CASE("the walk on Z2 is forced") {
  const CayleyGraph graph = build_cayley(GroupSpec::cyclic(2));
  const WalkResult r = simulate(graph, uniform_step_distribution(graph.group()), 9, 123, Functional::length());
  CHECK(r.samples == std::vector<double>{0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  const Presentation p = presentation_of(GroupSpec::cyclic(2));
  const EmpiricalReport report =
      empirical_vs_limit(graph, p, uniform_step_distribution(graph.group()), Functional::length(), 10, 50, 1, 1);
  for (const auto& row : report.rows) CHECK(row.tv_distance == 0.0);
}

TEST_CASE("long walks on S3 and Z5") {
  const Setup s3 = setup(GroupSpec::coxeter_a(2));
  const WalkResult r = simulate(s3.graph, uniform_step_distribution(s3.graph.group()), 100000, 5, Functional::length(),
                                false);
  double sum = 0;
  double sum_sq = 0;
  std::size_t count = 0;
  for (std::size_t i = 1000; i < r.samples.size(); i += 2) {
    sum += r.samples[i];
    sum_sq += r.samples[i] * r.samples[i];
    ++count;
  }
  const double mean = sum / count;
  const double sd = std::sqrt(sum_sq / count - mean * mean);
  CHECK(std::abs(mean - 4.0 / 3.0) < 3 * 5 * sd / std::sqrt(static_cast<double>(count)));

  const EmpiricalReport tv = empirical_vs_limit(s3.graph, s3.presentation, uniform_step_distribution(s3.graph.group()),
                                                Functional::length(), 64, 100000, kDefaultSeed, 0);
  CHECK(tv.rows[1].tv_distance < 0.02);

  const Setup z5 = setup(GroupSpec::cyclic(5));
  const EmpiricalReport mean5 = empirical_vs_limit(z5.graph, z5.presentation, uniform_step_distribution(z5.graph.group()),
                                                   Functional::length(), 200, 100000, kDefaultSeed, 0);
  CHECK(std::abs(mean5.rows[1].empirical_mean - 1.2) < 3 * mean5.rows[1].standard_error);
}

TEST_CASE("holding walks may stay put") {
  const CayleyGraph graph = build_cayley(GroupSpec::cyclic(4));
  const WalkResult r = simulate(graph, uniform_step_distribution(graph.group(), Rational(9, 10)), 200, 7,
                                Functional::length());
  int stays = 0;
  for (std::size_t i = 1; i < r.visited.size(); ++i) stays += r.visited[i] == r.visited[i - 1];
  CHECK(stays > 100);
}

TEST_CASE("limiting expectations") {
  for (int m = 2; m <= 16; ++m) {
    const Setup s = setup(GroupSpec::cyclic(m));
    const LimitValue v = limiting_expectation(s.graph, s.presentation, Functional::length());
    const LimitValue closed = cyclic_limit(m);
    CHECK(v.even == closed.even);
    CHECK(v.odd == closed.odd);
  }
  const Setup s3 = setup(GroupSpec::coxeter_a(2));
  CHECK(limiting_expectation(s3.graph, s3.presentation, Functional::length()) ==
        LimitValue::parity_split(Rational(4, 3), Rational(5, 3)));
  const LimitValue lazy = limiting_expectation(s3.graph, s3.presentation,
                                               uniform_step_distribution(s3.graph.group(), Rational(1, 2)),
                                               Functional::length());
  CHECK(lazy == LimitValue::single(Rational(3, 2)));
  const Setup z7 = setup(GroupSpec::cyclic(7));
  CHECK(limiting_expectation(z7.graph, z7.presentation, Functional::length()).kind == LimitValue::Kind::Single);
  CHECK(parity_split_applies(s3.presentation, uniform_step_distribution(s3.graph.group())));
  CHECK_FALSE(parity_split_applies(s3.presentation, uniform_step_distribution(s3.graph.group(), Rational(1, 5))));
  CHECK_FALSE(parity_split_applies(z7.presentation, uniform_step_distribution(z7.graph.group())));
}

TEST_CASE("exact laws match the dense transition matrix") {
  for (const GroupSpec& spec : {GroupSpec::cyclic(9), GroupSpec::dihedral(4), GroupSpec::coxeter_a(3),
                                GroupSpec::coxeter_b(2), GroupSpec::cyclic_product({2, 3})}) {
    CAPTURE(spec.name());
    const CayleyGraph graph = build_cayley(spec);
    const StepDistribution uniform = uniform_step_distribution(graph.group());
    const StepDistribution lazy = uniform_step_distribution(graph.group(), Rational(1, 3));
    std::vector<Rational> weights(static_cast<std::size_t>(graph.group().generator_count()));
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = static_cast<long long>(i + 1);
    const StepDistribution weighted = weighted_step_distribution(graph.group(), weights, Rational(1, 7));
    for (long long steps : {0, 1, 2, 5, 17}) {
      CHECK(max_abs_difference(exact_law(graph, uniform, steps), oracle::dense_chain_law(graph, uniform, steps)) <
            1e-12);
      CHECK(max_abs_difference(exact_law(graph, lazy, steps), oracle::dense_chain_law(graph, lazy, steps)) < 1e-12);
      CHECK(max_abs_difference(exact_law(graph, weighted, steps), oracle::dense_chain_law(graph, weighted, steps)) <
            1e-12);
    }
  }
}

TEST_CASE("exact laws approach the limit law") {
  const CayleyGraph graph = build_cayley(GroupSpec::coxeter_a(2));
  const StepDistribution dist = uniform_step_distribution(graph.group());
  for (long long steps : {400, 401}) {
    const auto law = exact_law(graph, dist, steps);
    CHECK(total_variation(law, limit_law(graph, true, steps)) < 1e-9);
    CHECK(total_variation(law, limit_law(graph, false, steps)) > 0.4);
  }
  const auto lazy = exact_law(graph, uniform_step_distribution(graph.group(), Rational(1, 2)), 400);
  CHECK(total_variation(lazy, limit_law(graph, false, 400)) < 1e-9);
  CHECK_THROWS_AS(total_variation(std::vector<double>{1.0}, std::vector<double>{0.5, 0.5}), InvalidSpec);
}

TEST_CASE("limit laws") {
  const CayleyGraph graph = build_cayley(GroupSpec::cyclic(4));
  CHECK(limit_law(graph, true, 10) == std::vector<double>{0.5, 0.0, 0.0, 0.5});
  CHECK(limit_law(graph, true, 11) == std::vector<double>{0.0, 0.5, 0.5, 0.0});
  CHECK(limit_law(graph, false, 11) == std::vector<double>(4, 0.25));
}

TEST_CASE("empirical reports") {
  const Setup s = setup(GroupSpec::cyclic(6));
  const StepDistribution dist = uniform_step_distribution(s.graph.group());
  const EmpiricalReport one = empirical_vs_limit(s.graph, s.presentation, dist, Functional::length(), 60, 20000, 9, 1);
  const EmpiricalReport three = empirical_vs_limit(s.graph, s.presentation, dist, Functional::length(), 60, 20000, 9, 3);
  REQUIRE(one.rows.size() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    const EmpiricalRow& row = one.rows[r];
    CHECK(row.step == 59 + static_cast<long long>(r));
    CHECK(row.empirical_mean == three.rows[r].empirical_mean);
    CHECK(row.tv_distance == three.rows[r].tv_distance);
    CHECK(row.parity == (row.step % 2 == 0 ? "even" : "odd"));
    CHECK(row.exact_limit == cyclic_limit(6).at_parity(row.step));
    CHECK(std::abs(row.empirical_mean - to_double(row.exact_limit)) < 5 * row.standard_error);
    CHECK(row.exact_tv >= 0);
    CHECK(row.exact_tv < 1e-6);
  }
  CHECK(one.trials == 20000);
  CHECK(one.seed == 9);

  const EmpiricalReport start = empirical_vs_limit(s.graph, s.presentation, dist, Functional::length(), 0, 10, 9, 1);
  REQUIRE(start.rows.size() == 2);
  CHECK(start.rows[0].step == 0);
  CHECK(start.rows[0].empirical_mean == 0.0);
  CHECK(start.rows[0].standard_error == 0.0);

  const Setup z7 = setup(GroupSpec::cyclic(7));
  const EmpiricalReport single = empirical_vs_limit(z7.graph, z7.presentation,
                                                    uniform_step_distribution(z7.graph.group()),
                                                    Functional::length(), 10, 100, 1, 1);
  CHECK(single.rows[0].parity == "all");
  CHECK_THROWS_AS(empirical_vs_limit(s.graph, s.presentation, dist, Functional::length(), 5, 0), InvalidSpec);
}

TEST_CASE("large groups report no exact distance") {
  const Setup s = setup(GroupSpec::coxeter_a(6));
  const EmpiricalReport report = empirical_vs_limit(s.graph, s.presentation, uniform_step_distribution(s.graph.group()),
                                                    Functional::length(), 3, 50, 1, 1);
  for (const auto& row : report.rows) CHECK(row.exact_tv == -1);
}

}
