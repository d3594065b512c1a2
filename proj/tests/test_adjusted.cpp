#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "adjq/adjusted.hpp"
#include "adjq/error.hpp"
#include "adjq/harness.hpp"
#include "adjq/quantiles.hpp"
#include "test_util.hpp"

using namespace adjq;

TEST_CASE("shape template validation and canonical form") {
    CHECK_THROWS_AS(ShapeFn({}, {}), Error);
    CHECK_THROWS_AS(ShapeFn({0.0}, {1.0}), Error);          // must stay below 1
    CHECK_THROWS_AS(ShapeFn({0.0, 1.0}, {0.6, 0.4}), Error);
    CHECK_THROWS_AS(ShapeFn({1.0, 0.0}, {0.2, 0.4}), Error);
    CHECK_THROWS_AS(ShapeFn({0.0}, {0.0}), Error);          // never rises above 0

    // A vacuous repeated level merges away.
    const ShapeFn s({0.0, 1.0, 2.0}, {0.3, 0.3, 0.6});
    CHECK(s.jump_points() == std::vector<double>{0.0, 2.0});
    CHECK(s.jump_levels() == std::vector<double>{0.3, 0.6});
    CHECK(s.eval(-0.1) == 0.0);
    CHECK(s.eval(0.0) == 0.3);
    CHECK(s.eval(1.9) == 0.3);
    CHECK(s.eval(2.0) == 0.6);
    CHECK(s.eval(100.0) == 0.6);
}

TEST_CASE("handicap validation merges equal values and keeps the tail cut") {
    CHECK_THROWS_AS(HandicapFn({0.0, 0.5}, {0.0, 1.0}), Error);   // cut at 0
    CHECK_THROWS_AS(HandicapFn({0.5, 1.0}, {0.0, 1.0}), Error);   // cut at 1
    CHECK_THROWS_AS(HandicapFn({0.5, 0.6}, {2.0, 1.0}), Error);   // decreasing values

    const HandicapFn c({0.2, 0.5, 0.9}, {1.0, 1.0, 3.0});
    CHECK(c.cut_points() == std::vector<double>{0.5, 0.9});
    CHECK(c.values() == std::vector<double>{1.0, 3.0});
    CHECK(c.eval(0.1) == 1.0);
    CHECK(c.eval(0.5) == 1.0);
    CHECK(c.eval(0.51) == 3.0);
    CHECK(c.eval(0.9) == 3.0);
    CHECK(c.eval(0.91) == std::numeric_limits<double>::infinity());
    CHECK(c.finite_threshold() == 0.9);
}

TEST_CASE("dual shape and dual handicap validation") {
    CHECK_THROWS_AS(DualShapeFn(0.0, {0.0}, {1.0}), Error);   // base must be positive
    CHECK_THROWS_AS(DualShapeFn(0.5, {0.0}, {0.9}), Error);   // must reach 1
    CHECK_THROWS_AS(DualShapeFn(0.5, {0.0, 1.0}, {0.4, 1.0}), Error);

    const DualShapeFn psi(0.25, {-1.0, 0.0, 2.0}, {0.5, 0.5, 1.0});
    CHECK(psi.jump_points() == std::vector<double>{-1.0, 2.0});
    CHECK(psi.jump_levels() == std::vector<double>{0.5, 1.0});
    CHECK(psi.eval(-1.5) == 0.25);
    CHECK(psi.eval(-1.0) == 0.5);
    CHECK(psi.eval(2.0) == 1.0);

    const DualHandicapFn d({0.1, 0.4, 0.7}, {-2.0, -2.0, 0.5});
    CHECK(d.cut_points() == std::vector<double>{0.1, 0.7});
    CHECK(d.values() == std::vector<double>{-2.0, 0.5});
    CHECK(d.eval(0.05) == -std::numeric_limits<double>::infinity());
    CHECK(d.eval(0.1) == -2.0);
    CHECK(d.eval(0.69) == -2.0);
    CHECK(d.eval(0.7) == 0.5);
    CHECK(d.finite_threshold() == 0.1);
}

TEST_CASE("single-jump shape statistic collapses to the lower quantile") {
    for (double alpha : {0.1, 0.5, 0.8}) {
        const ShapeFn s({0.0}, {alpha});
        for (std::uint64_t t = 0; t < 100; ++t) {
            const StepCDF f = random_step_cdf(derive_seed(31, t), 8);
            CHECK(max_adjusted_quantile(f, s) == lower_quantile(f, alpha));
        }
    }
}

TEST_CASE("two-jump shape worked example with grid oracle") {
    const StepCDF f({0.0, 10.0}, {0.5, 1.0});
    const ShapeFn s({0.0, 5.0}, {0.5, 0.9});
    CHECK(max_adjusted_quantile(f, s) == 5.0);
    CHECK(testutil::shape_envelope_grid_oracle(f, s) == doctest::Approx(5.0).epsilon(2e-4));

    const auto report = max_adjusted_quantile_report(f, s);
    CHECK(report.value == 5.0);
    CHECK(report.binding_alpha == 0.9);
    CHECK(report.binding_quantile == 10.0);
}

TEST_CASE("shape statistic is translation equivariant") {
    for (std::uint64_t t = 0; t < 200; ++t) {
        const ShapeFn s = random_shape(derive_seed(32, 2 * t), 5);
        const StepCDF f = random_step_cdf(derive_seed(32, 2 * t + 1), 8);
        const double b = -4.0 + 0.125 * static_cast<double>(t % 64);
        CHECK(max_adjusted_quantile(translate(f, b), s) ==
              doctest::Approx(max_adjusted_quantile(f, s) + b).epsilon(1e-12));
    }
}

TEST_CASE("shape statistic agrees with its grid oracle on random instances") {
    for (std::uint64_t t = 0; t < 50; ++t) {
        const ShapeFn s = random_shape(derive_seed(33, 2 * t), 4);
        const StepCDF f = random_step_cdf(derive_seed(33, 2 * t + 1), 6);
        const double exact = max_adjusted_quantile(f, s);
        const double gridded = testutil::shape_envelope_grid_oracle(f, s);
        CHECK(std::abs(exact - gridded) <= 1e-4);
        CHECK(envelope_holds(f, s, exact + 1e-9));
        CHECK_FALSE(envelope_holds(f, s, exact - 1e-6));
    }
}

TEST_CASE("handicap statistic worked examples") {
    // Zero penalty up to a cutoff reproduces that quantile.
    const HandicapFn c05({0.5}, {0.0});
    for (std::uint64_t t = 0; t < 100; ++t) {
        const StepCDF f = random_step_cdf(derive_seed(34, t), 8);
        CHECK(max_adjusted_quantile(f, c05) == lower_quantile(f, 0.5));
    }

    // The bracket-cutoff scheme: adjust the 50th percentile by 0, the 90th by 5.
    const StepCDF f({0.0, 10.0}, {0.5, 1.0});
    const HandicapFn c({0.5, 0.9}, {0.0, 5.0});
    const auto report = max_adjusted_quantile_report(f, c);
    CHECK(report.value == 5.0);
    CHECK(report.binding_alpha == 0.9);
    CHECK(report.binding_quantile == 10.0);

    // On a point mass every quantile coincides, so the smallest penalty wins.
    const HandicapFn c2({0.3, 0.8}, {-1.5, 2.0});
    CHECK(max_adjusted_quantile(StepCDF::point_mass(4.0), c2) == 4.0 - (-1.5));
}

TEST_CASE("dual shape statistic: single jump reproduces the upper quantile") {
    for (double alpha : {0.2, 0.5, 0.75}) {
        const DualShapeFn psi(alpha, {0.0}, {1.0});
        for (std::uint64_t t = 0; t < 100; ++t) {
            const StepCDF f = random_step_cdf(derive_seed(35, t), 8);
            CHECK(min_adjusted_quantile(f, psi) == upper_quantile(f, alpha));
        }
    }
}

TEST_CASE("dual shape statistic matches its grid oracle and reflection route") {
    for (std::uint64_t t = 0; t < 50; ++t) {
        const DualShapeFn psi = random_dual_shape(derive_seed(36, 2 * t), 4);
        const StepCDF f = random_step_cdf(derive_seed(36, 2 * t + 1), 6);
        const double exact = min_adjusted_quantile(f, psi);
        CHECK(std::abs(exact - testutil::dual_envelope_grid_oracle(f, psi)) <= 1e-4);
        CHECK(envelope_holds(f, psi, exact - 1e-9));
        CHECK_FALSE(envelope_holds(f, psi, exact + 1e-6));
        CHECK(min_adjusted_quantile(f, psi) ==
              -max_adjusted_quantile(reflect(f), primal_of(psi)));
    }

    for (std::uint64_t t = 0; t < 200; ++t) {
        const DualShapeFn psi = random_dual_shape(derive_seed(37, 2 * t), 5);
        const StepCDF f = random_step_cdf(derive_seed(37, 2 * t + 1), 8);
        const double b = -4.0 + 0.125 * static_cast<double>(t % 64);
        CHECK(min_adjusted_quantile(translate(f, b), psi) ==
              doctest::Approx(min_adjusted_quantile(f, psi) + b).epsilon(1e-12));
    }
}

TEST_CASE("dual handicap statistic worked examples") {
    const DualHandicapFn d({0.5}, {0.0});
    for (std::uint64_t t = 0; t < 100; ++t) {
        const StepCDF f = random_step_cdf(derive_seed(38, t), 8);
        CHECK(min_adjusted_quantile(f, d) == upper_quantile(f, 0.5));
    }

    const DualHandicapFn d2({0.3, 0.8}, {-1.5, 2.0});
    CHECK(min_adjusted_quantile(StepCDF::point_mass(4.0), d2) == 4.0 - 2.0);
}

TEST_CASE("shape to handicap conversion follows the inf formula") {
    const ShapeFn s({0.0, 2.0}, {0.3, 0.6});
    const HandicapFn c = handicap_of(s);
    CHECK(c.cut_points() == std::vector<double>{0.3, 0.6});
    CHECK(c.values() == std::vector<double>{0.0, 2.0});
    CHECK(c.eval(0.2) == 0.0);
    CHECK(c.eval(0.3) == 0.0);
    CHECK(c.eval(0.5) == 2.0);
    CHECK(c.eval(0.7) == std::numeric_limits<double>::infinity());

    // The quantile handicap is the single-jump special case, in both directions.
    const ShapeFn one_jump({0.0}, {0.35});
    CHECK(handicap_of(one_jump) == quantile_handicap(0.35));
    CHECK(shape_of(quantile_handicap(0.35)) == one_jump);
}

TEST_CASE("handicap round trip is exact over exhaustive three-cut handicaps") {
    const std::vector<double> cut_grid = {0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875};
    const std::vector<double> value_grid = {-2.0, -1.0, 0.0, 1.0, 2.0};
    const StepCDF probe_a = random_step_cdf(derive_seed(39, 0), 8);
    const StepCDF probe_b = random_step_cdf(derive_seed(39, 1), 8);
    int cases = 0;
    for (std::size_t i = 0; i < cut_grid.size(); ++i) {
        for (std::size_t j = i + 1; j < cut_grid.size(); ++j) {
            for (std::size_t k = j + 1; k < cut_grid.size(); ++k) {
                for (std::size_t p = 0; p < value_grid.size(); ++p) {
                    for (std::size_t q = p + 1; q < value_grid.size(); ++q) {
                        for (std::size_t r = q + 1; r < value_grid.size(); ++r) {
                            const HandicapFn c({cut_grid[i], cut_grid[j], cut_grid[k]},
                                               {value_grid[p], value_grid[q], value_grid[r]});
                            CHECK(handicap_of(shape_of(c)) == c);
                            CHECK(max_adjusted_quantile(probe_a, c) ==
                                  max_adjusted_quantile(probe_a, shape_of(c)));
                            CHECK(max_adjusted_quantile(probe_b, c) ==
                                  max_adjusted_quantile(probe_b, shape_of(c)));
                            ++cases;
                        }
                    }
                }
            }
        }
    }
    CHECK(cases == 350);
}

TEST_CASE("representation equivalence on random instances") {
    for (std::uint64_t t = 0; t < 500; ++t) {
        const ShapeFn s = random_shape(derive_seed(40, 2 * t), 5);
        const StepCDF f = random_step_cdf(derive_seed(40, 2 * t + 1), 8);
        CHECK(max_adjusted_quantile(f, s) ==
              doctest::Approx(max_adjusted_quantile(f, handicap_of(s))).epsilon(1e-12));
        CHECK(shape_of(handicap_of(s)) == s);
    }
}

TEST_CASE("dual of a shape has the mirrored closed form") {
    const ShapeFn s({0.0}, {0.4});
    const DualShapeFn psi = dual_of(s);
    CHECK(psi.base_level() == 0.6);
    CHECK(psi.jump_points() == std::vector<double>{0.0});
    CHECK(psi.jump_levels() == std::vector<double>{1.0});
    CHECK(psi.eval(-0.001) == 0.6);
    CHECK(psi.eval(0.0) == 1.0);

    const ShapeFn s2({-1.0, 2.0}, {0.25, 0.75});
    const DualShapeFn psi2 = dual_of(s2);
    CHECK(psi2.base_level() == 0.25);
    CHECK(psi2.jump_points() == std::vector<double>{-2.0, 1.0});
    CHECK(psi2.jump_levels() == std::vector<double>{0.75, 1.0});
    CHECK(primal_of(psi2) == s2);

    for (std::uint64_t t = 0; t < 300; ++t) {
        const ShapeFn shape = random_shape(derive_seed(41, t), 5);
        const DualShapeFn dual = dual_of(shape);
        // Mirrored class membership: the floor at -infinity is the complement
        // of the shape's top level.
        CHECK(dual.base_level() == 1.0 - shape.jump_levels().back());
        CHECK(dual.jump_levels().back() == 1.0);
        CHECK(primal_of(dual) == shape);
    }
}

TEST_CASE("reflection duality identities") {
    for (std::uint64_t t = 0; t < 500; ++t) {
        const StepCDF f = random_step_cdf(derive_seed(42, 3 * t), 8);
        const ShapeFn s = random_shape(derive_seed(42, 3 * t + 1), 5);
        const HandicapFn c = random_handicap(derive_seed(42, 3 * t + 2), 5);
        CHECK(min_adjusted_quantile(f, dual_of(s)) ==
              doctest::Approx(-max_adjusted_quantile(reflect(f), s)).epsilon(1e-12));
        CHECK(min_adjusted_quantile(f, dual_of(c)) ==
              doctest::Approx(-max_adjusted_quantile(reflect(f), c)).epsilon(1e-12));
    }
}

TEST_CASE("dual handicap of the quantile handicap") {
    const DualHandicapFn d = dual_of(quantile_handicap(0.25));
    CHECK(d.cut_points() == std::vector<double>{0.75});
    CHECK(d.values() == std::vector<double>{0.0});
    CHECK(d.eval(0.5) == -std::numeric_limits<double>::infinity());
    CHECK(d.eval(0.75) == 0.0);
    CHECK(primal_of(d) == quantile_handicap(0.25));

    for (std::uint64_t t = 0; t < 200; ++t) {
        const HandicapFn c = random_handicap(derive_seed(43, t), 5);
        CHECK(primal_of(dual_of(c)) == c);
    }
}

TEST_CASE("quantile handicap reproduces the quantile and its affine behavior") {
    CHECK_THROWS_AS(quantile_handicap(0.0), Error);
    CHECK_THROWS_AS(quantile_handicap(1.0), Error);

    const StepCDF f({1.0, 2.0, 3.0, 4.0}, {0.25, 0.5, 0.75, 1.0});
    CHECK(max_adjusted_quantile(f, quantile_handicap(0.5)) == 2.0);

    for (std::uint64_t t = 0; t < 200; ++t) {
        const StepCDF g = random_step_cdf(derive_seed(44, t), 8);
        const double a = 0.25 * static_cast<double>(1 + t % 12);
        const double b = -2.0 + 0.25 * static_cast<double>(t % 17);
        const double alpha = 0.05 + 0.05 * static_cast<double>(t % 19);
        CHECK(max_adjusted_quantile(affine_push(g, a, b), quantile_handicap(alpha)) ==
              doctest::Approx(a * max_adjusted_quantile(g, quantile_handicap(alpha)) + b)
                  .epsilon(1e-12));
    }
}

TEST_CASE("handicaps with two penalty values admit an affine violation witness") {
    const HandicapFn c({0.5, 0.9}, {0.0, 5.0});
    const auto witness = find_affine_violation(c);
    CHECK(witness.found);
    CHECK(std::abs(witness.scaled_value - witness.expected_value) > 1e-6);

    for (std::uint64_t t = 0; t < 200; ++t) {
        std::uint64_t s = derive_seed(45, t);
        HandicapFn h = random_handicap(s, 4);
        for (std::uint64_t bump = 0; h.values().size() < 2; ++bump) {
            h = random_handicap(derive_seed(s, bump), 4);
        }
        CHECK(find_affine_violation(h).found);
    }
}

TEST_CASE("one-sided bound: the statistic dominates every adjusted quantile") {
    for (std::uint64_t t = 0; t < 200; ++t) {
        const HandicapFn c = random_handicap(derive_seed(46, 2 * t), 5);
        const StepCDF f = random_step_cdf(derive_seed(46, 2 * t + 1), 8);
        const double value = max_adjusted_quantile(f, c);
        for (double alpha :
             {0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}) {
            const double penalty = c.eval(alpha);
            if (std::isinf(penalty)) continue;
            CHECK(value >= lower_quantile(f, alpha) - penalty - 1e-9);
        }
    }
}
