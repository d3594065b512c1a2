#include "adjq/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "adjq/error.hpp"
#include "adjq/quantiles.hpp"

namespace adjq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Levels, cuts, and masses live on the 2^-20 grid; outcome values and
// penalties on the 2^-5 grid. Complements, differences, and partial sums of
// grid values stay exactly representable.
constexpr std::int64_t kLevelDenom = 1 << 20;
constexpr double kLevelGrid = 1.0 / static_cast<double>(kLevelDenom);
constexpr double kValueGrid = 1.0 / 32.0;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::vector<std::int64_t> distinct_ints(std::mt19937_64& rng, int count, std::int64_t lo,
                                        std::int64_t hi) {
    require(count >= 0 && hi - lo + 1 >= count, errc::bad_bounds,
            "sample space too small for requested distinct draws");
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::set<std::int64_t> picked;
    while (static_cast<int>(picked.size()) < count) picked.insert(dist(rng));
    return {picked.begin(), picked.end()};
}

std::vector<double> scaled(const std::vector<std::int64_t>& ints, double grid) {
    std::vector<double> out;
    out.reserve(ints.size());
    for (auto i : ints) out.push_back(static_cast<double>(i) * grid);
    return out;
}

int draw_size(std::mt19937_64& rng, int max_size) {
    require(max_size >= 1, errc::bad_bounds, "size bound must be at least 1");
    return 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

// ---------------------------------------------------------------------------
// Axiom checks
// ---------------------------------------------------------------------------

bool check_join_separability(const Statistic& s, const StepCDF& f, const StepCDF& g,
                             double tol) {
    return std::abs(s(join(f, g)) - std::max(s(f), s(g))) <= tol;
}

bool check_meet_separability(const Statistic& s, const StepCDF& f, const StepCDF& g,
                             double tol) {
    return std::abs(s(meet(f, g)) - std::min(s(f), s(g))) <= tol;
}

bool check_translation_equivariance(const Statistic& s, const StepCDF& f, double b,
                                    double tol) {
    return std::abs(s(translate(f, b)) - (s(f) + b)) <= tol;
}

bool check_affine_equivariance(const Statistic& s, const StepCDF& f, double a, double b,
                               double tol) {
    require(a > 0.0, errc::non_positive_scale, "scale must be positive");
    return std::abs(s(affine_push(f, a, b)) - (a * s(f) + b)) <= tol;
}

bool check_fosd_monotonicity(const Statistic& s, const StepCDF& f, const StepCDF& g,
                             double tol) {
    require(fosd_ge(f, g), errc::precondition_not_dominated,
            "monotonicity check needs a dominated pair");
    return s(f) >= s(g) - tol;
}

// ---------------------------------------------------------------------------
// Semicontinuity probes
// ---------------------------------------------------------------------------

namespace {

constexpr int kProbeIndices[] = {1,  2,  3,  4,   5,   6,   8,   10,  15,  20,
                                 30, 50, 75, 100, 150, 200, 300, 500, 700, 1000};

}  // namespace

bool probe_semicontinuity(const Statistic& s, const SequenceSpec& spec, double tol) {
    double bound = (spec.direction == SequenceSpec::Direction::lower) ? -kInf : kInf;
    for (int n : kProbeIndices) {
        const double v = s(spec.at(n));
        bound = (spec.direction == SequenceSpec::Direction::lower) ? std::max(bound, v)
                                                                   : std::min(bound, v);
    }
    const double at_limit = s(spec.limit);
    return (spec.direction == SequenceSpec::Direction::lower) ? at_limit <= bound + tol
                                                              : at_limit >= bound - tol;
}

bool validate_sequence_spec(const SequenceSpec& spec) {
    double prev = kInf;
    for (int n : {1, 10, 100, 1000}) {
        const double d = levy_distance(spec.at(n), spec.limit);
        if (!(d < prev)) return false;
        prev = d;
    }
    return prev < 1e-2;
}

std::vector<SequenceSpec> lower_semicontinuity_sequences() {
    std::vector<SequenceSpec> specs;
    specs.push_back({"point_mass_collapse_from_above",
                     [](int n) { return StepCDF::point_mass(1.0 / n); },
                     StepCDF::point_mass(0.0), SequenceSpec::Direction::lower});
    specs.push_back({"mass_escape_right",
                     [](int n) {
                         const double deficit = 1.0 / (n + 1);
                         return StepCDF({0.0, static_cast<double>(n)},
                                        {1.0 - deficit, 1.0});
                     },
                     StepCDF::point_mass(0.0), SequenceSpec::Direction::lower});
    specs.push_back({"level_merge_from_below",
                     [](int n) {
                         const double deficit = 1.0 / (n + 1);
                         return StepCDF({0.0, 1.0}, {1.0 - deficit, 1.0});
                     },
                     StepCDF::point_mass(0.0), SequenceSpec::Direction::lower});
    return specs;
}

std::vector<SequenceSpec> upper_semicontinuity_sequences() {
    std::vector<SequenceSpec> specs;
    specs.push_back({"point_mass_collapse_from_below",
                     [](int n) { return StepCDF::point_mass(-1.0 / n); },
                     StepCDF::point_mass(0.0), SequenceSpec::Direction::upper});
    specs.push_back({"mass_escape_left",
                     [](int n) {
                         const double head = 1.0 / (n + 1);
                         return StepCDF({static_cast<double>(-n), 0.0}, {head, 1.0});
                     },
                     StepCDF::point_mass(0.0), SequenceSpec::Direction::upper});
    specs.push_back({"level_merge_from_above",
                     [](int n) {
                         const double head = 1.0 / (n + 1);
                         return StepCDF({-1.0, 0.0}, {head, 1.0});
                     },
                     StepCDF::point_mass(0.0), SequenceSpec::Direction::upper});
    return specs;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

StepCDF random_step_cdf(std::uint64_t seed, int max_atoms,
                        std::pair<double, double> value_range) {
    require(value_range.first < value_range.second, errc::bad_bounds,
            "value range must be nonempty");
    std::mt19937_64 rng(seed);
    const int k = draw_size(rng, max_atoms);
    const auto lo = static_cast<std::int64_t>(std::ceil(value_range.first / kValueGrid));
    const auto hi = static_cast<std::int64_t>(std::floor(value_range.second / kValueGrid));
    std::vector<double> breakpoints = scaled(distinct_ints(rng, k, lo, hi), kValueGrid);
    std::vector<double> levels = scaled(distinct_ints(rng, k - 1, 1, kLevelDenom - 1),
                                        kLevelGrid);
    levels.push_back(1.0);
    return StepCDF(std::move(breakpoints), std::move(levels));
}

ShapeFn random_shape(std::uint64_t seed, int max_jumps) {
    std::mt19937_64 rng(seed);
    const int m = draw_size(rng, max_jumps);
    std::vector<double> points = scaled(distinct_ints(rng, m, -256, 256), kValueGrid);
    std::vector<double> levels = scaled(distinct_ints(rng, m, 1, kLevelDenom - 1),
                                        kLevelGrid);
    return ShapeFn(std::move(points), std::move(levels));
}

HandicapFn random_handicap(std::uint64_t seed, int max_cuts) {
    std::mt19937_64 rng(seed);
    const int m = draw_size(rng, max_cuts);
    std::vector<double> cuts = scaled(distinct_ints(rng, m, 1, kLevelDenom - 1),
                                      kLevelGrid);
    std::vector<double> values = scaled(distinct_ints(rng, m, -256, 256), kValueGrid);
    return HandicapFn(std::move(cuts), std::move(values));
}

DualShapeFn random_dual_shape(std::uint64_t seed, int max_jumps) {
    std::mt19937_64 rng(seed);
    const int m = draw_size(rng, max_jumps);
    std::vector<double> points = scaled(distinct_ints(rng, m, -256, 256), kValueGrid);
    std::vector<double> picked = scaled(distinct_ints(rng, m, 1, kLevelDenom - 1),
                                        kLevelGrid);
    const double base = picked.front();
    std::vector<double> levels(picked.begin() + 1, picked.end());
    levels.push_back(1.0);
    return DualShapeFn(base, std::move(points), std::move(levels));
}

DualHandicapFn random_dual_handicap(std::uint64_t seed, int max_cuts) {
    std::mt19937_64 rng(seed);
    const int m = draw_size(rng, max_cuts);
    std::vector<double> cuts = scaled(distinct_ints(rng, m, 1, kLevelDenom - 1),
                                      kLevelGrid);
    std::vector<double> values = scaled(distinct_ints(rng, m, -256, 256), kValueGrid);
    return DualHandicapFn(std::move(cuts), std::move(values));
}

FiniteJoint random_joint(std::uint64_t seed, int max_outcomes, bool comonotone) {
    std::mt19937_64 rng(seed);
    const int n = draw_size(rng, max_outcomes);

    // Masses are consecutive gaps of distinct grid points, so they are
    // positive and sum to exactly 1.
    std::vector<std::int64_t> interior = distinct_ints(rng, n - 1, 1, kLevelDenom - 1);
    std::vector<double> masses;
    masses.reserve(n);
    std::int64_t prev = 0;
    for (auto t : interior) {
        masses.push_back(static_cast<double>(t - prev) * kLevelGrid);
        prev = t;
    }
    masses.push_back(static_cast<double>(kLevelDenom - prev) * kLevelGrid);

    std::uniform_int_distribution<std::int64_t> value_dist(-256, 256);
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = static_cast<double>(value_dist(rng)) * kValueGrid;
        ys[i] = static_cast<double>(value_dist(rng)) * kValueGrid;
    }
    if (comonotone) {
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
    }

    std::vector<Outcome> outcomes(n);
    for (int i = 0; i < n; ++i) outcomes[i] = {masses[i], xs[i], ys[i]};
    return FiniteJoint(std::move(outcomes));
}

// ---------------------------------------------------------------------------
// Non-example statistics
// ---------------------------------------------------------------------------

Statistic mean_statistic() {
    return [](const StepCDF& f) {
        double mean = 0.0;
        double prev = 0.0;
        for (std::size_t j = 0; j < f.jump_count(); ++j) {
            mean += f.breakpoints()[j] * (f.levels()[j] - prev);
            prev = f.levels()[j];
        }
        return mean;
    };
}

Statistic midrange_statistic() {
    return [](const StepCDF& f) { return 0.5 * (f.min_support() + f.max_support()); };
}

// ---------------------------------------------------------------------------
// Affine violation witness
// ---------------------------------------------------------------------------

WitnessSearchResult find_affine_violation(const HandicapFn& handicap, double tol) {
    std::vector<StepCDF> candidates;
    candidates.push_back(StepCDF::point_mass(1.0));
    candidates.push_back(StepCDF::point_mass(-1.0));

    double span = 0.0;
    for (double v : handicap.values()) span = std::max(span, std::abs(v));
    const double big = span + 1.0;

    // Two-atom distributions whose middle level lands in each penalty cell.
    const auto& cuts = handicap.cut_points();
    std::vector<double> mids{0.5 * cuts.front()};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        mids.push_back(0.5 * (cuts[i] + cuts[i + 1]));
    }
    for (double mid : mids) {
        if (mid > 0.0 && mid < 1.0) candidates.emplace_back(StepCDF({0.0, big}, {mid, 1.0}));
    }

    for (double a : {2.0, 0.5, 3.0}) {
        for (const StepCDF& f : candidates) {
            const double scaled_value = max_adjusted_quantile(affine_push(f, a, 0.0), handicap);
            const double expected = a * max_adjusted_quantile(f, handicap);
            if (std::abs(scaled_value - expected) > tol) {
                return {true, a, f, scaled_value, expected};
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Property suite
// ---------------------------------------------------------------------------

namespace {

using TrialFn = std::function<bool(std::uint64_t)>;

CheckReport run_check(const std::string& name, std::uint64_t master, std::uint64_t salt,
                      int trials, const TrialFn& trial) {
    CheckReport report{name, trials, 0, std::nullopt};
    const std::uint64_t check_master = derive_seed(master, salt);
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t seed = derive_seed(check_master, static_cast<std::uint64_t>(i));
        bool ok = false;
        try {
            ok = trial(seed);
        } catch (...) {
            ok = false;
        }
        if (!ok) {
            ++report.failures;
            if (!report.first_failure_seed) report.first_failure_seed = seed;
        }
    }
    return report;
}

double pick_shift(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-256, 256);
    return static_cast<double>(dist(rng)) * kValueGrid;
}

double pick_scale(std::uint64_t seed) {
    static constexpr double kScales[] = {0.25, 0.5, 1.5, 2.0, 3.0, 4.0};
    return kScales[seed % 6];
}

HandicapFn random_multi_value_handicap(std::uint64_t seed, int max_cuts) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        HandicapFn h = random_handicap(derive_seed(seed, attempt), max_cuts);
        if (h.values().size() >= 2) return h;
    }
}

}  // namespace

std::vector<CheckReport> run_property_suite(const SuiteConfig& config) {
    require(config.trials >= 1, errc::bad_bounds, "trial count must be at least 1");
    const std::uint64_t master = config.master_seed;
    const int trials = config.trials;
    std::vector<CheckReport> reports;

    const auto cdf = [](std::uint64_t s) { return random_step_cdf(s, 8); };

    std::uint64_t salt = 0;
    const auto add = [&](const std::string& name, int n, const TrialFn& trial) {
        reports.push_back(run_check(name, master, ++salt, n, trial));
    };

    add("shape_join_separability", trials, [&](std::uint64_t s) {
        const ShapeFn shape = random_shape(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return max_adjusted_quantile(f, shape); };
        return check_join_separability(stat, cdf(derive_seed(s, 2)), cdf(derive_seed(s, 3)));
    });

    add("shape_translation_equivariance", trials, [&](std::uint64_t s) {
        const ShapeFn shape = random_shape(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return max_adjusted_quantile(f, shape); };
        return check_translation_equivariance(stat, cdf(derive_seed(s, 2)),
                                              pick_shift(derive_seed(s, 3)));
    });

    add("shape_fosd_monotonicity", trials, [&](std::uint64_t s) {
        const ShapeFn shape = random_shape(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return max_adjusted_quantile(f, shape); };
        const StepCDF g = cdf(derive_seed(s, 2));
        const StepCDF f = join(g, cdf(derive_seed(s, 3)));
        return check_fosd_monotonicity(stat, f, g);
    });

    add("handicap_join_separability", trials, [&](std::uint64_t s) {
        const HandicapFn h = random_handicap(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return max_adjusted_quantile(f, h); };
        return check_join_separability(stat, cdf(derive_seed(s, 2)), cdf(derive_seed(s, 3)));
    });

    add("handicap_translation_equivariance", trials, [&](std::uint64_t s) {
        const HandicapFn h = random_handicap(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return max_adjusted_quantile(f, h); };
        return check_translation_equivariance(stat, cdf(derive_seed(s, 2)),
                                              pick_shift(derive_seed(s, 3)));
    });

    add("handicap_fosd_monotonicity", trials, [&](std::uint64_t s) {
        const HandicapFn h = random_handicap(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return max_adjusted_quantile(f, h); };
        const StepCDF g = cdf(derive_seed(s, 2));
        const StepCDF f = join(g, cdf(derive_seed(s, 3)));
        return check_fosd_monotonicity(stat, f, g);
    });

    add("dual_shape_meet_separability", trials, [&](std::uint64_t s) {
        const DualShapeFn shape = random_dual_shape(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return min_adjusted_quantile(f, shape); };
        return check_meet_separability(stat, cdf(derive_seed(s, 2)), cdf(derive_seed(s, 3)));
    });

    add("dual_shape_translation_equivariance", trials, [&](std::uint64_t s) {
        const DualShapeFn shape = random_dual_shape(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return min_adjusted_quantile(f, shape); };
        return check_translation_equivariance(stat, cdf(derive_seed(s, 2)),
                                              pick_shift(derive_seed(s, 3)));
    });

    add("dual_handicap_meet_separability", trials, [&](std::uint64_t s) {
        const DualHandicapFn h = random_dual_handicap(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return min_adjusted_quantile(f, h); };
        return check_meet_separability(stat, cdf(derive_seed(s, 2)), cdf(derive_seed(s, 3)));
    });

    add("dual_handicap_translation_equivariance", trials, [&](std::uint64_t s) {
        const DualHandicapFn h = random_dual_handicap(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return min_adjusted_quantile(f, h); };
        return check_translation_equivariance(stat, cdf(derive_seed(s, 2)),
                                              pick_shift(derive_seed(s, 3)));
    });

    add("shape_handicap_agreement", trials, [&](std::uint64_t s) {
        const ShapeFn shape = random_shape(derive_seed(s, 1), 5);
        const StepCDF f = cdf(derive_seed(s, 2));
        return std::abs(max_adjusted_quantile(f, shape) -
                        max_adjusted_quantile(f, handicap_of(shape))) <= 1e-9;
    });

    add("handicap_shape_agreement", trials, [&](std::uint64_t s) {
        const HandicapFn h = random_handicap(derive_seed(s, 1), 5);
        const StepCDF f = cdf(derive_seed(s, 2));
        return std::abs(max_adjusted_quantile(f, h) -
                        max_adjusted_quantile(f, shape_of(h))) <= 1e-9;
    });

    add("shape_reflection_duality", trials, [&](std::uint64_t s) {
        const ShapeFn shape = random_shape(derive_seed(s, 1), 5);
        const StepCDF f = cdf(derive_seed(s, 2));
        return std::abs(min_adjusted_quantile(f, dual_of(shape)) +
                        max_adjusted_quantile(reflect(f), shape)) <= 1e-9;
    });

    add("handicap_reflection_duality", trials, [&](std::uint64_t s) {
        const HandicapFn h = random_handicap(derive_seed(s, 1), 5);
        const StepCDF f = cdf(derive_seed(s, 2));
        return std::abs(min_adjusted_quantile(f, dual_of(h)) +
                        max_adjusted_quantile(reflect(f), h)) <= 1e-9;
    });

    add("reflect_involution", trials, [&](std::uint64_t s) {
        const StepCDF f = cdf(derive_seed(s, 1));
        return reflect(reflect(f)) == f;
    });

    add("quantile_handicap_specialization", trials, [&](std::uint64_t s) {
        const StepCDF f = cdf(derive_seed(s, 1));
        std::mt19937_64 rng(derive_seed(s, 2));
        const double alpha =
            static_cast<double>(1 + static_cast<std::int64_t>(rng() % (kLevelDenom - 1))) *
            kLevelGrid;
        return max_adjusted_quantile(f, quantile_handicap(alpha)) == lower_quantile(f, alpha);
    });

    add("quantile_affine_equivariance", trials, [&](std::uint64_t s) {
        const StepCDF f = cdf(derive_seed(s, 1));
        std::mt19937_64 rng(derive_seed(s, 2));
        const double alpha =
            static_cast<double>(1 + static_cast<std::int64_t>(rng() % (kLevelDenom - 1))) *
            kLevelGrid;
        const Statistic stat = [&](const StepCDF& g) { return lower_quantile(g, alpha); };
        return check_affine_equivariance(stat, f, pick_scale(derive_seed(s, 3)),
                                         pick_shift(derive_seed(s, 4)));
    });

    add("affine_violation_witness", trials, [&](std::uint64_t s) {
        const HandicapFn h = random_multi_value_handicap(derive_seed(s, 1), 4);
        return find_affine_violation(h).found;
    });

    add("coupling_invariants", trials, [&](std::uint64_t s) {
        const StepCDF f = cdf(derive_seed(s, 1));
        const StepCDF g = cdf(derive_seed(s, 2));
        const FiniteJoint coupled = comonotone_coupling(f, g);
        return is_comonotonic(coupled) && marginal_cdf(coupled, Coord::X) == f &&
               marginal_cdf(coupled, Coord::Y) == g && rv_join_cdf(coupled) == join(f, g) &&
               rv_meet_cdf(coupled) == meet(f, g);
    });

    add("joint_lattice_commutation", trials, [&](std::uint64_t s) {
        const FiniteJoint joint = random_joint(derive_seed(s, 1), 6, (s % 2) == 0);
        const LatticeCommutation r = check_lattice_commutation(joint);
        return r.join_dominates && r.meet_dominated && r.comonotone_equality;
    });

    const auto lsc = lower_semicontinuity_sequences();
    const auto usc = upper_semicontinuity_sequences();

    add("sequence_spec_convergence", static_cast<int>(lsc.size() + usc.size()),
        [&](std::uint64_t s) {
            const std::size_t i = static_cast<std::size_t>(s % (lsc.size() + usc.size()));
            return validate_sequence_spec(i < lsc.size() ? lsc[i] : usc[i - lsc.size()]);
        });

    add("shape_lower_semicontinuity", trials, [&](std::uint64_t s) {
        const ShapeFn shape = random_shape(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return max_adjusted_quantile(f, shape); };
        return std::all_of(lsc.begin(), lsc.end(),
                           [&](const SequenceSpec& sp) { return probe_semicontinuity(stat, sp); });
    });

    add("handicap_lower_semicontinuity", trials, [&](std::uint64_t s) {
        const HandicapFn h = random_handicap(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return max_adjusted_quantile(f, h); };
        return std::all_of(lsc.begin(), lsc.end(),
                           [&](const SequenceSpec& sp) { return probe_semicontinuity(stat, sp); });
    });

    add("dual_shape_upper_semicontinuity", trials, [&](std::uint64_t s) {
        const DualShapeFn shape = random_dual_shape(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return min_adjusted_quantile(f, shape); };
        return std::all_of(usc.begin(), usc.end(),
                           [&](const SequenceSpec& sp) { return probe_semicontinuity(stat, sp); });
    });

    add("dual_handicap_upper_semicontinuity", trials, [&](std::uint64_t s) {
        const DualHandicapFn h = random_dual_handicap(derive_seed(s, 1), 5);
        const Statistic stat = [&](const StepCDF& f) { return min_adjusted_quantile(f, h); };
        return std::all_of(usc.begin(), usc.end(),
                           [&](const SequenceSpec& sp) { return probe_semicontinuity(stat, sp); });
    });

    if (config.include_counterexamples) {
        add("mean_join_separability_counterexample", trials, [&](std::uint64_t s) {
            return check_join_separability(mean_statistic(), cdf(derive_seed(s, 1)),
                                           cdf(derive_seed(s, 2)));
        });
        add("midrange_meet_separability_counterexample", trials, [&](std::uint64_t s) {
            return check_meet_separability(midrange_statistic(), cdf(derive_seed(s, 1)),
                                           cdf(derive_seed(s, 2)));
        });
    }

    return reports;
}

}  // namespace adjq
