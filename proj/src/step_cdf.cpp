#include "adjq/step_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "adjq/error.hpp"

namespace adjq {

namespace {

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1] < v[i])) return false;
    }
    return true;
}

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

StepCDF::StepCDF(std::vector<double> breakpoints, std::vector<double> levels) {
    require(!breakpoints.empty(), errc::empty_input, "step CDF needs at least one jump");
    require(breakpoints.size() == levels.size(), errc::empty_input,
            "breakpoints and levels must have equal length");
    require(all_finite(breakpoints), errc::non_monotone_breakpoints,
            "breakpoints must be finite");
    require(strictly_increasing(breakpoints), errc::non_monotone_breakpoints,
            "breakpoints must be strictly increasing");

    // Merge runs of equal levels, keeping the first breakpoint of each run.
    std::vector<double> b, l;
    b.reserve(breakpoints.size());
    l.reserve(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!l.empty() && levels[i] == l.back()) continue;
        b.push_back(breakpoints[i]);
        l.push_back(levels[i]);
    }

    require(all_finite(l), errc::non_monotone_levels, "levels must be finite");
    double prev = 0.0;  // F is 0 below the first jump
    for (double v : l) {
        require(prev < v, errc::non_monotone_levels,
                "levels must be strictly increasing within (0, 1]");
        prev = v;
    }
    require(l.back() <= 1.0, errc::non_monotone_levels, "levels must not exceed 1");
    require(l.back() == 1.0, errc::terminal_level_not_one, "terminal level must be exactly 1");

    breakpoints_ = std::move(b);
    levels_ = std::move(l);
}

StepCDF StepCDF::point_mass(double x) { return StepCDF({x}, {1.0}); }

StepCDF StepCDF::from_samples(std::span<const double> samples) {
    require(!samples.empty(), errc::empty_input, "no samples");
    const double w = 1.0 / static_cast<double>(samples.size());
    std::vector<double> weights(samples.size(), w);
    return from_samples(samples, weights);
}

StepCDF StepCDF::from_samples(std::span<const double> samples,
                              std::span<const double> weights) {
    require(!samples.empty(), errc::empty_input, "no samples");
    require(samples.size() == weights.size(), errc::bad_weights,
            "weights must match samples in length");

    double total = 0.0;
    for (double w : weights) {
        require(std::isfinite(w) && w > 0.0, errc::bad_weights, "weights must be positive");
        total += w;
    }
    require(std::abs(total - 1.0) <= 1e-12, errc::bad_weights,
            "weights must sum to 1 within 1e-12");

    // Aggregate duplicate sample values, then renormalize the cumulative sums
    // by the actual total so that the terminal level is exactly 1.
    std::map<double, double> mass;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        require(std::isfinite(samples[i]), errc::parse_error, "samples must be finite");
        mass[samples[i]] += weights[i];
    }

    std::vector<double> b, l;
    b.reserve(mass.size());
    l.reserve(mass.size());
    double cum = 0.0;
    for (const auto& [value, w] : mass) {
        cum += w;
        b.push_back(value);
        l.push_back(cum / total);
    }
    l.back() = 1.0;
    return StepCDF(std::move(b), std::move(l));
}

double StepCDF::eval(double x) const noexcept {
    // Index of the last breakpoint <= x.
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.begin()) return 0.0;
    return levels_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double StepCDF::eval_left(double x) const noexcept {
    // Index of the last breakpoint strictly below x.
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    if (it == breakpoints_.begin()) return 0.0;
    return levels_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

namespace {

std::vector<double> union_breakpoints(const StepCDF& f, const StepCDF& g) {
    std::vector<double> u;
    u.reserve(f.jump_count() + g.jump_count());
    std::merge(f.breakpoints().begin(), f.breakpoints().end(),
               g.breakpoints().begin(), g.breakpoints().end(), std::back_inserter(u));
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

// Both arguments are constant between union breakpoints, so a pointwise
// combination evaluated on the union is exact.
StepCDF pointwise_combine(const StepCDF& f, const StepCDF& g, bool take_min) {
    std::vector<double> b, l;
    for (double x : union_breakpoints(f, g)) {
        const double vf = f.eval(x);
        const double vg = g.eval(x);
        const double v = take_min ? std::min(vf, vg) : std::max(vf, vg);
        if (v == 0.0) continue;  // still in the zero tail
        b.push_back(x);
        l.push_back(v);
    }
    return StepCDF(std::move(b), std::move(l));
}

}  // namespace

bool fosd_ge(const StepCDF& f, const StepCDF& g) {
    for (double x : union_breakpoints(f, g)) {
        if (!(f.eval(x) <= g.eval(x))) return false;
    }
    return true;
}

StepCDF join(const StepCDF& f, const StepCDF& g) { return pointwise_combine(f, g, true); }

StepCDF meet(const StepCDF& f, const StepCDF& g) { return pointwise_combine(f, g, false); }

StepCDF translate(const StepCDF& f, double b) { return affine_push(f, 1.0, b); }

StepCDF affine_push(const StepCDF& f, double a, double b) {
    require(std::isfinite(a) && a > 0.0, errc::non_positive_scale, "scale must be positive");
    require(std::isfinite(b), errc::validation_error, "shift must be finite");
    std::vector<double> mapped;
    mapped.reserve(f.jump_count());
    for (double x : f.breakpoints()) mapped.push_back(a * x + b);
    return StepCDF(std::move(mapped), f.levels());
}

StepCDF reflect(const StepCDF& f) {
    const auto& b = f.breakpoints();
    const auto& l = f.levels();
    const std::size_t k = b.size();
    std::vector<double> rb(k), rl(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = k - 1 - i;   // original jump index, descending
        rb[i] = -b[j];
        rl[i] = (j == 0) ? 1.0 : 1.0 - l[j - 1];
    }
    return StepCDF(std::move(rb), std::move(rl));
}

namespace {

// sup_x [g(x) - f(x + eps)] over the whole line. Both components are
// right-continuous steps, so the supremum is attained at a point where one of
// them jumps (or on the zero tail, contributing 0).
double sup_gap(const StepCDF& g, const StepCDF& f, double eps) {
    double best = 0.0;
    for (double x : g.breakpoints()) best = std::max(best, g.eval(x) - f.eval(x + eps));
    for (double x : f.breakpoints()) {
        const double p = x - eps;
        best = std::max(best, g.eval(p) - f.eval(x));
    }
    return best;
}

bool within_corridor(const StepCDF& f, const StepCDF& g, double eps) {
    // f(x - eps) - eps <= g(x) <= f(x + eps) + eps for all x.
    if (sup_gap(g, f, eps) > eps) return false;
    if (sup_gap(f, g, eps) > eps) return false;
    return true;
}

}  // namespace

double levy_distance(const StepCDF& f, const StepCDF& g) {
    if (within_corridor(f, g, 0.0)) return 0.0;
    double lo = 0.0;   // corridor fails
    double hi = 1.0;   // corridor always holds at 1
    for (int iter = 0; iter < 40; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (within_corridor(f, g, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace adjq
