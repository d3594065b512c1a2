#include "adjq/adjusted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "adjq/error.hpp"
#include "adjq/quantiles.hpp"

namespace adjq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_finite_sorted(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        require(std::isfinite(v[i]), errc::validation_error,
                std::string(what) + " must be finite");
        if (i > 0) {
            require(v[i - 1] < v[i], errc::validation_error,
                    std::string(what) + " must be strictly increasing");
        }
    }
}

// True when 1 - (1 - v) reproduces v exactly, so mirrored levels are lossless.
bool complement_roundtrips(double v) { return 1.0 - (1.0 - v) == v; }

bool complements_exact(const std::vector<double>& levels) {
    return std::all_of(levels.begin(), levels.end(), complement_roundtrips);
}

}  // namespace

ShapeFn::ShapeFn(std::vector<double> jump_points, std::vector<double> jump_levels) {
    require(!jump_points.empty(), errc::validation_error, "shape needs at least one jump");
    require(jump_points.size() == jump_levels.size(), errc::validation_error,
            "shape jump points and levels must have equal length");
    check_finite_sorted(jump_points, "shape jump points");

    // Drop vacuous jumps (level unchanged from the region below, which is 0).
    double prev = 0.0;
    for (std::size_t i = 0; i < jump_levels.size(); ++i) {
        const double lv = jump_levels[i];
        require(std::isfinite(lv), errc::validation_error, "shape levels must be finite");
        if (lv == prev) continue;
        require(lv > prev, errc::validation_error,
                "shape levels must be strictly increasing");
        jump_points_.push_back(jump_points[i]);
        jump_levels_.push_back(lv);
        prev = lv;
    }
    require(!jump_levels_.empty(), errc::validation_error,
            "shape must rise above 0 somewhere");
    require(jump_levels_.back() < 1.0, errc::validation_error,
            "shape must stay strictly below 1");
}

double ShapeFn::eval(double x) const noexcept {
    auto it = std::upper_bound(jump_points_.begin(), jump_points_.end(), x);
    if (it == jump_points_.begin()) return 0.0;
    return jump_levels_[static_cast<std::size_t>(it - jump_points_.begin()) - 1];
}

HandicapFn::HandicapFn(std::vector<double> cut_points, std::vector<double> values) {
    require(!cut_points.empty(), errc::validation_error, "handicap needs at least one cut");
    require(cut_points.size() == values.size(), errc::validation_error,
            "handicap cut points and values must have equal length");
    check_finite_sorted(cut_points, "handicap cut points");
    require(cut_points.front() > 0.0 && cut_points.back() < 1.0, errc::validation_error,
            "handicap cut points must lie strictly between 0 and 1");

    // Merge runs of equal values; a run's cell extends to its last cut.
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        require(std::isfinite(v), errc::validation_error, "handicap values must be finite");
        if (!values_.empty() && v == values_.back()) {
            cut_points_.back() = cut_points[i];
            continue;
        }
        require(values_.empty() || values_.back() < v, errc::validation_error,
                "handicap values must be nondecreasing");
        cut_points_.push_back(cut_points[i]);
        values_.push_back(v);
    }
}

double HandicapFn::eval(double alpha) const {
    require(alpha > 0.0 && alpha < 1.0, errc::alpha_out_of_range,
            "handicap argument must lie strictly between 0 and 1");
    if (alpha > cut_points_.back()) return kInf;
    auto it = std::lower_bound(cut_points_.begin(), cut_points_.end(), alpha);
    return values_[static_cast<std::size_t>(it - cut_points_.begin())];
}

DualShapeFn::DualShapeFn(double base_level, std::vector<double> jump_points,
                         std::vector<double> jump_levels) {
    require(!jump_points.empty(), errc::validation_error,
            "dual shape needs at least one jump");
    require(jump_points.size() == jump_levels.size(), errc::validation_error,
            "dual shape jump points and levels must have equal length");
    require(std::isfinite(base_level) && base_level > 0.0 && base_level < 1.0,
            errc::validation_error, "dual shape base level must lie in (0, 1)");
    check_finite_sorted(jump_points, "dual shape jump points");

    base_level_ = base_level;
    double prev = base_level;
    for (std::size_t i = 0; i < jump_levels.size(); ++i) {
        const double lv = jump_levels[i];
        require(std::isfinite(lv), errc::validation_error,
                "dual shape levels must be finite");
        if (lv == prev) continue;
        require(lv > prev, errc::validation_error,
                "dual shape levels must be strictly increasing");
        jump_points_.push_back(jump_points[i]);
        jump_levels_.push_back(lv);
        prev = lv;
    }
    require(!jump_levels_.empty(), errc::validation_error,
            "dual shape must rise above its base level");
    require(jump_levels_.back() == 1.0, errc::validation_error,
            "dual shape must reach exactly 1 at its last jump");
}

double DualShapeFn::eval(double x) const noexcept {
    auto it = std::upper_bound(jump_points_.begin(), jump_points_.end(), x);
    if (it == jump_points_.begin()) return base_level_;
    return jump_levels_[static_cast<std::size_t>(it - jump_points_.begin()) - 1];
}

DualHandicapFn::DualHandicapFn(std::vector<double> cut_points, std::vector<double> values) {
    require(!cut_points.empty(), errc::validation_error,
            "dual handicap needs at least one cut");
    require(cut_points.size() == values.size(), errc::validation_error,
            "dual handicap cut points and values must have equal length");
    check_finite_sorted(cut_points, "dual handicap cut points");
    require(cut_points.front() > 0.0 && cut_points.back() < 1.0, errc::validation_error,
            "dual handicap cut points must lie strictly between 0 and 1");

    // Merge runs of equal values; a run's cell starts at its first cut.
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        require(std::isfinite(v), errc::validation_error,
                "dual handicap values must be finite");
        if (!values_.empty() && v == values_.back()) continue;
        require(values_.empty() || values_.back() < v, errc::validation_error,
                "dual handicap values must be nondecreasing");
        cut_points_.push_back(cut_points[i]);
        values_.push_back(v);
    }
}

double DualHandicapFn::eval(double alpha) const {
    require(alpha > 0.0 && alpha < 1.0, errc::alpha_out_of_range,
            "dual handicap argument must lie strictly between 0 and 1");
    if (alpha < cut_points_.front()) return -kInf;
    auto it = std::upper_bound(cut_points_.begin(), cut_points_.end(), alpha);
    return values_[static_cast<std::size_t>(it - cut_points_.begin()) - 1];
}

bool envelope_holds(const StepCDF& f, const ShapeFn& shape, double t) {
    // f(x) >= shape(x - t) everywhere iff it holds at each shifted jump.
    const auto& u = shape.jump_points();
    const auto& lam = shape.jump_levels();
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (f.eval(t + u[j]) < lam[j]) return false;
    }
    return true;
}

bool envelope_holds(const StepCDF& f, const DualShapeFn& shape, double t) {
    // f(x) <= shape(x - t) everywhere iff the left limit of f at each shifted
    // jump stays below the template's level just before that jump.
    const auto& w = shape.jump_points();
    const auto& nu = shape.jump_levels();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double bound = (i == 0) ? shape.base_level() : nu[i - 1];
        if (f.eval_left(t + w[i]) > bound) return false;
    }
    return true;
}

namespace {

double data_scale(const StepCDF& f, const std::vector<double>& jump_points, double t) {
    double s = std::abs(t);
    s = std::max(s, std::abs(f.min_support()));
    s = std::max(s, std::abs(f.max_support()));
    for (double u : jump_points) s = std::max(s, std::abs(u));
    return s;
}

// Optimality self-check for the envelope reductions. Skipped at very large
// magnitudes where the fixed probe offsets fall below floating-point spacing.
void verify_shape_optimum(const StepCDF& f, const ShapeFn& shape, double t) {
    if (data_scale(f, shape.jump_points(), t) > 1e5) return;
    if (!envelope_holds(f, shape, t + 1e-9) || envelope_holds(f, shape, t - 1e-6)) {
        throw std::logic_error("shape envelope reduction produced a non-optimal shift");
    }
}

void verify_dual_shape_optimum(const StepCDF& f, const DualShapeFn& shape, double t) {
    if (data_scale(f, shape.jump_points(), t) > 1e5) return;
    if (!envelope_holds(f, shape, t - 1e-9) || envelope_holds(f, shape, t + 1e-6)) {
        throw std::logic_error("dual envelope reduction produced a non-optimal shift");
    }
}

}  // namespace

AdjustedQuantileReport max_adjusted_quantile_report(const StepCDF& f, const ShapeFn& shape) {
    const auto& u = shape.jump_points();
    const auto& lam = shape.jump_levels();
    AdjustedQuantileReport r{-kInf, 0.0, 0.0};
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double q = detail::lower_quantile_closed(f, lam[j]);
        const double cand = q - u[j];
        if (cand > r.value) r = {cand, lam[j], q};
    }
    verify_shape_optimum(f, shape, r.value);
    return r;
}

double max_adjusted_quantile(const StepCDF& f, const ShapeFn& shape) {
    return max_adjusted_quantile_report(f, shape).value;
}

AdjustedQuantileReport max_adjusted_quantile_report(const StepCDF& f,
                                                    const HandicapFn& handicap) {
    // The adjusted quantile is constant on half-open level cells delimited by
    // the CDF's levels and the handicap's cuts, and both step functions attain
    // their cell value at the right endpoint; the sup is a finite max over
    // those endpoints (cells with infinite penalty contribute nothing).
    const double threshold = handicap.finite_threshold();
    std::vector<double> candidates;
    for (double v : f.levels()) {
        if (v < 1.0 && v <= threshold) candidates.push_back(v);
    }
    candidates.insert(candidates.end(), handicap.cut_points().begin(),
                      handicap.cut_points().end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    AdjustedQuantileReport r{-kInf, 0.0, 0.0};
    for (double alpha : candidates) {
        const double q = detail::lower_quantile_closed(f, alpha);
        const double cand = q - handicap.eval(alpha);
        if (cand > r.value) r = {cand, alpha, q};
    }
    return r;
}

double max_adjusted_quantile(const StepCDF& f, const HandicapFn& handicap) {
    return max_adjusted_quantile_report(f, handicap).value;
}

AdjustedQuantileReport min_adjusted_quantile_report(const StepCDF& f,
                                                    const DualShapeFn& shape) {
    const auto& w = shape.jump_points();
    const auto& nu = shape.jump_levels();
    AdjustedQuantileReport r{kInf, 0.0, 0.0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double bound = (i == 0) ? shape.base_level() : nu[i - 1];
        const double q = upper_quantile(f, bound);
        const double cand = q - w[i];
        if (cand < r.value) r = {cand, bound, q};
    }
    verify_dual_shape_optimum(f, shape, r.value);

    // Cross-check against the reflection route when level mirroring is exact.
    std::vector<double> levels(nu.begin(), nu.end());
    levels.push_back(shape.base_level());
    if (complements_exact(levels) && complements_exact(f.levels())) {
        const double via_reflection = -max_adjusted_quantile(reflect(f), primal_of(shape));
        if (std::abs(via_reflection - r.value) > 1e-9) {
            throw std::logic_error("dual envelope reduction disagrees with reflection route");
        }
    }
    return r;
}

double min_adjusted_quantile(const StepCDF& f, const DualShapeFn& shape) {
    return min_adjusted_quantile_report(f, shape).value;
}

AdjustedQuantileReport min_adjusted_quantile_report(const StepCDF& f,
                                                    const DualHandicapFn& handicap) {
    // Mirror of the handicap reduction: both the upper quantile and the dual
    // handicap are right-continuous steps of the level, so the inf is a min
    // over left cell endpoints with a finite penalty.
    const double threshold = handicap.finite_threshold();
    std::vector<double> candidates;
    for (double v : f.levels()) {
        if (v < 1.0 && v >= threshold) candidates.push_back(v);
    }
    candidates.insert(candidates.end(), handicap.cut_points().begin(),
                      handicap.cut_points().end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    AdjustedQuantileReport r{kInf, 0.0, 0.0};
    for (double alpha : candidates) {
        const double q = upper_quantile(f, alpha);
        const double cand = q - handicap.eval(alpha);
        if (cand < r.value) r = {cand, alpha, q};
    }
    return r;
}

double min_adjusted_quantile(const StepCDF& f, const DualHandicapFn& handicap) {
    return min_adjusted_quantile_report(f, handicap).value;
}

HandicapFn handicap_of(const ShapeFn& shape) {
    return HandicapFn(shape.jump_levels(), shape.jump_points());
}

ShapeFn shape_of(const HandicapFn& handicap) {
    return ShapeFn(handicap.values(), handicap.cut_points());
}

DualShapeFn dual_of(const ShapeFn& shape) {
    const auto& u = shape.jump_points();
    const auto& lam = shape.jump_levels();
    const std::size_t m = u.size();
    std::vector<double> w(m), nu(m);
    for (std::size_t i = 0; i < m; ++i) {
        w[i] = -u[m - 1 - i];
        nu[i] = (i == m - 1) ? 1.0 : 1.0 - lam[m - 2 - i];
    }
    return DualShapeFn(1.0 - lam[m - 1], std::move(w), std::move(nu));
}

ShapeFn primal_of(const DualShapeFn& shape) {
    const auto& w = shape.jump_points();
    const auto& nu = shape.jump_levels();
    const std::size_t m = w.size();
    std::vector<double> u(m), lam(m);
    for (std::size_t j = 0; j < m; ++j) {
        u[j] = -w[m - 1 - j];
        lam[j] = (j == m - 1) ? 1.0 - shape.base_level() : 1.0 - nu[m - 2 - j];
    }
    return ShapeFn(std::move(u), std::move(lam));
}

DualHandicapFn dual_of(const HandicapFn& handicap) {
    const auto& a = handicap.cut_points();
    const auto& c = handicap.values();
    const std::size_t m = a.size();
    std::vector<double> cuts(m), vals(m);
    for (std::size_t i = 0; i < m; ++i) {
        cuts[i] = 1.0 - a[m - 1 - i];
        vals[i] = -c[m - 1 - i];
    }
    return DualHandicapFn(std::move(cuts), std::move(vals));
}

HandicapFn primal_of(const DualHandicapFn& handicap) {
    const auto& b = handicap.cut_points();
    const auto& d = handicap.values();
    const std::size_t m = b.size();
    std::vector<double> cuts(m), vals(m);
    for (std::size_t i = 0; i < m; ++i) {
        cuts[i] = 1.0 - b[m - 1 - i];
        vals[i] = -d[m - 1 - i];
    }
    return HandicapFn(std::move(cuts), std::move(vals));
}

HandicapFn quantile_handicap(double alpha) {
    require(alpha > 0.0 && alpha < 1.0, errc::alpha_out_of_range,
            "quantile level must lie strictly between 0 and 1");
    return HandicapFn({alpha}, {0.0});
}

}  // namespace adjq
