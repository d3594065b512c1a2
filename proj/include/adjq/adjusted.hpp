#pragma once

#include <vector>

#include "adjq/step_cdf.hpp"

namespace adjq {

/// A step template for the maximal adjusted quantile in envelope form: a
/// nondecreasing right-continuous function that is 0 below its first jump and
/// stays strictly below 1. jump_levels holds the value attained from each
/// jump point onward.
class ShapeFn {
public:
    ShapeFn(std::vector<double> jump_points, std::vector<double> jump_levels);

    const std::vector<double>& jump_points() const noexcept { return jump_points_; }
    const std::vector<double>& jump_levels() const noexcept { return jump_levels_; }
    std::size_t jump_count() const noexcept { return jump_points_.size(); }

    /// Step evaluation: 0 below the first jump, top level above the last.
    double eval(double x) const noexcept;
    double operator()(double x) const noexcept { return eval(x); }

    friend bool operator==(const ShapeFn&, const ShapeFn&) = default;

private:
    std::vector<double> jump_points_;
    std::vector<double> jump_levels_;
};

/// A per-level penalty schedule for the maximal adjusted quantile in handicap
/// form: nondecreasing, left-continuous, finite on (0, cut_points.back()] and
/// +infinity above. values()[i] applies on (cut_points[i-1], cut_points[i]].
/// Consecutive equal values are merged at construction.
class HandicapFn {
public:
    HandicapFn(std::vector<double> cut_points, std::vector<double> values);

    const std::vector<double>& cut_points() const noexcept { return cut_points_; }
    const std::vector<double>& values() const noexcept { return values_; }

    /// Largest level with a finite penalty; the schedule is +infinity above it.
    double finite_threshold() const noexcept { return cut_points_.back(); }

    /// Penalty at level alpha in (0,1); +infinity above the threshold.
    double eval(double alpha) const;
    double operator()(double alpha) const { return eval(alpha); }

    friend bool operator==(const HandicapFn&, const HandicapFn&) = default;

private:
    std::vector<double> cut_points_;
    std::vector<double> values_;
};

/// Mirror template for the minimal adjusted quantile: nondecreasing,
/// right-continuous, equal to 1 from its last jump onward, and bounded away
/// from 0 at -infinity by base_level.
class DualShapeFn {
public:
    DualShapeFn(double base_level, std::vector<double> jump_points,
                std::vector<double> jump_levels);

    double base_level() const noexcept { return base_level_; }
    const std::vector<double>& jump_points() const noexcept { return jump_points_; }
    const std::vector<double>& jump_levels() const noexcept { return jump_levels_; }
    std::size_t jump_count() const noexcept { return jump_points_.size(); }

    double eval(double x) const noexcept;
    double operator()(double x) const noexcept { return eval(x); }

    friend bool operator==(const DualShapeFn&, const DualShapeFn&) = default;

private:
    double base_level_;
    std::vector<double> jump_points_;
    std::vector<double> jump_levels_;
};

/// Mirror penalty schedule for the minimal adjusted quantile: nondecreasing,
/// right-continuous, -infinity on (0, cut_points.front()) and finite from the
/// first cut onward. values()[i] applies on [cut_points[i], cut_points[i+1]).
class DualHandicapFn {
public:
    DualHandicapFn(std::vector<double> cut_points, std::vector<double> values);

    const std::vector<double>& cut_points() const noexcept { return cut_points_; }
    const std::vector<double>& values() const noexcept { return values_; }

    /// Smallest level with a finite value; the schedule is -infinity below it.
    double finite_threshold() const noexcept { return cut_points_.front(); }

    double eval(double alpha) const;
    double operator()(double alpha) const { return eval(alpha); }

    friend bool operator==(const DualHandicapFn&, const DualHandicapFn&) = default;

private:
    std::vector<double> cut_points_;
    std::vector<double> values_;
};

/// Value of an adjusted quantile statistic together with the level that
/// attains the defining sup/inf (smallest such level on ties) and the
/// quantile evaluated there.
struct AdjustedQuantileReport {
    double value;
    double binding_alpha;
    double binding_quantile;
};

/// Least shift t such that f dominates the shifted template:
/// min{t : f(x) >= shape(x - t) for all x}. Exact via the finite reduction
/// max_j (lower_quantile(f, level_j) - jump_j).
double max_adjusted_quantile(const StepCDF& f, const ShapeFn& shape);
AdjustedQuantileReport max_adjusted_quantile_report(const StepCDF& f, const ShapeFn& shape);

/// Best penalty-adjusted lower quantile:
/// sup over levels alpha of (lower_quantile(f, alpha) - handicap(alpha)),
/// computed exactly on the common refinement of the level partitions.
double max_adjusted_quantile(const StepCDF& f, const HandicapFn& handicap);
AdjustedQuantileReport max_adjusted_quantile_report(const StepCDF& f,
                                                    const HandicapFn& handicap);

/// Greatest shift t such that f stays below the shifted template:
/// max{t : f(x) <= shape(x - t) for all x}.
double min_adjusted_quantile(const StepCDF& f, const DualShapeFn& shape);
AdjustedQuantileReport min_adjusted_quantile_report(const StepCDF& f,
                                                    const DualShapeFn& shape);

/// Worst penalty-adjusted upper quantile:
/// inf over levels alpha of (upper_quantile(f, alpha) - handicap(alpha)).
double min_adjusted_quantile(const StepCDF& f, const DualHandicapFn& handicap);
AdjustedQuantileReport min_adjusted_quantile_report(const StepCDF& f,
                                                    const DualHandicapFn& handicap);

/// Handicap form of a shape template: penalty(alpha) = inf{x : shape(x) >= alpha}.
HandicapFn handicap_of(const ShapeFn& shape);

/// Shape form of a handicap: shape(x) = sup{alpha : handicap(alpha) <= x}.
/// Inverse of handicap_of on canonical forms.
ShapeFn shape_of(const HandicapFn& handicap);

/// Mirror of a shape template under reflection of outcomes:
/// dual(x) = 1 - sup_{y < -x} shape(y).
DualShapeFn dual_of(const ShapeFn& shape);

/// Inverse mirror, recovering the shape template from its dual.
ShapeFn primal_of(const DualShapeFn& shape);

/// Mirror of a handicap under reflection: dual(alpha) = -handicap(1 - alpha).
DualHandicapFn dual_of(const HandicapFn& handicap);

/// Inverse mirror: handicap(alpha) = -dual(1 - alpha).
HandicapFn primal_of(const DualHandicapFn& handicap);

/// The plain quantile as a handicap: zero penalty on (0, alpha], +infinity above.
HandicapFn quantile_handicap(double alpha);

/// Whether f(x) >= shape(x - t) for all x.
bool envelope_holds(const StepCDF& f, const ShapeFn& shape, double t);

/// Whether f(x) <= shape(x - t) for all x.
bool envelope_holds(const StepCDF& f, const DualShapeFn& shape, double t);

}  // namespace adjq
