#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace adjq {

/// A right-continuous step distribution function with finitely many jumps.
///
/// Stored as strictly increasing jump locations x_1 < ... < x_k together with
/// the strictly increasing levels v_1 < ... < v_k attained on [x_j, x_{j+1}).
/// The function is 0 below x_1 and the terminal level is exactly 1, so every
/// instance is a genuine probability distribution on the reals.
///
/// Construction canonicalizes: consecutive equal levels are merged (keeping
/// the first jump location of each run). All values are immutable afterwards;
/// instances may be freely shared across threads.
class StepCDF {
public:
    /// Builds a CDF from jump locations and levels. Throws on empty input,
    /// non-monotone sequences, levels outside (0, 1], or terminal level != 1.
    StepCDF(std::vector<double> breakpoints, std::vector<double> levels);

    /// The degenerate distribution putting all mass at x.
    static StepCDF point_mass(double x);

    /// Empirical CDF of the samples, each with weight 1/n.
    static StepCDF from_samples(std::span<const double> samples);

    /// Weighted empirical CDF. Weights must be positive and sum to 1 within
    /// 1e-12; they are renormalized so the terminal level is exactly 1.
    /// Duplicate sample values are merged by summing their weights.
    static StepCDF from_samples(std::span<const double> samples,
                                std::span<const double> weights);

    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    const std::vector<double>& levels() const noexcept { return levels_; }
    std::size_t jump_count() const noexcept { return breakpoints_.size(); }

    double min_support() const noexcept { return breakpoints_.front(); }
    double max_support() const noexcept { return breakpoints_.back(); }

    /// F(x): right-continuous evaluation.
    double eval(double x) const noexcept;

    /// F(x^-) = sup_{y<x} F(y): the left limit at x.
    double eval_left(double x) const noexcept;

    double operator()(double x) const noexcept { return eval(x); }

    /// Canonical forms are compared componentwise, so equality is exact.
    friend bool operator==(const StepCDF&, const StepCDF&) = default;

private:
    std::vector<double> breakpoints_;
    std::vector<double> levels_;
};

/// First-order stochastic dominance: true iff f lies weakly above g in the
/// outcome sense, i.e. f(x) <= g(x) pointwise.
bool fosd_ge(const StepCDF& f, const StepCDF& g);

/// Least upper bound in the dominance order (pointwise minimum of the CDFs).
StepCDF join(const StepCDF& f, const StepCDF& g);

/// Greatest lower bound in the dominance order (pointwise maximum).
StepCDF meet(const StepCDF& f, const StepCDF& g);

/// Pushforward under x -> x + b.
StepCDF translate(const StepCDF& f, double b);

/// Pushforward under x -> a*x + b with a > 0.
StepCDF affine_push(const StepCDF& f, double a, double b);

/// Distribution of -X when X ~ f: reflect(f)(x) = 1 - f((-x)^-).
/// An involution and an order anti-isomorphism of the dominance lattice.
StepCDF reflect(const StepCDF& f);

/// Levy distance between two step CDFs, computed by bisection to 1e-9.
/// Metrizes weak convergence; used for probe diagnostics only.
double levy_distance(const StepCDF& f, const StepCDF& g);

}  // namespace adjq
