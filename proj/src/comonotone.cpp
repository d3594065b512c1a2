#include "adjq/comonotone.hpp"

#include <algorithm>
#include <cmath>

#include "adjq/error.hpp"
#include "adjq/quantiles.hpp"

namespace adjq {

FiniteJoint::FiniteJoint(std::vector<Outcome> outcomes) {
    require(!outcomes.empty(), errc::empty_input, "joint needs at least one outcome");
    double total = 0.0;
    for (const auto& o : outcomes) {
        require(std::isfinite(o.p) && o.p > 0.0, errc::bad_weights,
                "outcome probabilities must be positive");
        require(std::isfinite(o.x) && std::isfinite(o.y), errc::validation_error,
                "outcome values must be finite");
        total += o.p;
    }
    require(std::abs(total - 1.0) <= 1e-12, errc::bad_weights,
            "outcome probabilities must sum to 1 within 1e-12");
    outcomes_ = std::move(outcomes);
}

bool is_comonotonic(const FiniteJoint& joint) {
    const auto& o = joint.outcomes();
    for (std::size_t i = 0; i < o.size(); ++i) {
        for (std::size_t j = i + 1; j < o.size(); ++j) {
            if ((o[i].x - o[j].x) * (o[i].y - o[j].y) < 0.0) return false;
        }
    }
    return true;
}

namespace {

// CDF of a functional of the joint. Each level is the mass of
// {i : value(i) <= z}, summed in outcome-index order so that nested event sets
// (as arise for comonotonic pairs) produce identical partial sums on both
// sides of a lattice comparison. The terminal level is 1 by definition of a
// probability space rather than by summation.
template <typename ValueFn>
StepCDF cdf_of(const FiniteJoint& joint, ValueFn&& value) {
    const auto& o = joint.outcomes();
    std::vector<double> distinct;
    distinct.reserve(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) distinct.push_back(value(i));
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<double> levels;
    levels.reserve(distinct.size());
    for (double z : distinct) {
        double mass = 0.0;
        for (std::size_t i = 0; i < o.size(); ++i) {
            if (value(i) <= z) mass += o[i].p;
        }
        require(levels.empty() || levels.back() < mass, errc::validation_error,
                "outcome mass too small to resolve in double precision");
        levels.push_back(mass);
    }
    levels.back() = 1.0;
    require(levels.size() == 1 || levels[levels.size() - 2] < 1.0, errc::validation_error,
            "outcome mass too small to resolve in double precision");
    return StepCDF(std::move(distinct), std::move(levels));
}

}  // namespace

StepCDF marginal_cdf(const FiniteJoint& joint, Coord which) {
    const auto& o = joint.outcomes();
    if (which == Coord::X) {
        return cdf_of(joint, [&](std::size_t i) { return o[i].x; });
    }
    return cdf_of(joint, [&](std::size_t i) { return o[i].y; });
}

StepCDF rv_join_cdf(const FiniteJoint& joint) {
    const auto& o = joint.outcomes();
    return cdf_of(joint, [&](std::size_t i) { return std::max(o[i].x, o[i].y); });
}

StepCDF rv_meet_cdf(const FiniteJoint& joint) {
    const auto& o = joint.outcomes();
    return cdf_of(joint, [&](std::size_t i) { return std::min(o[i].x, o[i].y); });
}

LatticeCommutation check_lattice_commutation(const FiniteJoint& joint) {
    const StepCDF fx = marginal_cdf(joint, Coord::X);
    const StepCDF fy = marginal_cdf(joint, Coord::Y);
    const StepCDF f_max = rv_join_cdf(joint);
    const StepCDF f_min = rv_meet_cdf(joint);
    const StepCDF lattice_join = join(fx, fy);
    const StepCDF lattice_meet = meet(fx, fy);

    LatticeCommutation r;
    r.join_dominates = fosd_ge(f_max, lattice_join);
    r.meet_dominated = fosd_ge(lattice_meet, f_min);
    r.comonotone_equality =
        !is_comonotonic(joint) || (f_max == lattice_join && f_min == lattice_meet);
    return r;
}

FiniteJoint comonotone_coupling(const StepCDF& f, const StepCDF& g) {
    std::vector<double> grid;
    grid.reserve(f.jump_count() + g.jump_count());
    std::merge(f.levels().begin(), f.levels().end(), g.levels().begin(), g.levels().end(),
               std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    // Half-open cells (t_{i-1}, t_i] of the refined level partition; both
    // lower quantiles are constant on each cell and attained at its right
    // endpoint.
    std::vector<Outcome> atoms;
    atoms.reserve(grid.size());
    double prev = 0.0;
    for (double t : grid) {
        atoms.push_back({t - prev, detail::lower_quantile_closed(f, t),
                         detail::lower_quantile_closed(g, t)});
        prev = t;
    }
    return FiniteJoint(std::move(atoms));
}

}  // namespace adjq
