#pragma once

#include <vector>

#include "adjq/step_cdf.hpp"

namespace adjq {

/// One atom of a finite joint distribution: probability p of observing the
/// pair (x, y).
struct Outcome {
    double p;
    double x;
    double y;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// A finite probability space carrying two random variables. Probabilities
/// must be positive and sum to 1 within 1e-12.
class FiniteJoint {
public:
    explicit FiniteJoint(std::vector<Outcome> outcomes);

    const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }
    std::size_t size() const noexcept { return outcomes_.size(); }

    friend bool operator==(const FiniteJoint&, const FiniteJoint&) = default;

private:
    std::vector<Outcome> outcomes_;
};

enum class Coord { X, Y };

/// Whether the two variables move weakly in the same direction:
/// (x_i - x_j)(y_i - y_j) >= 0 for every outcome pair.
bool is_comonotonic(const FiniteJoint& joint);

/// Exact CDF of one coordinate.
StepCDF marginal_cdf(const FiniteJoint& joint, Coord which);

/// Exact CDF of max(X, Y).
StepCDF rv_join_cdf(const FiniteJoint& joint);

/// Exact CDF of min(X, Y).
StepCDF rv_meet_cdf(const FiniteJoint& joint);

/// How the pointwise lattice of random variables relates to the dominance
/// lattice of their distributions on this joint.
struct LatticeCommutation {
    /// CDF of max(X, Y) dominates the lattice join of the marginals.
    bool join_dominates;
    /// Lattice meet of the marginals dominates the CDF of min(X, Y).
    bool meet_dominated;
    /// Vacuously true unless the joint is comonotonic, in which case both
    /// lattice operations commute with taking distributions, exactly.
    bool comonotone_equality;
};

LatticeCommutation check_lattice_commutation(const FiniteJoint& joint);

/// The quantile coupling of two distributions: a comonotonic joint whose
/// marginals reproduce f and g and whose pointwise max/min realize the
/// lattice join/meet. Atoms are the cells of the common refinement of the two
/// level partitions, with each variable at its lower quantile on the cell.
FiniteJoint comonotone_coupling(const StepCDF& f, const StepCDF& g);

}  // namespace adjq
