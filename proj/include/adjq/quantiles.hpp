#pragma once

#include "adjq/step_cdf.hpp"

namespace adjq {

/// inf{x : F(x) >= alpha} for alpha in (0,1). Left-continuous and
/// nondecreasing as a function of alpha.
double lower_quantile(const StepCDF& f, double alpha);

/// sup{x : F(x) <= alpha} for alpha in (0,1). Right-continuous and
/// nondecreasing as a function of alpha.
double upper_quantile(const StepCDF& f, double alpha);

namespace detail {

/// lower_quantile extended to alpha in (0, 1]; used by cell reductions where
/// the top cell's representative is the terminal level itself.
double lower_quantile_closed(const StepCDF& f, double alpha) noexcept;

}  // namespace detail

}  // namespace adjq
