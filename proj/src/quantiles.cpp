#include "adjq/quantiles.hpp"

#include <algorithm>

#include "adjq/error.hpp"

namespace adjq {

namespace {

void check_alpha(double alpha) {
    require(alpha > 0.0 && alpha < 1.0, errc::alpha_out_of_range,
            "quantile level must lie strictly between 0 and 1");
}

}  // namespace

double detail::lower_quantile_closed(const StepCDF& f, double alpha) noexcept {
    // First level >= alpha; one exists because the terminal level is 1.
    const auto& levels = f.levels();
    auto it = std::lower_bound(levels.begin(), levels.end(), alpha);
    return f.breakpoints()[static_cast<std::size_t>(it - levels.begin())];
}

double lower_quantile(const StepCDF& f, double alpha) {
    check_alpha(alpha);
    return detail::lower_quantile_closed(f, alpha);
}

double upper_quantile(const StepCDF& f, double alpha) {
    check_alpha(alpha);
    // First level strictly above alpha; F stays <= alpha up to that jump.
    const auto& levels = f.levels();
    auto it = std::upper_bound(levels.begin(), levels.end(), alpha);
    return f.breakpoints()[static_cast<std::size_t>(it - levels.begin())];
}

}  // namespace adjq
