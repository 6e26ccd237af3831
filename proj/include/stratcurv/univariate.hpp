#pragma once

#include <vector>

#include "stratcurv/common.hpp"

namespace stratcurv {

/// Real root of a univariate polynomial inside a window.
struct UnivariateRoot {
    double s = 0.0;
    bool sign_change = true;  // false = even-multiplicity contact
};

double poly_eval(const std::vector<double>& coeffs, double s);

/// All distinct real roots in [a, b], nearby roots merged (relative
/// cluster width from NumericConfig). Degree <= 2 solved in closed form,
/// higher degrees via the companion matrix plus Newton/bisection polish.
/// Returns empty and sets identically_zero when the polynomial vanishes
/// as a whole (relative to coeff_scale).
std::vector<UnivariateRoot> poly_roots_in(const std::vector<double>& coeffs,
                                          double a, double b,
                                          bool* identically_zero = nullptr);

}  // namespace stratcurv
