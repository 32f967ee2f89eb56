#pragma once

#include "eqeta/gaussian_rational.hpp"
#include "eqeta/laurent_series.hpp"

namespace eqeta {

// Each function returns the expansion of f(c t) reliable to degree n.

/// exp(c t).
LaurentSeries exp_linear(const GaussianRational& c, int n);
/// Â(c t) = (c t / 2) / sinh(c t / 2); the analytic limit 1 for c = 0.
LaurentSeries ahat_series(const GaussianRational& c, int n);
/// 1 / (2 sinh(c t / 2)); throws ZeroLinearForm for c = 0.
LaurentSeries inv_two_sinh_half(const GaussianRational& c, int n);
/// coth(c t / 2); throws ZeroLinearForm for c = 0.
LaurentSeries coth_half(const GaussianRational& c, int n);
/// 2 sinh(c t / 2).
LaurentSeries two_sinh_half(const GaussianRational& c, int n);
/// 2 cosh(c t / 2).
LaurentSeries two_cosh_half(const GaussianRational& c, int n);
/// 1 / (c t), exact.
LaurentSeries inv_linear(const GaussianRational& c);

}  // namespace eqeta
