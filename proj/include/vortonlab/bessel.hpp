#pragma once

#include <stdexcept>

namespace vortonlab {

/// Modified Bessel function of the second kind K_nu(x), real order nu >= 0
/// (negative orders are folded with K_{-nu} = K_nu), x > 0.
///
/// Half-integer orders use the exact elementary closed forms. Other orders
/// use Temme's ascending series for x < 2 and the Steed/CF2 continued
/// fraction for x >= 2, followed by the stable upward recurrence in the
/// order. Accuracy is ~1e-14 relative across x in [1e-6, 50].
///
/// x <= 0 throws std::domain_error. If the result would overflow (tiny x at
/// large order) the value saturates at DBL_MAX and *overflow is set.
double bessel_k(double nu, double x, bool* overflow = nullptr);

/// d/dx K_nu(x) = -(K_{nu-1}(x) + K_{nu+1}(x))/2.
double bessel_k_derivative(double nu, double x);

} // namespace vortonlab
