#pragma once

#include <functional>
#include <stdexcept>

namespace vortonlab {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Subdivides until the local
/// error estimate satisfies |err| <= max(abs_tol, rel_tol*|I|) per panel.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12,
                 int max_depth = 50);

/// Semi-infinite oscillatory integral: sums panel integrals of length
/// `panel` starting at `a` and accelerates the partial sums with Wynn's
/// epsilon algorithm. Panels should be (roughly) half-periods of the
/// integrand's oscillation; for decaying non-oscillatory tails the plain
/// partial sums already converge and acceleration is a no-op.
double integrate_oscillatory_tail(const std::function<double(double)>& f,
                                  double a, double panel,
                                  double abs_tol = 1e-12, int max_panels = 256);

} // namespace vortonlab
