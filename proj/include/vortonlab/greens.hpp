#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace vortonlab {

struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class GreensKind {
    yukawa_h_eps,   // Green's function of (eps^2 - Laplace)
    matern_g_eta_p, // Green's function of (I - (eta^2/p) Laplace)^p
    gaussian_limit, // p -> infinity limit of the above
    unit_peak_p3,   // elementary (1+r/eta) e^{-r/eta} profile (p=3, n=3)
};

enum class Normalization {
    operator_symbol, // Fourier transform equals the operator symbol exactly
    unit_peak,       // profile(0) = 1
    unit_mass,       // integral over R^n = 1 (with the 1/eta length scale)
};

/// Radial scalar Green's function with dimension and normalization metadata.
///
/// Length-scale conventions: operator_symbol uses the (1 + eta^2 |xi|^2 / p)^{-p}
/// symbol, whose spatial decay rate is sqrt(p)/eta. unit_peak and unit_mass use
/// the plain e^{-r/eta} decay (the convention of the elementary p=3, n=3
/// profile); the two differ by a rescaling of eta.
struct GreensProfile {
    GreensKind kind = GreensKind::matern_g_eta_p;
    int n = 3;                // dimension, 2 or 3
    double eps = 0.0;         // 1/length, yukawa only
    double eta = 1.0;         // length
    int p = 3;                // smoothing exponent
    Normalization norm = Normalization::operator_symbol;

    void validate() const;    // throws CapabilityError / std::invalid_argument
};

/// Profile value at radius r >= 0. Yukawa has a pole at r = 0 (PoleError).
double green_eval(const GreensProfile& profile, double r);

/// dG/dr.
double green_deriv(const GreensProfile& profile, double r);

/// G(0); throws PoleError when the profile is singular at the origin.
double green_at_zero(const GreensProfile& profile);

/// Integral of the profile over all of R^n.
double green_total_mass(const GreensProfile& profile);

/// Fourier transform of the profile at wavenumber k = |xi|.
double green_symbol(const GreensProfile& profile, double k);

/// Mean of the profile over the ball of radius r (closed forms where the
/// profile is matern/unit_peak, radial quadrature otherwise).
double mean_over_ball(const GreensProfile& profile, double r);

/// Same quantity by adaptive radial quadrature only (oracle path).
double mean_over_ball_quadrature(const GreensProfile& profile, double r);

/// d/dr of mean_over_ball, via Mean' = n (G - Mean) / r.
double mean_over_ball_deriv(const GreensProfile& profile, double r);

/// Inverse Fourier transform of a radial symbol at radius r > 0, by 1D
/// oscillatory quadrature (n=3 sine transform, n=2 Hankel J0 transform).
/// The symbol must decay at least like |xi|^{-(n+1)}.
double radial_fourier_inverse(const std::function<double(double)>& symbol,
                              int n, double r, double tol = 1e-10);

} // namespace vortonlab
