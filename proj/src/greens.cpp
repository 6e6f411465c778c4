#include "vortonlab/greens.hpp"

#include "vortonlab/bessel.hpp"
#include "vortonlab/quadrature.hpp"

#include <cmath>
#include <vector>

namespace vortonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sphere_area(int n) { return n == 2 ? 2.0 * kPi : 4.0 * kPi; }

// z^nu K_nu(z), stable down to z = 0 for nu > 0.
double znu_knu(double nu, double z) {
    if (z < 1e-6) {
        if (nu <= 0.0) throw PoleError("z^nu K_nu: singular limit at 0 for nu <= 0");
        return std::pow(2.0, nu - 1.0) * std::tgamma(nu);
    }
    return std::pow(z, nu) * bessel_k(nu, z);
}

struct MaternForm {
    double scale;     // c: wavenumber-side pole scale (spatial decay rate)
    double amplitude; // A in G(r) = A (c r)^nu K_nu(c r)
    double nu;
};

MaternForm matern_form(const GreensProfile& g) {
    const double nu = g.p - 0.5 * g.n;
    const bool op = g.norm == Normalization::operator_symbol;
    const double c = op ? std::sqrt(static_cast<double>(g.p)) / g.eta : 1.0 / g.eta;
    double A;
    if (g.norm == Normalization::unit_peak) {
        if (nu <= 0.0)
            throw CapabilityError("matern profile has no finite peak for p <= n/2");
        A = 1.0 / (std::pow(2.0, nu - 1.0) * std::tgamma(nu));
    } else {
        A = std::pow(2.0, 1.0 - g.p) * std::pow(c, g.n) /
            (std::pow(2.0 * kPi, 0.5 * g.n) * std::tgamma(static_cast<double>(g.p)));
    }
    return {c, A, nu};
}

// int_0^x z^k e^{-z} dz for integer k >= 0.
double lower_exp_moment(int k, double x) {
    if (x < 2.0) {
        double term = std::pow(x, k + 1);
        double sum = term / (k + 1);
        for (int j = 1; j < 80; ++j) {
            term *= -x / j;
            sum += term / (k + j + 1);
            if (std::abs(term) < 1e-20 * (std::abs(sum) + 1e-300)) break;
        }
        return sum;
    }
    double fact = 1.0, poly = 1.0, xp = 1.0;
    for (int i = 1; i <= k; ++i) {
        fact *= i;
        xp *= x;
        poly += xp / fact;
    }
    return fact * (1.0 - std::exp(-x) * poly);
}

// Mean over a ball of the elementary (1 + x) e^{-x} profile, x = r/eta.
// Equals 24 x^{-3} (1 - e^{-x}(1 + x + x^2/2 + x^3/8)); evaluated through
// the exponential moments, which stay cancellation-free at small x.
double unit_peak_p3_mean(double x) {
    return 3.0 * (lower_exp_moment(2, x) + lower_exp_moment(3, x)) / (x * x * x);
}

// int_0^Z z^{nu+1} K_nu(z) dz, hybrid closed-form / quadrature.
double bessel_ball_integral(double nu, double Z) {
    if (Z < 2.0) {
        return integrate([nu](double z) { return std::pow(z, nu + 1.0) * bessel_k(nu, z); },
                         0.0, Z, 1e-14, 1e-13);
    }
    return std::pow(2.0, nu) * std::tgamma(nu + 1.0) - znu_knu(nu + 1.0, Z);
}

// Half-integer z^nu K_nu as sqrt(pi/2) e^{-z} * sum a_j z^{m-j}, m = nu - 1/2.
// Used for the elementary n=3 ball integrals.
void half_integer_poly(int m, std::vector<double>& coeff) {
    const int terms = std::max(m, 0) + 1;
    coeff.assign(terms, 0.0);
    if (m < 0) { // nu = -1/2: z^{-1/2} K_{1/2} = sqrt(pi/2) e^{-z} / z
        coeff[0] = 1.0;
        return;
    }
    double a = 1.0;
    coeff[0] = a; // j = 0
    for (int j = 1; j <= m; ++j) {
        a *= static_cast<double>((m + j) * (m - j + 1)) / (2.0 * j);
        coeff[j] = a;
    }
}

double matern_ball_integral_3d(const MaternForm& f, int p, double rho) {
    // int_0^rho G(s) s^2 ds with G = A (cs)^nu K_nu(cs), nu = (p-2) + 1/2
    const int m = p - 2;
    std::vector<double> coeff;
    half_integer_poly(m, coeff);
    const double Z = f.scale * rho;
    double sum = 0.0;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
        const int e = (m < 0 ? -1 : m - static_cast<int>(j)) + 2;
        sum += coeff[j] * lower_exp_moment(e, Z);
    }
    return f.amplitude * std::sqrt(0.5 * kPi) / std::pow(f.scale, 3) * sum;
}

} // namespace

void GreensProfile::validate() const {
    if (n != 2 && n != 3)
        throw CapabilityError("greens profile: only dimensions 2 and 3 are supported");
    switch (kind) {
    case GreensKind::yukawa_h_eps:
        if (!(eps > 0.0)) throw std::invalid_argument("yukawa profile requires eps > 0");
        if (norm == Normalization::unit_peak)
            throw CapabilityError("yukawa profile has a pole at 0; no unit-peak normalization");
        break;
    case GreensKind::matern_g_eta_p:
        if (!(eta > 0.0)) throw std::invalid_argument("matern profile requires eta > 0");
        if (p < 1) throw std::invalid_argument("matern profile requires p >= 1");
        break;
    case GreensKind::gaussian_limit:
        if (!(eta > 0.0)) throw std::invalid_argument("gaussian profile requires eta > 0");
        break;
    case GreensKind::unit_peak_p3:
        if (!(eta > 0.0)) throw std::invalid_argument("unit_peak_p3 profile requires eta > 0");
        if (n != 3 || p != 3)
            throw CapabilityError("unit_peak_p3 is the elementary p=3, n=3 profile");
        if (norm == Normalization::operator_symbol)
            throw CapabilityError("unit_peak_p3 uses the 1/eta length scale; "
                                  "use matern_g_eta_p for the operator symbol");
        break;
    }
}

double green_eval(const GreensProfile& g, double r) {
    g.validate();
    if (r < 0.0) throw std::domain_error("green_eval: r >= 0 required");
    switch (g.kind) {
    case GreensKind::yukawa_h_eps: {
        if (r == 0.0) throw PoleError("yukawa Green's function has a pole at r = 0");
        const double z = g.eps * r;
        const double mu = 1.0 - 0.5 * g.n; // (eps r)^{1-n/2} K_{n/2-1}
        double v = std::pow(2.0 * kPi, -0.5 * g.n) * std::pow(g.eps, g.n - 2) *
                   std::pow(z, mu) * bessel_k(0.5 * g.n - 1.0, z);
        if (g.norm == Normalization::unit_mass) v *= g.eps * g.eps;
        return v;
    }
    case GreensKind::matern_g_eta_p: {
        const MaternForm f = matern_form(g);
        if (f.nu <= 0.0 && r == 0.0) throw PoleError("matern profile singular at 0 for p <= n/2");
        return f.amplitude * znu_knu(f.nu, f.scale * r);
    }
    case GreensKind::gaussian_limit: {
        const double shape = std::exp(-r * r / (4.0 * g.eta * g.eta));
        if (g.norm == Normalization::unit_peak) return shape;
        return shape * std::pow(2.0 * std::sqrt(kPi) * g.eta, -g.n);
    }
    case GreensKind::unit_peak_p3: {
        const double x = r / g.eta;
        const double shape = (1.0 + x) * std::exp(-x);
        if (g.norm == Normalization::unit_mass)
            return shape / (32.0 * kPi * std::pow(g.eta, 3));
        return shape;
    }
    }
    throw std::logic_error("unreachable");
}

double green_deriv(const GreensProfile& g, double r) {
    g.validate();
    switch (g.kind) {
    case GreensKind::yukawa_h_eps: {
        if (r <= 0.0) throw PoleError("yukawa Green's function has a pole at r = 0");
        const double z = g.eps * r;
        const double mu = 1.0 - 0.5 * g.n;
        double v = -std::pow(2.0 * kPi, -0.5 * g.n) * std::pow(g.eps, g.n - 1) *
                   std::pow(z, mu) * bessel_k(0.5 * g.n, z);
        if (g.norm == Normalization::unit_mass) v *= g.eps * g.eps;
        return v;
    }
    case GreensKind::matern_g_eta_p: {
        const MaternForm f = matern_form(g);
        const double z = f.scale * r;
        if (z == 0.0) {
            // On the (p, n in {2,3}) lattice nu is a multiple of 1/2.
            if (f.nu > 0.75) return 0.0;
            return -f.amplitude * f.scale * std::sqrt(0.5 * kPi); // nu = 1/2 kink
        }
        return -f.amplitude * f.scale * std::pow(z, f.nu) * bessel_k(std::abs(f.nu - 1.0), z);
    }
    case GreensKind::gaussian_limit:
        return green_eval(g, r) * (-r / (2.0 * g.eta * g.eta));
    case GreensKind::unit_peak_p3: {
        const double x = r / g.eta;
        double v = -(x / g.eta) * std::exp(-x);
        if (g.norm == Normalization::unit_mass) v /= 32.0 * kPi * std::pow(g.eta, 3);
        return v;
    }
    }
    throw std::logic_error("unreachable");
}

double green_at_zero(const GreensProfile& g) {
    g.validate();
    switch (g.kind) {
    case GreensKind::yukawa_h_eps:
        throw PoleError("yukawa Green's function has a pole at r = 0");
    case GreensKind::matern_g_eta_p: {
        const MaternForm f = matern_form(g);
        if (f.nu <= 0.0) throw PoleError("matern profile singular at 0 for p <= n/2");
        return f.amplitude * std::pow(2.0, f.nu - 1.0) * std::tgamma(f.nu);
    }
    case GreensKind::gaussian_limit:
    case GreensKind::unit_peak_p3:
        return green_eval(g, 0.0);
    }
    throw std::logic_error("unreachable");
}

double green_symbol(const GreensProfile& g, double k) {
    g.validate();
    const double k2 = k * k;
    switch (g.kind) {
    case GreensKind::yukawa_h_eps: {
        double v = 1.0 / (g.eps * g.eps + k2);
        if (g.norm == Normalization::unit_mass) v *= g.eps * g.eps;
        return v;
    }
    case GreensKind::matern_g_eta_p: {
        if (g.norm == Normalization::operator_symbol)
            return std::pow(1.0 + g.eta * g.eta * k2 / g.p, -g.p);
        const double shape = std::pow(1.0 + g.eta * g.eta * k2, -g.p);
        if (g.norm == Normalization::unit_mass) return shape;
        const double nu = g.p - 0.5 * g.n;
        const double mass = std::pow(2.0 * kPi, 0.5 * g.n) * std::tgamma(static_cast<double>(g.p)) *
                            std::pow(2.0, g.p - 1.0) * std::pow(g.eta, g.n) /
                            (std::pow(2.0, nu - 1.0) * std::tgamma(nu));
        return mass * shape;
    }
    case GreensKind::gaussian_limit: {
        const double shape = std::exp(-g.eta * g.eta * k2);
        if (g.norm == Normalization::unit_peak)
            return shape * std::pow(2.0 * std::sqrt(kPi) * g.eta, g.n);
        return shape;
    }
    case GreensKind::unit_peak_p3: {
        const double shape = std::pow(1.0 + g.eta * g.eta * k2, -3.0);
        if (g.norm == Normalization::unit_mass) return shape;
        return 32.0 * kPi * std::pow(g.eta, 3) * shape;
    }
    }
    throw std::logic_error("unreachable");
}

double green_total_mass(const GreensProfile& g) { return green_symbol(g, 0.0); }

double mean_over_ball(const GreensProfile& g, double r) {
    g.validate();
    if (!(r > 0.0)) throw std::domain_error("mean_over_ball: r > 0 required");
    switch (g.kind) {
    case GreensKind::unit_peak_p3: {
        double v = unit_peak_p3_mean(r / g.eta);
        if (g.norm == Normalization::unit_mass) v /= 32.0 * kPi * std::pow(g.eta, 3);
        return v;
    }
    case GreensKind::matern_g_eta_p: {
        const MaternForm f = matern_form(g);
        if (g.n == 2) {
            const double integral = f.amplitude / (f.scale * f.scale) *
                                    bessel_ball_integral(f.nu, f.scale * r);
            return 2.0 * integral / (r * r);
        }
        const double integral = matern_ball_integral_3d(f, g.p, r);
        return 3.0 * integral / (r * r * r);
    }
    default:
        return mean_over_ball_quadrature(g, r);
    }
}

double mean_over_ball_quadrature(const GreensProfile& g, double r) {
    g.validate();
    if (!(r > 0.0)) throw std::domain_error("mean_over_ball: r > 0 required");
    const int n = g.n;
    const double integral = integrate(
        [&](double s) {
            if (s == 0.0) return 0.0;
            return green_eval(g, s) * std::pow(s, n - 1);
        },
        0.0, r, 1e-14, 1e-12);
    return n * integral / std::pow(r, n);
}

double mean_over_ball_deriv(const GreensProfile& g, double r) {
    return g.n * (green_eval(g, r) - mean_over_ball(g, r)) / r;
}

double radial_fourier_inverse(const std::function<double(double)>& symbol,
                              int n, double r, double tol) {
    if (n != 2 && n != 3)
        throw CapabilityError("radial_fourier_inverse: only dimensions 2 and 3");
    if (!(r > 0.0)) throw std::domain_error("radial_fourier_inverse: r > 0 required");

    // Conditional convergence of the oscillatory integral needs the symbol to
    // decay faster than 1/k; slowly decaying symbols (Yukawa, k^-2) are fine.
    double peak = 0.0;
    for (double k : {0.5, 1.0, 2.0}) peak = std::max(peak, std::abs(symbol(k)));
    const double far = std::abs(symbol(1000.0));
    if (far * std::pow(1000.0, 1.2) > 10.0 * (peak + 1e-300))
        throw QuadratureError("radial_fourier_inverse: symbol does not decay fast enough");

    const auto integrand = [&](double k) {
        if (k == 0.0) return 0.0;
        if (n == 3) return symbol(k) * k * std::sin(k * r);
        return symbol(k) * k * std::cyl_bessel_j(0.0, k * r);
    };

    // The head interval [0, pi/r] can be enormous for small r while the
    // symbol's features live at k = O(1); split it geometrically so the
    // adaptive rule cannot overlook them.
    const double panel = kPi / r;
    double head = 0.0, edge = 0.0;
    for (double next = 0.25; edge < panel; next *= 2.0) {
        const double hi = std::min(next, panel);
        head += integrate(integrand, edge, hi, 1e-14, 1e-13);
        edge = hi;
    }
    const double abs_tol = tol * (std::abs(head) + 1e-30);
    const double tail = integrate_oscillatory_tail(integrand, panel, panel, abs_tol);
    const double total = head + tail;
    return (n == 3) ? total / (2.0 * kPi * kPi * r) : total / (2.0 * kPi);
}

} // namespace vortonlab
