#include "doctest.h"

#include "vortonlab/bessel.hpp"
#include "vortonlab/greens.hpp"
#include "vortonlab/quadrature.hpp"

#include <cmath>
#include <vector>

using namespace vortonlab;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Independent oracle: K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt.
double bessel_k_quadrature(double nu, double x) {
    const double tmax = std::acosh(745.0 / x);
    return integrate([&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); },
                     0.0, tmax, 1e-15, 1e-14);
}
} // namespace

TEST_CASE("quadrature basics") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi) == doctest::Approx(2.0).epsilon(1e-13));
    // Oscillatory semi-infinite: int_0^inf sin(k)/k dk = pi/2 (slowly decaying,
    // pure acceleration territory).
    const double head = integrate([](double k) { return k == 0 ? 1.0 : std::sin(k) / k; }, 0.0, kPi);
    const double tail = integrate_oscillatory_tail(
        [](double k) { return std::sin(k) / k; }, kPi, kPi, 1e-12);
    CHECK(head + tail == doctest::Approx(kPi / 2).epsilon(1e-9));
}

TEST_CASE("bessel_k half-integer closed forms") {
    CHECK(rel_err(bessel_k(0.5, 1.0), std::sqrt(kPi / 2.0) * std::exp(-1.0)) < 1e-14);
    CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.46106850444789).epsilon(1e-10));
    CHECK(rel_err(bessel_k(1.5, 1.0), std::sqrt(kPi / 2.0) * std::exp(-1.0) * 2.0) < 1e-14);
    CHECK(bessel_k(1.5, 1.0) == doctest::Approx(0.92213700889578).epsilon(1e-10));

    // Explicit polynomial forms, written out independently of the recurrence.
    for (double x = 0.01; x <= 30.0; x *= 1.37) {
        const double pref = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
        const double xi = 1.0 / x;
        CHECK(rel_err(bessel_k(0.5, x), pref) < 1e-12);
        CHECK(rel_err(bessel_k(1.5, x), pref * (1 + xi)) < 1e-12);
        CHECK(rel_err(bessel_k(2.5, x), pref * (1 + 3 * xi + 3 * xi * xi)) < 1e-12);
        CHECK(rel_err(bessel_k(3.5, x), pref * (1 + 6 * xi + 15 * xi * xi + 15 * xi * xi * xi)) < 1e-12);
        CHECK(rel_err(bessel_k(4.5, x),
                      pref * (1 + 10 * xi + 45 * xi * xi + 105 * xi * xi * xi + 105 * xi * xi * xi * xi)) < 1e-12);
    }
}

TEST_CASE("bessel_k integer and fractional orders vs oracles") {
    // Frozen via the integral-representation oracle below: K_0(1).
    const double k01_oracle = bessel_k_quadrature(0.0, 1.0);
    CHECK(k01_oracle == doctest::Approx(0.42102443824070834).epsilon(1e-12));
    CHECK(rel_err(bessel_k(0.0, 1.0), 0.42102443824070834) < 1e-13);

    for (double nu : {0.0, 1.0, 2.0, 3.0, 5.0, 0.3, 1.7, 4.2}) {
        for (double x : {1e-6, 1e-3, 0.1, 0.5, 1.0, 1.9999, 2.0001, 3.0, 10.0, 30.0, 50.0}) {
            const double ours = bessel_k(nu, x);
            const double ref = std::cyl_bessel_k(nu, x);
            CHECK(rel_err(ours, ref) < 5e-11);
            if (x >= 0.01 && x <= 20.0) {
                CHECK(rel_err(ours, bessel_k_quadrature(nu, x)) < 1e-10);
            }
        }
    }
}

TEST_CASE("bessel_k error handling") {
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(1.0, -2.0), std::domain_error);
    bool overflow = false;
    const double v = bessel_k(60.0, 1e-6, &overflow);
    CHECK(overflow);
    CHECK(v > 1e300);
    overflow = true;
    bessel_k(1.0, 1.0, &overflow);
    CHECK(!overflow);
}

TEST_CASE("yukawa Green's function") {
    GreensProfile h{GreensKind::yukawa_h_eps, 3, 1.0, 0.0, 1, Normalization::operator_symbol};
    CHECK(rel_err(green_eval(h, 1.0), std::exp(-1.0) / (4 * kPi)) < 1e-13);
    CHECK(green_eval(h, 1.0) == doctest::Approx(0.02927491767352).epsilon(1e-8));

    // n=3 closed form e^{-eps r}/(4 pi r) across a grid.
    for (double eps : {0.1, 0.7, 2.0, 5.0}) {
        GreensProfile he{GreensKind::yukawa_h_eps, 3, eps, 0.0, 1, Normalization::operator_symbol};
        for (double r : {0.1, 0.9, 2.3, 5.0}) {
            CHECK(rel_err(green_eval(he, r), std::exp(-eps * r) / (4 * kPi * r)) < 1e-12);
        }
    }

    // eps -> 0 limit: 4 pi r H_eps(r) -> 1 (the harmonic Green's function).
    GreensProfile hsmall{GreensKind::yukawa_h_eps, 3, 1e-4, 0.0, 1, Normalization::operator_symbol};
    CHECK(std::abs(4 * kPi * 2.0 * green_eval(hsmall, 2.0) - 1.0) < 3e-4);

    // Scaling law H_eps(r) = eps^{n-2} H_1(eps r).
    for (int n : {2, 3}) {
        GreensProfile h1{GreensKind::yukawa_h_eps, n, 1.0, 0.0, 1, Normalization::operator_symbol};
        for (double eps : {0.3, 1.7, 4.0}) {
            GreensProfile he{GreensKind::yukawa_h_eps, n, eps, 0.0, 1, Normalization::operator_symbol};
            for (double r : {0.2, 1.0, 3.0}) {
                const double lhs = green_eval(he, r);
                const double rhs = std::pow(eps, n - 2) * green_eval(h1, eps * r);
                CHECK(rel_err(lhs, rhs) < 1e-10);
            }
        }
    }

    CHECK_THROWS_AS(green_eval(h, 0.0), PoleError);
    GreensProfile bad = h;
    bad.n = 4;
    CHECK_THROWS_AS(green_eval(bad, 1.0), CapabilityError);
}

TEST_CASE("unit_peak_p3 profile and ball means") {
    GreensProfile g{GreensKind::unit_peak_p3, 3, 0.0, 1.0, 3, Normalization::unit_peak};
    CHECK(rel_err(green_eval(g, 2.0), 3.0 * std::exp(-2.0)) < 1e-14);
    CHECK(green_eval(g, 2.0) == doctest::Approx(0.40600584970984).epsilon(1e-10));
    CHECK(green_at_zero(g) == 1.0);

    // Frozen from the quadrature oracle: Mean over the unit ball.
    const double oracle = mean_over_ball_quadrature(g, 1.0);
    CHECK(oracle == doctest::Approx(0.82359520619913).epsilon(1e-10));
    CHECK(rel_err(mean_over_ball(g, 1.0), 0.82359520619913) < 1e-10);

    // Small-r expansion 1 - (3/10) r^2 + O(r^3).
    for (double r : {1e-3, 1e-2, 0.05}) {
        const double coeff = (1.0 - mean_over_ball(g, r)) / (r * r);
        CHECK(std::abs(coeff - 0.3) < 0.2 * r);
    }

    // Large-r: Mean -> (total mass) / vol = 24 / r^3 for the unit-peak profile.
    for (double r : {40.0, 80.0}) {
        CHECK(rel_err(mean_over_ball(g, r) * r * r * r, 24.0) < 1e-10);
    }
    CHECK(rel_err(green_total_mass(g), 32.0 * kPi) < 1e-14);

    // Closed form vs quadrature across the spec'd radius range.
    for (double r = 0.05; r <= 20.0; r *= 1.45) {
        CHECK(rel_err(mean_over_ball(g, r), mean_over_ball_quadrature(g, r)) < 1e-8);
    }
}

TEST_CASE("matern ball means: closed paths vs quadrature") {
    std::vector<GreensProfile> profiles = {
        {GreensKind::matern_g_eta_p, 2, 0.0, 1.0, 2, Normalization::operator_symbol},
        {GreensKind::matern_g_eta_p, 2, 0.0, 0.6, 3, Normalization::unit_mass},
        {GreensKind::matern_g_eta_p, 3, 0.0, 1.0, 3, Normalization::unit_peak},
        {GreensKind::matern_g_eta_p, 3, 0.0, 1.3, 4, Normalization::operator_symbol},
        {GreensKind::matern_g_eta_p, 3, 0.0, 1.0, 2, Normalization::unit_mass},
    };
    for (const auto& g : profiles) {
        for (double r : {0.05, 0.3, 1.0, 4.0, 12.0}) {
            CHECK(rel_err(mean_over_ball(g, r), mean_over_ball_quadrature(g, r)) < 1e-8);
        }
        // Mean' = n (G - Mean)/r against a central difference.
        const double r = 0.8, h = 1e-5;
        const double fd = (mean_over_ball(g, r + h) - mean_over_ball(g, r - h)) / (2 * h);
        CHECK(std::abs(mean_over_ball_deriv(g, r) - fd) < 1e-8 * (1.0 + std::abs(fd)));
    }

    // unit_peak_p3 is the matern p=3, n=3 unit-peak profile with the 1/eta scale.
    GreensProfile a{GreensKind::unit_peak_p3, 3, 0.0, 0.8, 3, Normalization::unit_peak};
    GreensProfile b{GreensKind::matern_g_eta_p, 3, 0.0, 0.8, 3, Normalization::unit_peak};
    for (double r : {0.1, 1.0, 3.0}) {
        CHECK(rel_err(green_eval(a, r), green_eval(b, r)) < 1e-13);
        CHECK(rel_err(mean_over_ball(a, r), mean_over_ball(b, r)) < 1e-12);
    }
}

TEST_CASE("green_deriv matches finite differences") {
    std::vector<GreensProfile> profiles = {
        {GreensKind::yukawa_h_eps, 3, 1.3, 0.0, 1, Normalization::operator_symbol},
        {GreensKind::yukawa_h_eps, 2, 0.8, 0.0, 1, Normalization::operator_symbol},
        {GreensKind::matern_g_eta_p, 3, 0.0, 1.0, 3, Normalization::unit_peak},
        {GreensKind::matern_g_eta_p, 2, 0.0, 0.7, 3, Normalization::operator_symbol},
        {GreensKind::gaussian_limit, 3, 0.0, 1.0, 3, Normalization::unit_mass},
        {GreensKind::unit_peak_p3, 3, 0.0, 1.0, 3, Normalization::unit_peak},
    };
    for (const auto& g : profiles) {
        for (double r : {0.3, 1.0, 2.5}) {
            const double h = 1e-6 * std::max(1.0, r);
            const double fd = (green_eval(g, r + h) - green_eval(g, r - h)) / (2 * h);
            CHECK(rel_err(green_deriv(g, r), fd) < 1e-7);
        }
    }
}

TEST_CASE("radial Fourier inversion") {
    // Yukawa: symbol 1/(1+k^2) in R^3 inverts to e^{-r}/(4 pi r).
    const auto yukawa = [](double k) { return 1.0 / (1.0 + k * k); };
    for (double r : {0.3, 1.0, 4.0}) {
        CHECK(rel_err(radial_fourier_inverse(yukawa, 3, r), std::exp(-r) / (4 * kPi * r)) < 1e-7);
    }

    // Gaussian: e^{-k^2} inverts to (2 sqrt(pi))^{-3} e^{-r^2/4}.
    const auto gauss = [](double k) { return std::exp(-k * k); };
    CHECK(rel_err(radial_fourier_inverse(gauss, 3, 0.5),
                  std::pow(2 * std::sqrt(kPi), -3.0) * std::exp(-0.25 / 4.0)) < 1e-7);

    // (1+k^2)^{-3} inverts to (1+r)e^{-r}/(32 pi).
    const auto matern3 = [](double k) { return std::pow(1.0 + k * k, -3.0); };
    for (double r : {0.5, 1.0, 2.0}) {
        CHECK(rel_err(radial_fourier_inverse(matern3, 3, r),
                      (1.0 + r) * std::exp(-r) / (32 * kPi)) < 1e-7);
    }

    // n=2 Hankel route: symbol 1/(1+k^2) inverts to K_0(r)/(2 pi).
    for (double r : {0.5, 1.5}) {
        CHECK(rel_err(radial_fourier_inverse(yukawa, 2, r), bessel_k(0.0, r) / (2 * kPi)) < 1e-7);
    }

    // Operator-normalized matern symbol round-trips through the profile.
    GreensProfile g{GreensKind::matern_g_eta_p, 3, 0.0, 0.7, 3, Normalization::operator_symbol};
    const auto sym = [&](double k) { return green_symbol(g, k); };
    for (double r : {0.4, 1.1}) {
        CHECK(rel_err(radial_fourier_inverse(sym, 3, r), green_eval(g, r)) < 1e-7);
    }
    // Near-zero limit is positive and finite for p >= 2 (p=2 profiles have a
    // kink at 0, so compare against the profile at the same radius).
    for (int p : {2, 3, 4}) {
        GreensProfile gp{GreensKind::matern_g_eta_p, 3, 0.0, 1.0, p, Normalization::operator_symbol};
        const double v = radial_fourier_inverse([&](double k) { return green_symbol(gp, k); }, 3, 1e-3);
        CHECK(v > 0.0);
        CHECK(std::isfinite(v));
        CHECK(rel_err(v, green_eval(gp, 1e-3)) < 1e-6);
    }

    CHECK_THROWS_AS(radial_fourier_inverse([](double) { return 1.0; }, 3, 1.0), QuadratureError);
}

TEST_CASE("profile symbols are consistent with total masses") {
    GreensProfile g{GreensKind::matern_g_eta_p, 3, 0.0, 1.0, 3, Normalization::unit_peak};
    CHECK(rel_err(green_total_mass(g), 32.0 * kPi) < 1e-13);
    GreensProfile gm = g;
    gm.norm = Normalization::unit_mass;
    CHECK(green_total_mass(gm) == 1.0);
    GreensProfile gop = g;
    gop.norm = Normalization::operator_symbol;
    CHECK(green_total_mass(gop) == 1.0);
    // Numerical mass check: int G r^{n-1} V_n dr.
    const double mass = 4 * kPi * integrate([&](double r) { return green_eval(g, r) * r * r; }, 0.0, 60.0, 1e-12, 1e-12);
    CHECK(rel_err(mass, 32.0 * kPi) < 1e-9);
}
