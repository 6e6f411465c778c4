#include "vortonlab/bessel.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

namespace vortonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxIter = 20000;

// Coefficients of 1/Gamma(1+x) = sum c_k x^k (Abramowitz & Stegun 6.1.34).
constexpr double kInvGamma[] = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.04200263503409523553,
    0.16653861138229148950,
    -0.04219773455554433675,
    -0.00962197152787697356,
    0.00721894324666309954,
    -0.00116516759185906511,
    -0.00021524167411495097,
    0.00012805028238811619,
};

// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gam2 = (... + ...) / 2,
// plus gampl = 1/Gamma(1+mu), gammi = 1/Gamma(1-mu), for |mu| <= 1/2.
void gamma_pair(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    if (std::abs(mu) < 0.15) {
        const double m2 = mu * mu;
        gam1 = -(kInvGamma[1] + m2 * (kInvGamma[3] + m2 * (kInvGamma[5] + m2 * (kInvGamma[7] + m2 * kInvGamma[9]))));
        gam2 = kInvGamma[0] + m2 * (kInvGamma[2] + m2 * (kInvGamma[4] + m2 * (kInvGamma[6] + m2 * kInvGamma[8])));
        gampl = gam2 - mu * gam1;
        gammi = gam2 + mu * gam1;
    } else {
        gampl = 1.0 / std::tgamma(1.0 + mu);
        gammi = 1.0 / std::tgamma(1.0 - mu);
        gam1 = (gammi - gampl) / (2.0 * mu);
        gam2 = 0.5 * (gammi + gampl);
    }
}

// Temme's series: K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, 0 < x < 2.
void temme_k(double mu, double x, double& kmu, double& kmu1) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = (std::abs(pimu) < 1e-30) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::abs(e) < 1e-30) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    gamma_pair(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    for (int i = 1; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * eps) break;
    }
    kmu = sum;
    kmu1 = sum1 * (2.0 / x);
}

// Steed's CF2: K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, x >= 2.
void cf2_k(double mu, double x, double& kmu, double& kmu1) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps) break;
    }
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

// K_{m+1/2}(x) = sqrt(pi/2x) e^{-x} sum_{j=0}^{m} (m+j)!/(j!(m-j)!) (2x)^{-j}.
double half_integer_k(int m, double x, bool* overflow) {
    double term = 1.0, sum = 1.0;
    for (int j = 1; j <= m; ++j) {
        term *= static_cast<double>((m + j) * (m - j + 1)) / (2.0 * j * x);
        sum += term;
    }
    const double pref = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
    const double v = pref * sum;
    if (!std::isfinite(v)) {
        if (overflow) *overflow = true;
        return DBL_MAX;
    }
    return v;
}

} // namespace

double bessel_k(double nu, double x, bool* overflow) {
    if (overflow) *overflow = false;
    if (!(x > 0.0)) throw std::domain_error("bessel_k: requires x > 0");
    nu = std::abs(nu);

    const double two_nu = 2.0 * nu;
    if (std::abs(two_nu - std::round(two_nu)) < 1e-14 &&
        std::abs(nu - std::round(nu)) > 0.25) {
        return half_integer_k(static_cast<int>(std::round(nu - 0.5)), x, overflow);
    }

    const int nl = static_cast<int>(std::floor(nu + 0.5));
    const double mu = nu - nl; // in [-1/2, 1/2]
    double kmu, kmu1;
    if (x < 2.0)
        temme_k(mu, x, kmu, kmu1);
    else
        cf2_k(mu, x, kmu, kmu1);

    double km = kmu, kp = kmu1;
    double order = mu;
    for (int i = 0; i < nl; ++i) {
        const double knext = km + (2.0 * (order + 1.0) / x) * kp;
        km = kp;
        kp = knext;
        order += 1.0;
        if (!std::isfinite(kp)) {
            if (overflow) *overflow = true;
            return DBL_MAX;
        }
    }
    const double v = (nl == 0) ? kmu : km;
    if (!std::isfinite(v)) {
        if (overflow) *overflow = true;
        return DBL_MAX;
    }
    return v;
}

double bessel_k_derivative(double nu, double x) {
    return -0.5 * (bessel_k(std::abs(nu - 1.0), x) + bessel_k(nu + 1.0, x));
}

} // namespace vortonlab
