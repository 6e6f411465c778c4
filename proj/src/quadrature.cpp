#include "vortonlab/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace vortonlab {

namespace {

// QUADPACK QK15 nodes/weights on [-1,1]; odd-indexed nodes form the G7 rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    const double value = resk * h;
    const double error = std::abs((resk - resg) * h);
    return {value, error};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double abs_tol, double rel_tol, int depth) {
    const PanelResult r = gk15(f, a, b);
    if (r.error <= std::max(abs_tol, rel_tol * std::abs(r.value)) || depth <= 0)
        return r.value;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * abs_tol, rel_tol, depth - 1) +
           adapt(f, c, b, 0.5 * abs_tol, rel_tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol, int max_depth) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        return -integrate(f, b, a, abs_tol, rel_tol, max_depth);
    }
    return adapt(f, a, b, abs_tol, rel_tol, max_depth);
}

namespace {

// Wynn's epsilon algorithm: returns the best even-column estimate of the
// limit of the partial-sum sequence s.
double wynn_epsilon(const std::vector<double>& s) {
    const std::size_t n = s.size();
    std::vector<double> prev(n + 1, 0.0); // epsilon_{-1}
    std::vector<double> curr(s);          // epsilon_0
    double best = curr.back();
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> next(n - k);
        bool ok = true;
        for (std::size_t i = 0; i + k < n; ++i) {
            const double diff = curr[i + 1] - curr[i];
            if (diff == 0.0) {
                // Converged exactly at this depth.
                return curr[i + 1];
            }
            next[i] = prev[i + 1] + 1.0 / diff;
            if (!std::isfinite(next[i])) ok = false;
        }
        if (!ok) break;
        prev = std::move(curr);
        curr = std::move(next);
        if (k % 2 == 0 && !curr.empty()) best = curr.back();
    }
    return best;
}

} // namespace

double integrate_oscillatory_tail(const std::function<double(double)>& f,
                                  double a, double panel,
                                  double abs_tol, int max_panels) {
    if (!(panel > 0.0)) throw QuadratureError("oscillatory tail: panel length must be positive");
    std::vector<double> partial;
    double sum = 0.0;
    double prev_best = 0.0;
    for (int m = 0; m < max_panels; ++m) {
        const double lo = a + m * panel;
        const double piece = integrate(f, lo, lo + panel, abs_tol * 1e-2, 1e-13, 30);
        sum += piece;
        partial.push_back(sum);

        const std::size_t w = std::min<std::size_t>(partial.size(), 20);
        const double best = wynn_epsilon({partial.end() - w, partial.end()});
        if (m >= 4) {
            const double step = std::abs(best - prev_best);
            if (step <= std::max(abs_tol, 4e-15 * std::abs(best))) return best;
            // A panel that is already below tolerance and shrinking means the
            // raw sum has converged without acceleration.
            if (std::abs(piece) <= abs_tol * 1e-2 && std::abs(partial[m] - partial[m - 1]) <= abs_tol)
                return best;
        }
        prev_best = best;
    }
    return prev_best;
}

} // namespace vortonlab
