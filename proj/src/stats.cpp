#include "nclam/stats.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nclam {

namespace {

// Series expansion, converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for the upper tail Q(a, x), x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("regularized_gamma_p domain");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double chi_square_cdf(double x, int df) {
    if (df < 1) throw std::invalid_argument("chi-square df must be >= 1");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(df / 2.0, x / 2.0);
}

double chi_square_quantile(double p, int df) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("quantile level must be in (0,1)");
    double lo = 0.0;
    double hi = df + 200.0 * std::sqrt(static_cast<double>(df)) + 200.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (chi_square_cdf(mid, df) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double chi_square_uniform_stat(std::span<const std::int64_t> counts) {
    if (counts.empty()) throw std::invalid_argument("no count cells");
    std::int64_t total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
    double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (std::int64_t c : counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

}  // namespace nclam
