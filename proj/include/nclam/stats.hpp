#ifndef NCLAM_STATS_HPP
#define NCLAM_STATS_HPP

#include <cstdint>
#include <span>

namespace nclam {

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// CDF of the chi-square distribution with df degrees of freedom.
double chi_square_cdf(double x, int df);

/// Quantile (inverse CDF); bisection on the CDF, good to ~1e-9.
double chi_square_quantile(double p, int df);

/// Pearson statistic of observed counts against the uniform expectation.
double chi_square_uniform_stat(std::span<const std::int64_t> counts);

}  // namespace nclam

#endif
