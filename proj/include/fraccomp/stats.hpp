#ifndef FRACCOMP_STATS_HPP
#define FRACCOMP_STATS_HPP

#include "fraccomp/types.hpp"

namespace fraccomp::stats {

double normal_pdf(double x);
double normal_cdf(double x);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

double chi2_cdf(double x, double df);
double chi2_sf(double x, double df);
/// Upper quantile: smallest x with chi2_cdf(x, df) >= p.
double chi2_quantile(double p, double df);

/// log of the multivariate gamma function Gamma_k(a).
double lmvgamma(int k, double a);

struct TestResult {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  bool degenerate = false;  // input had (near-)zero variance
};

/// Sample autocorrelations r_1..r_L of a univariate series.
Vector autocorrelations(const Vector& x, int max_lag);

/// Ljung-Box portmanteau test at lag L, chi-squared(L) reference.
TestResult ljung_box(const Vector& x, int lags);

/// Multivariate Ljung-Box on an n x k panel with small-sample scaling
/// n^2 sum_l tr(C_l' C_0^-1 C_l C_0^-1)/(n-l); chi-squared(k^2 L) reference.
TestResult multivariate_ljung_box(const Matrix& y, int lags);

/// ARCH-LM: regression of squared series on its own lags, (n-L) R^2 with
/// chi-squared(L) reference.
TestResult arch_lm(const Vector& x, int lags);

/// Jarque-Bera normality test, chi-squared(2) reference.
TestResult jarque_bera(const Vector& x);

}  // namespace fraccomp::stats

#endif  // FRACCOMP_STATS_HPP
