#include "fraccomp/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fraccomp::stats {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

// Lower incomplete gamma by power series, x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma by Lentz continued fraction, x >= a + 1.
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}
}  // namespace

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double gamma_p(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p: bad args");
  if (x == 0.0) return 0.0;
  return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad args");
  if (x == 0.0) return 1.0;
  return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi2_cdf(double x, double df) {
  if (x <= 0.0) return 0.0;
  return gamma_p(df / 2.0, x / 2.0);
}

double chi2_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  return gamma_q(df / 2.0, x / 2.0);
}

double chi2_quantile(double p, double df) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  double lo = 0.0, hi = df + 10.0;
  while (chi2_cdf(hi, df) < p) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (chi2_cdf(mid, df) < p)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-10 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

double lmvgamma(int k, double a) {
  double s = 0.25 * k * (k - 1) * std::log(M_PI);
  for (int j = 1; j <= k; ++j) s += std::lgamma(a + 0.5 * (1 - j));
  return s;
}

Vector autocorrelations(const Vector& x, int max_lag) {
  const Index n = x.size();
  const double mean = x.mean();
  const Vector xc = x.array() - mean;
  const double c0 = xc.squaredNorm() / static_cast<double>(n);
  Vector r = Vector::Zero(max_lag);
  if (c0 <= 0.0) return r;
  for (int l = 1; l <= max_lag; ++l) {
    const double cl =
        xc.head(n - l).dot(xc.tail(n - l)) / static_cast<double>(n);
    r[l - 1] = cl / c0;
  }
  return r;
}

TestResult ljung_box(const Vector& x, int lags) {
  const Index n = x.size();
  TestResult res;
  res.df = lags;
  const double var = (x.array() - x.mean()).square().sum();
  if (var <= 1e-14 * static_cast<double>(n) || n <= lags + 1) {
    res.degenerate = true;
    return res;
  }
  const Vector r = autocorrelations(x, lags);
  double q = 0.0;
  for (int l = 1; l <= lags; ++l)
    q += r[l - 1] * r[l - 1] / static_cast<double>(n - l);
  q *= static_cast<double>(n) * (n + 2.0);
  res.statistic = q;
  res.p_value = chi2_sf(q, res.df);
  return res;
}

TestResult multivariate_ljung_box(const Matrix& y, int lags) {
  const Index n = y.rows();
  const Index k = y.cols();
  TestResult res;
  res.df = static_cast<double>(k) * static_cast<double>(k) * lags;
  if (n <= lags + k) {
    res.degenerate = true;
    return res;
  }
  const Matrix yc = y.rowwise() - y.colwise().mean();
  const Matrix c0 = yc.transpose() * yc / static_cast<double>(n);
  Eigen::LDLT<Matrix> ldlt(c0);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    res.degenerate = true;
    return res;
  }
  double q = 0.0;
  for (int l = 1; l <= lags; ++l) {
    const Matrix cl = yc.bottomRows(n - l).transpose() * yc.topRows(n - l) /
                      static_cast<double>(n);
    const Matrix a = ldlt.solve(cl.transpose());
    const Matrix b = ldlt.solve(cl);
    q += (a.transpose() * b.transpose()).trace() / static_cast<double>(n - l);
  }
  q *= static_cast<double>(n) * static_cast<double>(n);
  res.statistic = q;
  res.p_value = chi2_sf(q, res.df);
  return res;
}

TestResult arch_lm(const Vector& x, int lags) {
  const Index n = x.size();
  TestResult res;
  res.df = lags;
  if (n <= 2 * lags + 2) {
    res.degenerate = true;
    return res;
  }
  const Vector x2 = x.array().square();
  if ((x2.array() - x2.mean()).abs().maxCoeff() < 1e-12) {
    res.degenerate = true;
    return res;
  }
  const Index m = n - lags;
  Matrix design(m, lags + 1);
  design.col(0).setOnes();
  for (int l = 1; l <= lags; ++l)
    design.col(l) = x2.segment(lags - l, m);
  const Vector target = x2.tail(m);
  const Vector beta =
      design.colPivHouseholderQr().solve(target);
  const Vector resid = target - design * beta;
  const double tss = (target.array() - target.mean()).square().sum();
  if (tss <= 0.0) {
    res.degenerate = true;
    return res;
  }
  const double r2 = 1.0 - resid.squaredNorm() / tss;
  res.statistic = static_cast<double>(m) * r2;
  res.p_value = chi2_sf(res.statistic, res.df);
  return res;
}

TestResult jarque_bera(const Vector& x) {
  const Index n = x.size();
  TestResult res;
  res.df = 2.0;
  const double mean = x.mean();
  const Vector xc = x.array() - mean;
  const double m2 = xc.array().square().mean();
  if (m2 <= 1e-14) {
    res.degenerate = true;
    return res;
  }
  const double m3 = xc.array().cube().mean();
  const double m4 = xc.array().pow(4).mean();
  const double skew = m3 / std::pow(m2, 1.5);
  const double kurt = m4 / (m2 * m2);
  res.statistic = static_cast<double>(n) / 6.0 *
                  (skew * skew + 0.25 * (kurt - 3.0) * (kurt - 3.0));
  res.p_value = chi2_sf(res.statistic, 2.0);
  return res;
}

}  // namespace fraccomp::stats
