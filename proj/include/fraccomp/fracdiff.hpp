#ifndef FRACCOMP_FRACDIFF_HPP
#define FRACCOMP_FRACDIFF_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "fraccomp/rng.hpp"
#include "fraccomp/types.hpp"

namespace fraccomp {

/// Memory parameter of a fractionally integrated process.
struct FracOrder {
  double d = 0.0;
};

/// First coefficients of the expansion (1-L)^d = sum_j pi_j(d) L^j.
template <typename Scalar>
struct PiCoeffsT {
  Scalar d;
  VectorX<Scalar> coeffs;
};
using PiCoeffs = PiCoeffsT<double>;

/// pi_0 = 1, pi_j = ((j-1-d)/j) pi_{j-1}. The recursion is preferred over
/// the Gamma-ratio closed form, which overflows for large j.
template <typename Scalar>
PiCoeffsT<Scalar> pi_coeffs(Scalar d, Index n) {
  if (!std::isfinite(static_cast<double>(d)))
    throw std::invalid_argument("pi_coeffs: d must be finite");
  if (n < 1) throw std::invalid_argument("pi_coeffs: n must be >= 1");
  VectorX<Scalar> c(n);
  c[0] = Scalar(1);
  for (Index j = 1; j < n; ++j)
    c[j] = c[j - 1] * (Scalar(j - 1) - d) / Scalar(j);
  return {d, std::move(c)};
}

namespace detail {

// Truncated (type II) causal convolution y_t = sum_{i=0}^{t} c_i x_{t-i}.
template <typename Scalar>
VectorX<Scalar> convolve_direct(const VectorX<Scalar>& c,
                                const VectorX<Scalar>& x) {
  const Index n = x.size();
  VectorX<Scalar> y = VectorX<Scalar>::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (c[i] != Scalar(0)) y.tail(n - i) += c[i] * x.head(n - i);
  }
  return y;
}

inline Eigen::VectorXd convolve_fft(const Eigen::VectorXd& c,
                                    const Eigen::VectorXd& x) {
  const Index n = x.size();
  Index len = 1;
  while (len < 2 * n) len <<= 1;
  Eigen::FFT<double> fft;
  std::vector<double> a(static_cast<size_t>(len), 0.0);
  std::vector<double> b(static_cast<size_t>(len), 0.0);
  for (Index i = 0; i < n; ++i) {
    a[static_cast<size_t>(i)] = c[i];
    b[static_cast<size_t>(i)] = x[i];
  }
  std::vector<std::complex<double>> fa, fb;
  fft.fwd(fa, a);
  fft.fwd(fb, b);
  for (size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  std::vector<double> out;
  fft.inv(out, fa);
  Eigen::VectorXd y(n);
  for (Index i = 0; i < n; ++i) y[i] = out[static_cast<size_t>(i)];
  return y;
}

constexpr Index kFftThreshold = 4096;

template <typename Scalar>
VectorX<Scalar> apply_filter(Scalar d, const VectorX<Scalar>& x) {
  const Index n = x.size();
  const VectorX<Scalar> c = pi_coeffs<Scalar>(d, n).coeffs;
  if constexpr (std::is_same_v<Scalar, double>) {
    if (n > kFftThreshold) return convolve_fft(c, x);
  }
  return convolve_direct(c, x);
}

}  // namespace detail

/// Truncated fractional difference: y_t = sum_{i=0}^{t-1} pi_i(d) x_{t-i},
/// with zero pre-sample values.
template <typename Scalar>
VectorX<Scalar> frac_diff(const VectorX<Scalar>& x, Scalar d) {
  if (x.size() == 0) throw std::invalid_argument("frac_diff: empty input");
  return detail::apply_filter(d, x);
}

/// Truncated fractional integration, the inverse filter of frac_diff.
template <typename Scalar>
VectorX<Scalar> frac_integrate(const VectorX<Scalar>& x, Scalar d) {
  if (x.size() == 0)
    throw std::invalid_argument("frac_integrate: empty input");
  return detail::apply_filter(-d, x);
}

/// Fractional lag operator L_b = 1 - (1-L)^b, b > 0.
template <typename Scalar>
VectorX<Scalar> frac_lag(const VectorX<Scalar>& x, Scalar b) {
  if (x.size() == 0) throw std::invalid_argument("frac_lag: empty input");
  if (!(b > Scalar(0))) throw std::invalid_argument("frac_lag: b must be > 0");
  return x - frac_diff(x, b);
}

/// Type II fractionally integrated Gaussian noise; deterministic given rng.
inline Vector simulate_fi(double d, Index n, Rng& rng,
                          double innovation_sd = 1.0) {
  if (n < 1) throw std::invalid_argument("simulate_fi: n must be >= 1");
  if (!(innovation_sd > 0))
    throw std::invalid_argument("simulate_fi: innovation_sd must be > 0");
  Vector xi(n);
  for (Index t = 0; t < n; ++t) xi[t] = innovation_sd * rng.normal();
  return frac_integrate<double>(xi, d);
}

}  // namespace fraccomp

#endif  // FRACCOMP_FRACDIFF_HPP
