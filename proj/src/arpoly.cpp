#include "fraccomp/arpoly.hpp"

#include <cmath>

namespace fraccomp {

namespace {
// Companion-matrix spectral radius of z^k - c_1 z^{k-1} - ... - c_k.
double companion_radius(const Vector& c) {
  const Index k = c.size();
  if (k == 0) return 0.0;
  if (k == 1) return std::abs(c[0]);
  Matrix comp = Matrix::Zero(k, k);
  comp.row(0) = c.transpose();
  comp.block(1, 0, k - 1, k - 1).setIdentity();
  return comp.eigenvalues().cwiseAbs().maxCoeff();
}
}  // namespace

bool ar_is_stable(const Vector& coeffs, double margin) {
  return companion_radius(coeffs) < 1.0 - margin;
}

bool ma_is_invertible(const Vector& coeffs, double margin) {
  return companion_radius(-coeffs) < 1.0 - margin;
}

Vector pacf_to_ar(const Vector& theta) {
  const Index k = theta.size();
  Vector r(k);
  for (Index i = 0; i < k; ++i) r[i] = std::tanh(theta[i]);
  Vector a = r;
  Vector prev(k);
  for (Index j = 1; j < k; ++j) {
    prev.head(j) = a.head(j);
    for (Index i = 0; i < j; ++i)
      a[i] = prev[i] - r[j] * prev[j - 1 - i];
    a[j] = r[j];
  }
  return a;
}

Vector ar_to_pacf(const Vector& ar) {
  const Index k = ar.size();
  Vector a = ar;
  Vector r(k);
  Vector next(k);
  for (Index j = k - 1; j >= 1; --j) {
    const double rj = a[j];
    r[j] = rj;
    const double denom = 1.0 - rj * rj;
    for (Index i = 0; i < j; ++i)
      next[i] = (a[i] + rj * a[j - 1 - i]) / denom;
    a.head(j) = next.head(j);
  }
  r[0] = a[0];
  Vector theta(k);
  for (Index i = 0; i < k; ++i) {
    const double clipped = std::min(std::max(r[i], -1.0 + 1e-12), 1.0 - 1e-12);
    theta[i] = std::atanh(clipped);
  }
  return theta;
}

Vector arma_impulse_responses(const Vector& ar, const Vector& ma, Index n) {
  const Index p = ar.size();
  const Index q = ma.size();
  Vector psi = Vector::Zero(n);
  if (n == 0) return psi;
  psi[0] = 1.0;
  for (Index i = 1; i < n; ++i) {
    double v = (i <= q) ? ma[i - 1] : 0.0;
    const Index lim = std::min(i, p);
    for (Index j = 1; j <= lim; ++j) v += ar[j - 1] * psi[i - j];
    psi[i] = v;
  }
  return psi;
}

}  // namespace fraccomp
