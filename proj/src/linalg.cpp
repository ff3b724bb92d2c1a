#include "fraccomp/linalg.hpp"

#include <cmath>

namespace fraccomp {

Matrix lyapunov(const Matrix& t, const Matrix& q, int max_doublings,
                double tol) {
  Matrix p = q;
  Matrix a = t;
  for (int i = 0; i < max_doublings; ++i) {
    p = p + a * p * a.transpose();
    a = a * a;
    if (a.cwiseAbs().maxCoeff() < tol) break;
  }
  return 0.5 * (p + p.transpose());
}

Matrix orthogonal_complement(const Matrix& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, rows);
  return q.rightCols(rows - cols);
}

Matrix nearest_pd(const Matrix& a, double rel_floor) {
  const Matrix sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  Vector ev = es.eigenvalues();
  const double max_ev = ev.maxCoeff();
  const double floor_val = rel_floor * std::max(max_ev, 1e-300);
  bool clipped = false;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < floor_val) {
      ev[i] = floor_val;
      clipped = true;
    }
  }
  if (!clipped) return sym;
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

bool is_positive_definite(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  const Matrix sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  const double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
  return es.eigenvalues().minCoeff() > tol * scale;
}

}  // namespace fraccomp
