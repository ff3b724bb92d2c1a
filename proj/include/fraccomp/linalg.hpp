#ifndef FRACCOMP_LINALG_HPP
#define FRACCOMP_LINALG_HPP

#include "fraccomp/types.hpp"

namespace fraccomp {

/// Solve the discrete Lyapunov equation P = T P T' + Q by doubling;
/// T must have spectral radius < 1.
Matrix lyapunov(const Matrix& t, const Matrix& q, int max_doublings = 60,
                double tol = 1e-14);

/// Orthonormal basis of the orthogonal complement of the column space of a
/// (rows x cols, rows > cols, full column rank). Result is rows x (rows-cols).
Matrix orthogonal_complement(const Matrix& a);

/// Project a symmetric matrix to the nearest positive definite one by
/// clipping eigenvalues at rel_floor times the largest.
Matrix nearest_pd(const Matrix& a, double rel_floor = 1e-10);

/// True if the symmetrized matrix has all eigenvalues > tol * max(1, |a|).
bool is_positive_definite(const Matrix& a, double tol = 1e-12);

}  // namespace fraccomp

#endif  // FRACCOMP_LINALG_HPP
