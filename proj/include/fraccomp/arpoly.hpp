#ifndef FRACCOMP_ARPOLY_HPP
#define FRACCOMP_ARPOLY_HPP

#include "fraccomp/types.hpp"

namespace fraccomp {

/// True if 1 - a_1 z - ... - a_k z^k has all roots outside the unit circle.
bool ar_is_stable(const Vector& coeffs, double margin = 0.0);

/// True if 1 + b_1 z + ... + b_k z^k has all roots outside the unit circle.
bool ma_is_invertible(const Vector& coeffs, double margin = 0.0);

/// Monahan map from unconstrained reals to a stable AR polynomial via
/// partial autocorrelations r_i = tanh(theta_i).
Vector pacf_to_ar(const Vector& theta);

/// Inverse of pacf_to_ar; requires a stable polynomial.
Vector ar_to_pacf(const Vector& ar);

/// Impulse responses psi_0..psi_{n-1} of the ARMA filter
/// (1 + b_1 L + ... ) / (1 - a_1 L - ...).
Vector arma_impulse_responses(const Vector& ar, const Vector& ma, Index n);

}  // namespace fraccomp

#endif  // FRACCOMP_ARPOLY_HPP
