#ifndef FRACCOMP_MODEL_HPP
#define FRACCOMP_MODEL_HPP

#include <string>
#include <vector>

#include "fraccomp/rng.hpp"
#include "fraccomp/types.hpp"

namespace fraccomp {

/// Structural specification of a dynamic orthogonal fractional components
/// model: p observed series, q groups of fractional components with sizes
/// group_sizes[0..q-1], s0 short-memory AR(k) components, diagonal
/// measurement noise, optional constants.
struct DofcSpec {
  Index p = 0;
  std::vector<Index> group_sizes;  // s_1..s_q
  Index s0 = 0;
  Index ar_order = 1;  // k
  bool include_constants = true;

  Index q() const { return static_cast<Index>(group_sizes.size()); }
  Index s() const {
    Index total = 0;
    for (Index sj : group_sizes) total += sj;
    return total;
  }
  /// Column offset of group j (0-based) inside the loading matrix.
  Index group_offset(Index j) const {
    Index off = 0;
    for (Index i = 0; i < j; ++i) off += group_sizes[i];
    return off;
  }
};

/// Full parameter vector of the DOFC model. Loadings carry the upper
/// triangle zero restrictions (lambda^{(j)}_{rl} = 0 and gamma_{rl} = 0 for
/// r < l, indices within each column group).
struct DofcParams {
  Vector d;      // q, strictly descending, positive
  Matrix lambda; // p x s, grouped columns
  Matrix gamma;  // p x s0
  Matrix phi;    // s0 x k, row j = AR coefficients of component j
  Vector h;      // p, positive measurement noise variances
  Vector c;      // p, observation constants
};

/// Fractional error correction representation (q = 2, s = p).
struct VecmForm {
  Matrix alpha;  // p x (p - s1)
  Matrix beta;   // p x (p - s1), orthonormal columns
  Matrix m;      // p x p projection, rank s1
  Matrix n;      // p x p projection, rank p - s1
  double d_high = 0.0;
  double d_low = 0.0;
};

/// Block lower unit-triangular representation B y_t = stacked integrated
/// blocks. Rows refer to the permuted variable order in `permutation`:
/// row i of b_matrix corresponds to original series permutation[i].
struct TriangularForm {
  Matrix b_matrix;                 // p x p
  Vector orders;                   // group orders, plus 0 block if p > s
  std::vector<Index> permutation;  // applied variable ordering
  std::vector<Index> block_sizes;  // group sizes, plus p - s if p > s
};

/// Empty when valid, otherwise one entry per violated restriction.
/// Dimension mismatches between spec and params throw invalid_argument.
std::vector<std::string> validate(const DofcSpec& spec,
                                  const DofcParams& params);

/// Number of unconstrained parameters in the packed vector.
Index free_param_count(const DofcSpec& spec);

/// Bijection between valid parameter structures and unconstrained vectors:
/// memory parameters through stacked softplus increments, loadings free
/// cells in column-major group order, AR rows through the partial
/// autocorrelation map, variances through log.
Vector pack(const DofcSpec& spec, const DofcParams& params);
DofcParams unpack(const DofcSpec& spec, const Vector& packed);

/// Orthonormal bases of the nested cointegration subspaces: entry j spans
/// the orthogonal complement of the first j+1 loading groups.
std::vector<Matrix> coint_subspaces(const Matrix& lambda,
                                    const std::vector<Index>& group_sizes);

/// Error correction form; requires q = 2 and s = p.
VecmForm vecm_form(const Matrix& lambda, const std::vector<Index>& group_sizes,
                   const Vector& d);

/// Block triangular form; reorders variables so every leading block of the
/// loading matrix is nonsingular and reports the permutation.
TriangularForm triangular_form(const Matrix& lambda,
                               const std::vector<Index>& group_sizes,
                               const Vector& d = Vector());

/// Exact simulation of the DOFC model with zero pre-sample values.
SeriesPanel simulate_dofc(const DofcSpec& spec, const DofcParams& params,
                          Index n, Rng& rng);

/// JSON field layout mirrors the struct member names; matrices are stored
/// as arrays of rows.
std::string params_to_json(const DofcParams& params);
DofcParams params_from_json(const std::string& text);
std::string spec_to_json(const DofcSpec& spec);
DofcSpec spec_from_json(const std::string& text);

}  // namespace fraccomp

#endif  // FRACCOMP_MODEL_HPP
