#include "fraccomp/model.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fraccomp/arpoly.hpp"
#include "fraccomp/fracdiff.hpp"
#include "fraccomp/linalg.hpp"

namespace fraccomp {

namespace {

using nlohmann::json;

double softplus(double x) { return x > 30.0 ? x : std::log1p(std::exp(x)); }
double softplus_inv(double y) {
  return y > 30.0 ? y : std::log(std::expm1(y));
}

void check_dims(const DofcSpec& spec, const DofcParams& params) {
  const Index s = spec.s();
  if (params.d.size() != spec.q())
    throw std::invalid_argument("params.d size does not match spec.q");
  if (params.lambda.rows() != spec.p || params.lambda.cols() != s)
    throw std::invalid_argument("params.lambda shape does not match spec");
  if (params.gamma.rows() != spec.p || params.gamma.cols() != spec.s0)
    throw std::invalid_argument("params.gamma shape does not match spec");
  if (params.phi.rows() != spec.s0 ||
      (spec.s0 > 0 && params.phi.cols() != spec.ar_order))
    throw std::invalid_argument("params.phi shape does not match spec");
  if (params.h.size() != spec.p)
    throw std::invalid_argument("params.h size does not match spec.p");
  if (params.c.size() != spec.p)
    throw std::invalid_argument("params.c size does not match spec.p");
}

// Free cells of a p x cols block under the within-group triangular
// restriction: column l has rows l..p-1 free.
Index triangular_free_count(Index p, Index cols) {
  return p * cols - cols * (cols - 1) / 2;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Index cols_hint = 0) {
  const Index rows = static_cast<Index>(j.size());
  if (rows == 0) return Matrix(0, cols_hint);
  const Index cols = static_cast<Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k) m(i, k) = j.at(i).at(k).get<double>();
  return m;
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Vector vector_from_json(const json& j) {
  Vector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v[i] = j.at(i).get<double>();
  return v;
}

}  // namespace

std::vector<std::string> validate(const DofcSpec& spec,
                                  const DofcParams& params) {
  check_dims(spec, params);
  std::vector<std::string> violations;
  std::ostringstream msg;

  const Index q = spec.q();
  for (Index j = 0; j < q; ++j) {
    if (!std::isfinite(params.d[j]) || params.d[j] <= 0.0) {
      msg.str("");
      msg << "memory parameter d[" << j << "] not strictly positive";
      violations.push_back(msg.str());
    }
  }
  for (Index j = 0; j + 1 < q; ++j) {
    if (!(params.d[j] > params.d[j + 1])) {
      violations.push_back("memory parameters not strictly descending");
      break;
    }
  }
  for (Index j = 0; j < q; ++j) {
    const Index off = spec.group_offset(j);
    for (Index l = 0; l < spec.group_sizes[j]; ++l) {
      for (Index r = 0; r < l; ++r) {
        if (params.lambda(r, off + l) != 0.0) {
          msg.str("");
          msg << "upper-triangle loading nonzero: lambda group " << j + 1
              << " cell (" << r + 1 << "," << l + 1 << ")";
          violations.push_back(msg.str());
        }
      }
    }
  }
  for (Index l = 0; l < spec.s0; ++l) {
    for (Index r = 0; r < l; ++r) {
      if (params.gamma(r, l) != 0.0) {
        msg.str("");
        msg << "upper-triangle loading nonzero: gamma cell (" << r + 1 << ","
            << l + 1 << ")";
        violations.push_back(msg.str());
      }
    }
  }
  for (Index j = 0; j < spec.s0; ++j) {
    if (!ar_is_stable(params.phi.row(j).transpose())) {
      msg.str("");
      msg << "autoregressive polynomial of component " << j + 1
          << " not stable";
      violations.push_back(msg.str());
    }
  }
  for (Index i = 0; i < spec.p; ++i) {
    if (!(params.h[i] > 0.0) || !std::isfinite(params.h[i])) {
      msg.str("");
      msg << "noise variance h[" << i << "] not strictly positive";
      violations.push_back(msg.str());
    }
  }
  return violations;
}

Index free_param_count(const DofcSpec& spec) {
  Index count = spec.q();
  for (Index sj : spec.group_sizes)
    count += triangular_free_count(spec.p, sj);
  count += triangular_free_count(spec.p, spec.s0);
  count += spec.s0 * spec.ar_order;
  count += spec.p;  // h
  if (spec.include_constants) count += spec.p;
  return count;
}

Vector pack(const DofcSpec& spec, const DofcParams& params) {
  check_dims(spec, params);
  Vector v(free_param_count(spec));
  Index pos = 0;
  const Index q = spec.q();
  // d_q = softplus(t_q), d_j = d_{j+1} + softplus(t_j)
  for (Index j = 0; j < q; ++j) {
    const double gap =
        (j + 1 < q) ? params.d[j] - params.d[j + 1] : params.d[j];
    v[pos++] = softplus_inv(std::max(gap, 1e-12));
  }
  for (Index j = 0; j < q; ++j) {
    const Index off = spec.group_offset(j);
    for (Index l = 0; l < spec.group_sizes[j]; ++l)
      for (Index r = l; r < spec.p; ++r) v[pos++] = params.lambda(r, off + l);
  }
  for (Index l = 0; l < spec.s0; ++l)
    for (Index r = l; r < spec.p; ++r) v[pos++] = params.gamma(r, l);
  for (Index j = 0; j < spec.s0; ++j) {
    const Vector theta = ar_to_pacf(params.phi.row(j).transpose());
    for (Index i = 0; i < spec.ar_order; ++i) v[pos++] = theta[i];
  }
  for (Index i = 0; i < spec.p; ++i) v[pos++] = std::log(params.h[i]);
  if (spec.include_constants)
    for (Index i = 0; i < spec.p; ++i) v[pos++] = params.c[i];
  return v;
}

DofcParams unpack(const DofcSpec& spec, const Vector& packed) {
  if (packed.size() != free_param_count(spec))
    throw std::invalid_argument("unpack: wrong packed vector length");
  DofcParams params;
  const Index q = spec.q();
  params.d.resize(q);
  params.lambda = Matrix::Zero(spec.p, spec.s());
  params.gamma = Matrix::Zero(spec.p, spec.s0);
  params.phi = Matrix::Zero(spec.s0, spec.s0 > 0 ? spec.ar_order : 0);
  params.h.resize(spec.p);
  params.c = Vector::Zero(spec.p);

  Index pos = 0;
  double acc = 0.0;
  std::vector<double> gaps(static_cast<size_t>(q));
  for (Index j = 0; j < q; ++j) gaps[static_cast<size_t>(j)] = softplus(packed[pos++]);
  for (Index j = q - 1; j >= 0; --j) {
    acc += gaps[static_cast<size_t>(j)];
    params.d[j] = acc;
  }
  for (Index j = 0; j < q; ++j) {
    const Index off = spec.group_offset(j);
    for (Index l = 0; l < spec.group_sizes[j]; ++l)
      for (Index r = l; r < spec.p; ++r)
        params.lambda(r, off + l) = packed[pos++];
  }
  for (Index l = 0; l < spec.s0; ++l)
    for (Index r = l; r < spec.p; ++r) params.gamma(r, l) = packed[pos++];
  for (Index j = 0; j < spec.s0; ++j) {
    Vector theta(spec.ar_order);
    for (Index i = 0; i < spec.ar_order; ++i) theta[i] = packed[pos++];
    params.phi.row(j) = pacf_to_ar(theta).transpose();
  }
  for (Index i = 0; i < spec.p; ++i) params.h[i] = std::exp(packed[pos++]);
  if (spec.include_constants)
    for (Index i = 0; i < spec.p; ++i) params.c[i] = packed[pos++];
  return params;
}

std::vector<Matrix> coint_subspaces(const Matrix& lambda,
                                    const std::vector<Index>& group_sizes) {
  Eigen::ColPivHouseholderQR<Matrix> rank_check(lambda);
  if (rank_check.rank() < lambda.cols())
    throw DegenerateModelError("coint_subspaces: loading matrix rank deficient");
  std::vector<Matrix> bases;
  Index cols = 0;
  for (Index sj : group_sizes) {
    cols += sj;
    if (cols >= lambda.rows()) {
      bases.emplace_back(lambda.rows(), 0);
    } else {
      bases.push_back(orthogonal_complement(lambda.leftCols(cols)));
    }
  }
  return bases;
}

VecmForm vecm_form(const Matrix& lambda, const std::vector<Index>& group_sizes,
                   const Vector& d) {
  const Index p = lambda.rows();
  const Index s = lambda.cols();
  if (group_sizes.size() != 2 || s != p)
    throw UnsupportedRepresentation(
        "vecm_form requires q = 2 groups and s = p");
  if (d.size() != 2)
    throw std::invalid_argument("vecm_form: d must hold the two group orders");
  const Index s1 = group_sizes[0];
  const Matrix lambda1 = lambda.leftCols(s1);
  const Matrix lambda2 = lambda.rightCols(p - s1);
  const Matrix l1_perp = orthogonal_complement(lambda1);  // p x (p-s1)
  const Matrix l2_perp = orthogonal_complement(lambda2);  // p x s1

  const Matrix a = l1_perp.transpose() * lambda2;  // (p-s1) x (p-s1)
  Eigen::FullPivLU<Matrix> lu_a(a);
  if (!lu_a.isInvertible())
    throw DegenerateModelError("vecm_form: lambda1_perp' * lambda2 singular");
  const Matrix b = l2_perp.transpose() * lambda1;  // s1 x s1
  Eigen::FullPivLU<Matrix> lu_b(b);
  if (!lu_b.isInvertible())
    throw DegenerateModelError("vecm_form: lambda2_perp' * lambda1 singular");

  VecmForm form;
  form.n = lambda2 * lu_a.solve(l1_perp.transpose());
  form.m = lambda1 * lu_b.solve(l2_perp.transpose());
  form.d_high = d[0];
  form.d_low = d[1];

  // alpha beta' = -N with beta orthonormal, via thin SVD
  const Index r = p - s1;
  Eigen::JacobiSVD<Matrix> svd(-form.n,
                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  form.alpha = svd.matrixU().leftCols(r) *
               svd.singularValues().head(r).asDiagonal();
  form.beta = svd.matrixV().leftCols(r);
  return form;
}

TriangularForm triangular_form(const Matrix& lambda,
                               const std::vector<Index>& group_sizes,
                               const Vector& d) {
  const Index p = lambda.rows();
  const Index s = lambda.cols();
  const Index q = static_cast<Index>(group_sizes.size());
  if (s > p)
    throw UnsupportedRepresentation("triangular_form requires s <= p");
  if (d.size() != 0 && d.size() != q)
    throw std::invalid_argument("triangular_form: d must have one entry per group");

  // Greedy row selection: partial-pivoted elimination makes every leading
  // minor of the permuted loading matrix nonsingular.
  Matrix work = lambda;
  std::vector<Index> perm;
  std::vector<bool> used(static_cast<size_t>(p), false);
  const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1e-300);
  for (Index col = 0; col < s; ++col) {
    Index pivot = -1;
    double best = 1e-10 * scale;
    for (Index r = 0; r < p; ++r) {
      if (used[static_cast<size_t>(r)]) continue;
      if (std::abs(work(r, col)) > best) {
        best = std::abs(work(r, col));
        pivot = r;
      }
    }
    if (pivot < 0)
      throw DegenerateModelError(
          "triangular_form: no admissible variable ordering found");
    used[static_cast<size_t>(pivot)] = true;
    perm.push_back(pivot);
    for (Index r = 0; r < p; ++r) {
      if (used[static_cast<size_t>(r)]) continue;
      const double factor = work(r, col) / work(pivot, col);
      work.row(r) -= factor * work.row(pivot);
    }
  }
  for (Index r = 0; r < p; ++r)
    if (!used[static_cast<size_t>(r)]) perm.push_back(r);

  Matrix lp(p, s);
  for (Index i = 0; i < p; ++i) lp.row(i) = lambda.row(perm[static_cast<size_t>(i)]);

  TriangularForm form;
  form.permutation = perm;
  form.b_matrix = Matrix::Identity(p, p);
  form.block_sizes.assign(group_sizes.begin(), group_sizes.end());
  if (p > s) form.block_sizes.push_back(p - s);

  Index row_off = group_sizes.empty() ? 0 : group_sizes[0];
  Index col_off = row_off;
  for (Index j = 1; j < static_cast<Index>(form.block_sizes.size()); ++j) {
    const Index bj = form.block_sizes[static_cast<size_t>(j)];
    const Matrix lead = lp.topLeftCorner(col_off, col_off);
    const Matrix below = lp.block(row_off, 0, bj, col_off);
    form.b_matrix.block(row_off, 0, bj, col_off) =
        -below * lead.fullPivLu().inverse();
    row_off += bj;
    if (j < q) col_off += group_sizes[static_cast<size_t>(j)];
  }

  form.orders = Vector::Zero(static_cast<Index>(form.block_sizes.size()));
  if (d.size() == q)
    for (Index j = 0; j < q; ++j) form.orders[j] = d[j];
  return form;
}

SeriesPanel simulate_dofc(const DofcSpec& spec, const DofcParams& params,
                          Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("simulate_dofc: n must be >= 1");
  const auto violations = validate(spec, params);
  if (!violations.empty())
    throw std::invalid_argument("simulate_dofc: invalid parameters: " +
                                violations.front());
  const Index p = spec.p;
  const Index s = spec.s();

  Matrix x(n, s);
  for (Index j = 0; j < spec.q(); ++j) {
    const Index off = spec.group_offset(j);
    for (Index l = 0; l < spec.group_sizes[j]; ++l) {
      x.col(off + l) = simulate_fi(params.d[j], n, rng, 1.0);
    }
  }
  Matrix z(n, spec.s0);
  const Index k = spec.ar_order;
  for (Index j = 0; j < spec.s0; ++j) {
    for (Index t = 0; t < n; ++t) {
      double v = rng.normal();
      for (Index i = 1; i <= std::min<Index>(k, t); ++i)
        v += params.phi(j, i - 1) * z(t - i, j);
      z(t, j) = v;
    }
  }
  SeriesPanel panel;
  panel.values = Matrix(n, p);
  for (Index t = 0; t < n; ++t)
    for (Index i = 0; i < p; ++i)
      panel.values(t, i) = params.c[i] + std::sqrt(params.h[i]) * rng.normal();
  if (s > 0) panel.values += x * params.lambda.transpose();
  if (spec.s0 > 0) panel.values += z * params.gamma.transpose();
  return panel;
}

std::string params_to_json(const DofcParams& params) {
  json j;
  j["d"] = vector_to_json(params.d);
  j["lambda"] = matrix_to_json(params.lambda);
  j["gamma"] = matrix_to_json(params.gamma);
  j["phi"] = matrix_to_json(params.phi);
  j["h"] = vector_to_json(params.h);
  j["c"] = vector_to_json(params.c);
  return j.dump(2);
}

DofcParams params_from_json(const std::string& text) {
  const json j = json::parse(text);
  DofcParams params;
  params.d = vector_from_json(j.at("d"));
  params.lambda = matrix_from_json(j.at("lambda"));
  params.gamma = matrix_from_json(j.at("gamma"));
  params.phi = matrix_from_json(j.at("phi"));
  params.h = vector_from_json(j.at("h"));
  params.c = vector_from_json(j.at("c"));
  return params;
}

std::string spec_to_json(const DofcSpec& spec) {
  json j;
  j["p"] = spec.p;
  j["group_sizes"] = spec.group_sizes;
  j["s0"] = spec.s0;
  j["ar_order"] = spec.ar_order;
  j["include_constants"] = spec.include_constants;
  return j.dump(2);
}

DofcSpec spec_from_json(const std::string& text) {
  const json j = json::parse(text);
  DofcSpec spec;
  spec.p = j.at("p").get<Index>();
  spec.group_sizes = j.at("group_sizes").get<std::vector<Index>>();
  spec.s0 = j.at("s0").get<Index>();
  spec.ar_order = j.at("ar_order").get<Index>();
  spec.include_constants = j.value("include_constants", true);
  return spec;
}

}  // namespace fraccomp
