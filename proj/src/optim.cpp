#include "fraccomp/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace fraccomp::optim {

Result nelder_mead(const Objective& f, const Vector& x0,
                   const NelderMeadOptions& opts) {
  const Index n = x0.size();
  Result res;
  std::vector<Vector> simplex(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (Index i = 0; i < n; ++i) {
    double step = opts.initial_step * (1.0 + std::abs(x0[i]));
    simplex[i + 1][i] += step;
  }
  for (Index i = 0; i <= n; ++i) fv[i] = f(simplex[i]);
  res.evaluations = static_cast<int>(n) + 1;

  std::vector<Index> order(n + 1);
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    std::iota(order.begin(), order.end(), Index(0));
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return fv[a] < fv[b]; });
    const Index best = order[0], worst = order[n], second = order[n - 1];
    res.iterations = iter;
    const double spread = std::abs(fv[worst] - fv[best]);
    double xspread = 0.0;
    for (Index i = 1; i <= n; ++i)
      xspread = std::max(
          xspread, (simplex[order[i]] - simplex[best]).cwiseAbs().maxCoeff());
    if (spread < opts.f_tol * (1.0 + std::abs(fv[best])) &&
        xspread < opts.x_tol) {
      res.converged = true;
      break;
    }

    Vector centroid = Vector::Zero(n);
    for (Index i = 0; i <= n; ++i)
      if (i != worst) centroid += simplex[i];
    centroid /= static_cast<double>(n);

    const Vector xr = centroid + (centroid - simplex[worst]);
    const double fr = f(xr);
    ++res.evaluations;
    if (fr < fv[order[0]]) {
      const Vector xe = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = f(xe);
      ++res.evaluations;
      if (fe < fr) {
        simplex[worst] = xe;
        fv[worst] = fe;
      } else {
        simplex[worst] = xr;
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      simplex[worst] = xr;
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      const Vector xc = outside
                            ? centroid + 0.5 * (centroid - simplex[worst])
                            : centroid - 0.5 * (centroid - simplex[worst]);
      const double fc = f(xc);
      ++res.evaluations;
      if (fc < std::min(fr, fv[worst])) {
        simplex[worst] = xc;
        fv[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (Index i = 0; i <= n; ++i) {
          if (i == best) continue;
          simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
          fv[i] = f(simplex[i]);
          ++res.evaluations;
        }
      }
    }
  }
  const Index best = static_cast<Index>(
      std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.x = simplex[best];
  res.fval = fv[best];
  return res;
}

Vector numerical_gradient(const Objective& f, const Vector& x, double h) {
  const Index n = x.size();
  Vector g(n);
  Vector xp = x;
  for (Index i = 0; i < n; ++i) {
    const double step = h * (1.0 + std::abs(x[i]));
    xp[i] = x[i] + step;
    const double fp = f(xp);
    xp[i] = x[i] - step;
    const double fm = f(xp);
    xp[i] = x[i];
    g[i] = (fp - fm) / (2.0 * step);
  }
  return g;
}

Matrix numerical_hessian(const Objective& f, const Vector& x, double h) {
  const Index n = x.size();
  Matrix hess(n, n);
  const double f0 = f(x);
  Vector steps(n);
  for (Index i = 0; i < n; ++i) steps[i] = h * (1.0 + std::abs(x[i]));
  Vector xp = x;
  // diagonal: (f(x+h) - 2 f(x) + f(x-h)) / h^2
  for (Index i = 0; i < n; ++i) {
    xp[i] = x[i] + steps[i];
    const double fp = f(xp);
    xp[i] = x[i] - steps[i];
    const double fm = f(xp);
    xp[i] = x[i];
    hess(i, i) = (fp - 2.0 * f0 + fm) / (steps[i] * steps[i]);
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      xp[i] = x[i] + steps[i];
      xp[j] = x[j] + steps[j];
      const double fpp = f(xp);
      xp[j] = x[j] - steps[j];
      const double fpm = f(xp);
      xp[i] = x[i] - steps[i];
      const double fmm = f(xp);
      xp[j] = x[j] + steps[j];
      const double fmp = f(xp);
      xp[i] = x[i];
      xp[j] = x[j];
      hess(i, j) = hess(j, i) =
          (fpp - fpm - fmp + fmm) / (4.0 * steps[i] * steps[j]);
    }
  }
  return hess;
}

Result bfgs(const Objective& f, const Vector& x0, const BfgsOptions& opts) {
  const Index n = x0.size();
  Result res;
  Vector x = x0;
  double fx = f(x);
  res.evaluations = 1;
  Vector g = numerical_gradient(f, x, opts.fd_step);
  res.evaluations += 2 * static_cast<int>(n);
  Matrix hinv = Matrix::Identity(n, n);

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    res.iterations = iter;
    if (g.cwiseAbs().maxCoeff() < opts.grad_tol) {
      res.converged = true;
      break;
    }
    Vector dir = -hinv * g;
    double slope = g.dot(dir);
    if (slope >= 0.0) {  // reset on loss of descent direction
      hinv.setIdentity();
      dir = -g;
      slope = g.dot(dir);
    }
    // Armijo backtracking
    double alpha = 1.0;
    double fnew = fx;
    Vector xnew = x;
    bool accepted = false;
    for (int ls = 0; ls < 40; ++ls) {
      xnew = x + alpha * dir;
      fnew = f(xnew);
      ++res.evaluations;
      if (std::isfinite(fnew) && fnew <= fx + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;

    Vector gnew = numerical_gradient(f, xnew, opts.fd_step);
    res.evaluations += 2 * static_cast<int>(n);
    const Vector s = xnew - x;
    const Vector y = gnew - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Matrix eye = Matrix::Identity(n, n);
      hinv = (eye - rho * s * y.transpose()) * hinv *
                 (eye - rho * y * s.transpose()) +
             rho * s * s.transpose();
    }
    const double decrease = fx - fnew;
    x = xnew;
    g = gnew;
    const bool small_step =
        decrease < opts.f_rel_tol * (1.0 + std::abs(fnew));
    fx = fnew;
    if (small_step && g.cwiseAbs().maxCoeff() < 10.0 * opts.grad_tol) {
      res.converged = true;
      break;
    }
  }
  res.x = x;
  res.fval = fx;
  return res;
}

ScalarResult brent_min(const std::function<double(double)>& f, double a,
                       double b, double tol, int max_iter) {
  const double golden = 0.3819660112501051;
  double x = a + golden * (b - a);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol1 = tol * (1.0 + std::abs(x));
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
    bool use_golden = true;
    if (std::abs(e) > tol1) {
      // parabolic interpolation through (x, w, v)
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      if (std::abs(p) < std::abs(0.5 * q * e) && p > q * (a - x) &&
          p < q * (b - x)) {
        e = d;
        d = p / q;
        use_golden = false;
      }
    }
    if (use_golden) {
      e = (x < m) ? b - x : a - x;
      d = golden * e;
    }
    const double u =
        (std::abs(d) >= tol1) ? x + d : x + (d > 0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x)
        b = x;
      else
        a = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return {x, fx, false};
}

ScalarResult grid_then_brent(const std::function<double(double)>& f, double a,
                             double b, int grid_points, double tol) {
  grid_points = std::max(grid_points, 3);
  double best_x = a, best_f = std::numeric_limits<double>::infinity();
  int best_i = 0;
  std::vector<double> xs(grid_points), fs(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    xs[i] = a + (b - a) * i / (grid_points - 1.0);
    fs[i] = f(xs[i]);
    if (fs[i] < best_f) {
      best_f = fs[i];
      best_x = xs[i];
      best_i = i;
    }
  }
  const double lo = xs[std::max(best_i - 1, 0)];
  const double hi = xs[std::min(best_i + 1, grid_points - 1)];
  ScalarResult res = brent_min(f, lo, hi, tol);
  if (res.fval > best_f) {
    res.x = best_x;
    res.fval = best_f;
  }
  res.boundary = (best_i == 0 || best_i == grid_points - 1) &&
                 (std::abs(res.x - a) < 1e-6 * (b - a) ||
                  std::abs(res.x - b) < 1e-6 * (b - a));
  return res;
}

}  // namespace fraccomp::optim
