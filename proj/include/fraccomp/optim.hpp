#ifndef FRACCOMP_OPTIM_HPP
#define FRACCOMP_OPTIM_HPP

#include <functional>

#include "fraccomp/types.hpp"

namespace fraccomp::optim {

using Objective = std::function<double(const Vector&)>;

struct Result {
  Vector x;
  double fval = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

struct NelderMeadOptions {
  int max_iter = 2000;
  double f_tol = 1e-10;
  double x_tol = 1e-9;
  double initial_step = 0.1;
};

Result nelder_mead(const Objective& f, const Vector& x0,
                   const NelderMeadOptions& opts = {});

struct BfgsOptions {
  int max_iter = 300;
  double grad_tol = 1e-5;     // infinity norm of the gradient
  double f_rel_tol = 1e-12;   // relative decrease stopping rule
  double fd_step = 1e-6;      // central-difference step scale
};

/// BFGS with central-difference gradients and Armijo backtracking.
Result bfgs(const Objective& f, const Vector& x0, const BfgsOptions& opts = {});

/// Central-difference gradient with step h*(1+|x_i|).
Vector numerical_gradient(const Objective& f, const Vector& x, double h);

/// Central-difference Hessian with step h*(1+|x_i|).
Matrix numerical_hessian(const Objective& f, const Vector& x, double h);

/// Brent minimization of a scalar function on [a, b].
struct ScalarResult {
  double x = 0.0;
  double fval = 0.0;
  bool boundary = false;  // minimum found at an interval endpoint
};
ScalarResult brent_min(const std::function<double(double)>& f, double a,
                       double b, double tol = 1e-8, int max_iter = 200);

/// Coarse grid scan followed by Brent refinement in the best bracket.
ScalarResult grid_then_brent(const std::function<double(double)>& f, double a,
                             double b, int grid_points, double tol = 1e-8);

}  // namespace fraccomp::optim

#endif  // FRACCOMP_OPTIM_HPP
