#ifndef FRACCOMP_TYPES_HPP
#define FRACCOMP_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace fraccomp {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Multivariate time series: n observations (rows) of p series (columns).
/// Missing entries are NaN.
struct SeriesPanel {
  Matrix values;                    // n x p
  std::vector<std::string> time;    // length n, may be empty
  std::vector<std::string> labels;  // length p, may be empty

  SeriesPanel() = default;
  explicit SeriesPanel(Matrix v) : values(std::move(v)) {}

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }
};

// Structural failures: the model implied by the inputs is not estimable.
struct DegenerateModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested representation does not exist for the given specification.
struct UnsupportedRepresentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical breakdown inside an otherwise valid computation.
struct NumericalFailure : std::runtime_error {
  NumericalFailure(const std::string& what, Index time_index = -1)
      : std::runtime_error(what), time_index(time_index) {}
  Index time_index;
};

// Malformed input data (parse errors, dimension mismatches, bad values).
struct DataError : std::runtime_error {
  DataError(const std::string& what, Index row = -1)
      : std::runtime_error(what), row(row) {}
  Index row;
};

}  // namespace fraccomp

#endif  // FRACCOMP_TYPES_HPP
