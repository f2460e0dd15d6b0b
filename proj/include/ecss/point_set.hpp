#ifndef ECSS_POINT_SET_HPP
#define ECSS_POINT_SET_HPP

#include <Eigen/Dense>

#include "ecss/errors.hpp"

namespace ecss {

template <typename Scalar>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// N points in [0,1)^s, one per row.
template <typename Scalar>
class BasicPointSet {
 public:
  using Matrix = RowMatrix<Scalar>;

  explicit BasicPointSet(Matrix rows) : rows_(std::move(rows)) {
    if (rows_.rows() < 1 || rows_.cols() < 1) throw ValidationError("point set needs N >= 1 and s >= 1");
    if ((rows_.array() < Scalar(0)).any() || (rows_.array() >= Scalar(1)).any() || rows_.hasNaN())
      throw ValidationError("point coordinates must lie in [0,1)");
  }

  /// One-dimensional set from a column of coordinates.
  template <typename Derived>
  static BasicPointSet from_column(const Eigen::DenseBase<Derived>& coords) {
    Matrix rows(coords.size(), 1);
    rows.col(0) = coords.derived();
    return BasicPointSet(std::move(rows));
  }

  Eigen::Index size() const { return rows_.rows(); }
  Eigen::Index dim() const { return rows_.cols(); }
  const Matrix& rows() const { return rows_; }
  Scalar operator()(Eigen::Index n, Eigen::Index k) const { return rows_(n, k); }

 private:
  Matrix rows_;
};

using PointSet = BasicPointSet<double>;

}  // namespace ecss

#endif  // ECSS_POINT_SET_HPP
