#pragma once

#include <Eigen/Core>

namespace pamet {

using Scalar = double;
using Index = Eigen::Index;

template <typename T>
using VectorT = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using MatrixT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using VectorX = VectorT<Scalar>;
using MatrixX = MatrixT<Scalar>;
using VectorXi = VectorT<int>;

/// Coefficient-wise exact equality, shape included.
template <typename DerivedA, typename DerivedB>
bool exact_equal(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.derived().array() == b.derived().array()).all();
}

}  // namespace pamet
