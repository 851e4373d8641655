#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hyperlin/error.hpp"
#include "hyperlin/rational.hpp"

namespace hyperlin {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalDense = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

namespace detail {

inline void require_unique(const std::vector<std::string>& labels, const char* axis) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::DuplicateLabel, std::string("duplicate ") + axis + " label '" + l + "'");
    }
  }
}

}  // namespace detail

/// Dense matrix whose rows and columns carry string labels (vertex or
/// hyperedge names). `values` is a plain Eigen matrix.
template <typename Scalar>
struct LabeledMatrix {
  DenseMatrix<Scalar> values;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  LabeledMatrix() = default;
  LabeledMatrix(DenseMatrix<Scalar> v, std::vector<std::string> rl, std::vector<std::string> cl)
      : values(std::move(v)), row_labels(std::move(rl)), col_labels(std::move(cl)) {
    if (static_cast<std::size_t>(values.rows()) != row_labels.size() ||
        static_cast<std::size_t>(values.cols()) != col_labels.size()) {
      throw Error(ErrorCode::DimensionMismatch, "label count does not match matrix shape");
    }
    detail::require_unique(row_labels, "row");
    detail::require_unique(col_labels, "column");
  }

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
  const Scalar& operator()(Eigen::Index i, Eigen::Index j) const { return values(i, j); }
  Scalar& operator()(Eigen::Index i, Eigen::Index j) { return values(i, j); }

  LabeledMatrix transpose() const {
    LabeledMatrix t;
    t.values = values.transpose();
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
  }

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
    return a.row_labels == b.row_labels && a.col_labels == b.col_labels &&
           a.values.rows() == b.values.rows() && a.values.cols() == b.values.cols() &&
           a.values == b.values;
  }
};

/// Vector indexed by an ordered list of labels.
template <typename Scalar>
struct LabeledVector {
  DenseVector<Scalar> values;
  std::vector<std::string> labels;

  Eigen::Index size() const { return values.size(); }
  const Scalar& operator[](Eigen::Index i) const { return values(i); }
  Scalar& operator[](Eigen::Index i) { return values(i); }
};

using RationalMatrix = LabeledMatrix<Rational>;
using RationalLabeledVector = LabeledVector<Rational>;

/// Exact zero test; Eigen's isZero() is tolerance based.
template <typename Derived>
bool is_exactly_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != Scalar(0)) return false;
    }
  }
  return true;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

template <typename Derived>
DenseMatrix<double> to_double(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<double> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  }
  return out;
}

}  // namespace hyperlin
