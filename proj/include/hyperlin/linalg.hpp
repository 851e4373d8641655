#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
// Pivoting picks the first nonzero entry, which is only meaningful for exact
// arithmetic; none of these routines are meant for floating point.

#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "hyperlin/error.hpp"
#include "hyperlin/matrix.hpp"

namespace hyperlin {

template <typename Scalar>
struct RrefResult {
  DenseMatrix<Scalar> reduced;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivot_cols;
};

/// Gauss-Jordan reduction to reduced row echelon form.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out;
  out.reduced = m;
  auto& r = out.reduced;
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index c = 0; c < cols && pivot_row < rows; ++c) {
    Eigen::Index p = pivot_row;
    while (p < rows && r(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != pivot_row) r.row(p).swap(r.row(pivot_row));
    const Scalar inv = Scalar(1) / r(pivot_row, c);
    for (Eigen::Index j = c; j < cols; ++j) r(pivot_row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == pivot_row || r(i, c) == Scalar(0)) continue;
      const Scalar f = r(i, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        if (r(pivot_row, j) != Scalar(0)) r(i, j) -= f * r(pivot_row, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

/// Basis of {x : m x = 0} in free-variable form: one vector per non-pivot
/// column f, with x_f = 1, the other free variables 0, and pivot variables
/// read off the reduced matrix. Ordered by increasing free column.
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> nullspace_vectors(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : red.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<DenseVector<Scalar>> basis;
  for (Eigen::Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    DenseVector<Scalar> x = DenseVector<Scalar>::Constant(m.cols(), Scalar(0));
    x(f) = Scalar(1);
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
      x(red.pivot_cols[i]) = -red.reduced(static_cast<Eigen::Index>(i), f);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Fraction-free Bareiss elimination. Every intermediate division is exact,
/// so the routine also works over integer-valued scalars.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, "determinant of a " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  }
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  DenseMatrix<Scalar> a = m;
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      a.row(p).swap(a.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Exact solution of m x = b for square nonsingular m.
template <typename DerivedM, typename DerivedB>
DenseVector<typename DerivedM::Scalar> solve(const Eigen::MatrixBase<DerivedM>& m,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "solve needs a square system");
  if (b.rows() != m.rows() || b.cols() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length does not match system");
  }
  const Eigen::Index n = m.rows();
  DenseMatrix<Scalar> aug(n, n + 1);
  aug.leftCols(n) = m;
  aug.col(n) = b;
  const auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivot_cols.back() >= n)) {
    throw Error(ErrorCode::Singular, "system matrix is singular");
  }
  return red.reduced.col(n);
}

/// Null space of a labeled matrix, indexed by its column labels.
struct NullspaceBasis {
  std::vector<RationalVector> vectors;
  std::vector<std::string> ambient_labels;

  std::size_t dimension() const { return vectors.size(); }
};

NullspaceBasis nullspace(const RationalMatrix& m);

/// Scales a nonzero vector to the primitive integer vector with a positive
/// first nonzero entry. The zero vector is returned unchanged.
RationalVector normalize_primitive(const RationalVector& v);

nlohmann::ordered_json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json vector_to_json(const RationalVector& v);

}  // namespace hyperlin
