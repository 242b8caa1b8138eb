#pragma once

// Exact integer linear algebra on small dense Eigen matrices. Eigen's own
// decompositions are floating point; everything here is fraction-free.

#include <Eigen/Core>

#include <numeric>
#include <stdexcept>
#include <utility>

namespace graphfano {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

class ExactSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// In-place Bareiss elimination over the first `cols` columns. Returns the
/// rank and the sign of the row permutation applied. Entries below each
/// pivot are zeroed; the last pivot equals the leading principal minor.
template <typename Scalar>
std::pair<Eigen::Index, int> bareiss_eliminate(Matrix<Scalar>& m, Eigen::Index cols) {
  Scalar previous{1};
  int sign = 1;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar{0}) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      m.row(pivot).swap(m.row(row));
      sign = -sign;
    }
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      for (Eigen::Index j = col + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(row, col) - m(i, col) * m(row, j)) / previous;
      }
      m(i, col) = Scalar{0};
    }
    previous = m(row, col);
    ++row;
  }
  return {row, sign};
}

}  // namespace detail

/// Exact determinant of a square integer matrix (Bareiss).
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return Scalar{1};
  Matrix<Scalar> m = a;
  auto [rank, sign] = detail::bareiss_eliminate(m, m.cols());
  if (rank < m.rows()) return Scalar{0};
  return sign > 0 ? m(m.rows() - 1, m.cols() - 1) : -m(m.rows() - 1, m.cols() - 1);
}

/// Integer solution x of a x = b for a of full column rank (rows >= cols).
/// Throws ExactSolveError if a is rank deficient, the system is
/// inconsistent, or the unique solution is not integral.
template <typename DerivedA, typename DerivedB>
Vector<typename DerivedA::Scalar> solve_integral(const Eigen::MatrixBase<DerivedA>& a,
                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (b.rows() != rows || b.cols() != 1) throw std::invalid_argument("right-hand side shape");
  if (cols > rows) throw ExactSolveError("underdetermined system");

  Matrix<Scalar> aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  auto [rank, sign] = detail::bareiss_eliminate(aug, cols);
  (void)sign;
  if (rank < cols) throw ExactSolveError("coefficient matrix is rank deficient");
  for (Eigen::Index i = cols; i < rows; ++i) {
    if (aug(i, cols) != Scalar{0}) throw ExactSolveError("inconsistent system");
  }
  // Full column rank with pivots on the diagonal: plain back substitution,
  // each division exact iff the solution is integral.
  Vector<Scalar> x(cols);
  for (Eigen::Index k = cols - 1; k >= 0; --k) {
    Scalar rhs = aug(k, cols);
    for (Eigen::Index j = k + 1; j < cols; ++j) rhs -= aug(k, j) * x(j);
    if (rhs % aug(k, k) != Scalar{0}) throw ExactSolveError("solution is not integral");
    x(k) = rhs / aug(k, k);
  }
  return x;
}

/// Coordinates of x in the basis given by the columns of a square matrix,
/// as numerators over the common denominator det(basis) (Cramer's rule).
/// Returns {numerators, det}; det == 0 means the columns are dependent.
template <typename Derived, typename DerivedX>
std::pair<Vector<typename Derived::Scalar>, typename Derived::Scalar> cramer_coordinates(
    const Eigen::MatrixBase<Derived>& basis, const Eigen::MatrixBase<DerivedX>& x) {
  using Scalar = typename Derived::Scalar;
  const Scalar det = exact_determinant(basis);
  Vector<Scalar> numerators(basis.cols());
  Matrix<Scalar> replaced = basis;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    replaced.col(i) = x;
    numerators(i) = exact_determinant(replaced);
    replaced.col(i) = basis.col(i);
  }
  return {numerators, det};
}

/// gcd of the entries; 0 for the zero vector.
template <typename Derived>
typename Derived::Scalar content(const Eigen::MatrixBase<Derived>& v) {
  typename Derived::Scalar g{0};
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  return g;
}

}  // namespace graphfano
