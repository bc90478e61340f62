#pragma once

// Exact sparse/dense matrices over Q and the rank machinery every cohomology
// computation in the library is built on.

#include "hochkit/scalar.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hochkit {

using Index = Eigen::Index;
using Matrix = Eigen::SparseMatrix<Rational>;
using DenseMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using DenseVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Triplet = Eigen::Triplet<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a composite of consecutive differentials is nonzero.
class NotAComplex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds a compressed matrix from triplets; duplicates are summed and
/// resulting zeros are dropped, so no stored entry is ever zero.
Matrix make_matrix(Index rows, Index cols, const std::vector<Triplet>& entries);

/// Removes explicitly stored zeros in place.
void prune_zeros(Matrix& m);

Matrix identity_matrix(Index n);

bool is_zero(const Matrix& m);
bool equal(const Matrix& a, const Matrix& b);

std::vector<Triplet> triplets_of(const Matrix& m);

DenseMatrix to_dense(const Matrix& m);
Matrix to_sparse(const DenseMatrix& m);

/// Fraction-free (Bareiss) row echelon rank over an integral scalar type.
/// The matrix is consumed. Every division performed is exact.
template <typename IntegerT>
Index bareiss_rank(Eigen::Matrix<IntegerT, Eigen::Dynamic, Eigen::Dynamic>& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  IntegerT previous(1);
  Index rank = 0;
  for (Index c = 0; c < cols && rank < rows; ++c) {
    Index pivot = -1;
    for (Index r = rank; r < rows; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    const IntegerT p = m(rank, c);
    for (Index r = rank + 1; r < rows; ++r) {
      const IntegerT f = m(r, c);
      for (Index j = c + 1; j < cols; ++j) {
        m(r, j) = (p * m(r, j) - f * m(rank, j)) / previous;
      }
      m(r, c) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

/// Rank over Q by sparse elimination, one connected block at a time.
Index rank(const Matrix& m);
/// Rank over Q via integer scaling and dense Bareiss elimination.
Index dense_integer_rank(const Matrix& m);
Index rank(const DenseMatrix& m);

/// dim ker(d_out) - rank(d_in) for V_prev --d_in--> V --d_out--> V_next.
/// Throws DimensionMismatch if d_out.cols() != d_in.rows(), NotAComplex if
/// d_out * d_in != 0.
Index cohomology_dim(const Matrix& d_in, const Matrix& d_out);

/// Reduced row echelon form; returns the pivot columns.
std::vector<Index> rref(DenseMatrix& m);

/// Columns spanning the right kernel.
DenseMatrix kernel_basis(const DenseMatrix& m);

/// One solution x of a*x = b, or nullopt when inconsistent.
std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b);

/// Inverse of a square matrix; throws std::domain_error when singular.
DenseMatrix inverse(const DenseMatrix& a);

}  // namespace hochkit
