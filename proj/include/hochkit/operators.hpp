#pragma once

// Multilinear operators A^{⊗k} -> A^{⊗l}, their insertion into tensor
// powers, and the Lie bracket whose insertion is the graded commutator of
// insertions.
//
// Sign convention: letters of A[1] are odd. An operator of degree i = k - l
// placed with t untouched letters to its RIGHT acquires (-1)^(t*i). Brackets
// are graded commutators with the factor (-1)^(deg f * deg g).

#include "hochkit/algebra.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace hochkit {

class OperatorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OpEntry {
  Word in;
  Word out;
  Rational value;
};

class MultilinearOp {
 public:
  /// The zero operator of bi-arity (k, l).
  MultilinearOp(AlgebraPtr algebra, int k, int l);
  /// `matrix` has dim^l rows (outputs) and dim^k columns (inputs).
  MultilinearOp(AlgebraPtr algebra, int k, int l, Matrix matrix);

  static MultilinearOp identity(AlgebraPtr algebra, int k);
  static MultilinearOp scalar(AlgebraPtr algebra, const Rational& c);
  static MultilinearOp from_entries(AlgebraPtr algebra, int k, int l, const std::vector<OpEntry>& entries);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  int k() const { return k_; }
  int l() const { return l_; }
  int degree() const { return k_ - l_; }
  std::pair<int, int> arity() const { return {k_, l_}; }
  const Matrix& matrix() const { return matrix_; }

  Rational entry(const Word& in, const Word& out) const;
  std::vector<OpEntry> entries() const;
  bool is_zero() const { return hochkit::is_zero(matrix_); }

  MultilinearOp& operator+=(const MultilinearOp& other);
  MultilinearOp& operator-=(const MultilinearOp& other);
  MultilinearOp& operator*=(const Rational& c);

 private:
  void check_compatible(const MultilinearOp& other) const;

  AlgebraPtr algebra_;
  int k_;
  int l_;
  Matrix matrix_;
};

MultilinearOp operator+(MultilinearOp a, const MultilinearOp& b);
MultilinearOp operator-(MultilinearOp a, const MultilinearOp& b);
MultilinearOp operator-(MultilinearOp a);
MultilinearOp operator*(const Rational& c, MultilinearOp a);
bool operator==(const MultilinearOp& a, const MultilinearOp& b);

/// m_A as a (2, 1) operator.
MultilinearOp multiplication_op(AlgebraPtr algebra);

/// Finite family of operators with distinct bi-arities; zero components are
/// never stored.
class OpSum {
 public:
  using Components = std::map<std::pair<int, int>, MultilinearOp>;

  OpSum() = default;
  explicit OpSum(const MultilinearOp& op);

  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  const MultilinearOp* component(int k, int l) const;

  void add(const MultilinearOp& op);
  OpSum& operator+=(const OpSum& other);
  OpSum& operator-=(const OpSum& other);
  OpSum& operator*=(const Rational& c);

 private:
  Components components_;
};

OpSum operator+(OpSum a, const OpSum& b);
OpSum operator-(OpSum a, const OpSum& b);
OpSum operator*(const Rational& c, OpSum a);
bool operator==(const OpSum& a, const OpSum& b);

bool same_algebra(const Algebra& a, const Algebra& b);

/// id^{⊗lead} ⊗ psi ⊗ id^{⊗trail}, unsigned.
Matrix embed(const MultilinearOp& psi, int lead, int trail);

/// The extension of psi to A^{⊗n}: the signed sum over all contiguous
/// placements. Throws OperatorError when n < k.
Matrix insertion(const MultilinearOp& psi, int n);

/// Sum of component insertions on A^{⊗n}; components with k > n contribute
/// zero. `degree` fixes the target shape when the sum is empty.
Matrix insertion(const OpSum& sum, const Algebra& algebra, int degree, int n);

/// The part of i(f)∘i(g) in which f's input window meets g's output window
/// in exactly s letters, as a (k(f)+k(g)-s, l(f)+l(g)-s) operator. For
/// s = 0 this includes the configurations that survive the graded
/// commutator (see README). Throws OperatorError unless
/// 0 <= s <= min(k(f), l(g)).
MultilinearOp compose_overlap(const MultilinearOp& f, const MultilinearOp& g, int s);

OpSum bracket(const MultilinearOp& f, const MultilinearOp& g);
OpSum bracket(const OpSum& a, const OpSum& b);

/// i(f)∘i(g) - (-1)^(deg f deg g) i(g)∘i(f) on A^{⊗n}, built directly from
/// insertion matrices. Throws OperatorError when n < k(f) + k(g).
Matrix insertion_commutator_oracle(const MultilinearOp& f, const MultilinearOp& g, int n);

/// Matrix of a linear map Hom(A^k, A^l) -> Hom(A^k', A^l') in the basis of
/// elementary operators, indexed by in_flat * dim^l + out_flat.
Matrix linear_map_matrix(const AlgebraPtr& algebra, int k, int l, int target_k, int target_l,
                         const std::function<MultilinearOp(const MultilinearOp&)>& map);

/// Flattened coordinates of an operator in the same indexing.
DenseVector vectorize(const MultilinearOp& op);

}  // namespace hochkit
