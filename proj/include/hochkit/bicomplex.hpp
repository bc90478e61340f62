#pragma once

// The bicomplex Hom(A^{⊗k}, A^{⊗l}) with horizontal d1 (k -> k+1) and
// vertical d2 (l -> l-1), its finite windows, total cohomology graded by
// k - l, and independent textbook oracles for the classical rows/columns.

#include "hochkit/operators.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hochkit {

/// psi (k,l) -> (k+1,l). The outer terms act on the first/last output factor
/// and vanish when l = 0.
MultilinearOp d1(const MultilinearOp& psi);

/// psi (k,l) -> (k,l-1), post-composition with the alternating sum of
/// adjacent multiplications. Zero for l = 1. Throws OperatorError for l = 0.
MultilinearOp d2(const MultilinearOp& psi);

/// For psi with l = 0, the (k+2,1) part of [m, psi]:
/// (a_1..a_{k+2}) -> (-1)^k psi(a_2..a_{k+1}) a_1 a_{k+2}. Zero otherwise.
MultilinearOp row0_coupling(const MultilinearOp& psi);

/// {d1 psi, d2 psi} plus the row-0 coupling when l = 0.
OpSum expected_bracket_with_m(const MultilinearOp& psi);

/// bracket(m_A, psi), after asserting it equals expected_bracket_with_m.
/// A mismatch is an internal sign inconsistency and throws std::logic_error.
OpSum bracket_with_m_decomposition(const AlgebraPtr& algebra, const MultilinearOp& psi);

/// Textbook Hochschild differential Hom(A^k, A) -> Hom(A^{k+1}, A), built by
/// direct evaluation. Indexed like linear_map_matrix.
Matrix hochschild_oracle_differential(const AlgebraPtr& algebra, int k);

/// Textbook Gerstenhaber bracket f∘g - (-1)^{(k1-1)(k2-1)} g∘f with
/// f∘g = Σ_i (-1)^{i(k2-1)} f(.., g(a_{i+1}..), ..). Requires l = 1 on both.
MultilinearOp gerstenhaber_oracle(const MultilinearOp& f, const MultilinearOp& g);

/// Bar differentials b'_l: A^{⊗l} -> A^{⊗(l-1)} for l = 1..L, with
/// b' = Σ_{i=1}^{l-1} (-1)^{i-1} m_{i,i+1}. Element l-1 holds b'_l.
std::vector<Matrix> bar_complex(const AlgebraPtr& algebra, int max_power);

struct RectWindow {
  int K;
  int L;
};

struct BidegreeWindow {
  int p;
  int q;
};

using Window = std::variant<RectWindow, BidegreeWindow>;

std::string describe(const Window& window);

class WindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Basis of one (k,l) slot: pairs (input word, output word), indexed
/// in_position * out.size() + out_position.
class Slot {
 public:
  Slot(TensorBasis in, TensorBasis out);
  int k() const { return in_.power(); }
  int l() const { return out_.power(); }
  Index size() const { return in_.size() * out_.size(); }
  const TensorBasis& in() const { return in_; }
  const TensorBasis& out() const { return out_; }
  /// Position of (in, out) given as flat tensor indices, or -1.
  Index position(Index in_flat, Index out_flat) const;
  MultilinearOp element(const AlgebraPtr& algebra, Index position) const;
  /// Coordinates of an operator restricted to this slot's basis.
  DenseVector coordinates(const MultilinearOp& op) const;

 private:
  TensorBasis in_;
  TensorBasis out_;
};

class Bicomplex {
 public:
  /// Builds every slot and differential in the window and checks
  /// d1² = 0, d2² = 0, d1d2 + d2d1 = 0. Throws WindowError for an invalid
  /// window, NotAComplex if an identity fails.
  static Bicomplex assemble(AlgebraPtr algebra, const Window& window, int parallelism = 1);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Window& window() const { return window_; }
  int max_k() const { return max_k_; }
  int max_l() const { return max_l_; }

  bool contains(int k, int l) const;
  const Slot& slot(int k, int l) const;
  Index dim(int k, int l) const;
  /// (k,l) -> (k+1,l); zero rows when k+1 leaves the window.
  const Matrix& d1_map(int k, int l) const;
  /// (k,l) -> (k,l-1); zero rows when l = 0.
  const Matrix& d2_map(int k, int l) const;

  /// Total degrees i = k - l with at least one slot in the window.
  std::vector<int> total_degrees() const;
  Index total_dim(int i) const;
  /// Block matrix of d1 + d2 from degree i to degree i + 1. Slots are
  /// ordered by increasing k.
  Matrix total_differential(int i) const;

 private:
  Bicomplex() = default;
  std::size_t index(int k, int l) const;

  AlgebraPtr algebra_;
  Window window_{RectWindow{0, 0}};
  int max_k_ = 0;
  int max_l_ = 0;
  std::vector<Slot> slots_;
  std::vector<Matrix> d1_;
  std::vector<Matrix> d2_;
};

struct CohomologyTable {
  Window window;
  std::map<int, Index> by_total_degree;
  std::set<int> reliable;
  std::map<std::pair<int, int>, Index> slot_dims;
};

/// Cohomology of the total complex. Bidegree windows are finite complexes
/// and every degree is reliable. For a rectangular window a degree is
/// marked reliable when its dimension is unchanged in the windows
/// (K+1, L) and (K, L+1).
CohomologyTable total_cohomology(const Bicomplex& b, int parallelism = 1);

}  // namespace hochkit
