#pragma once

// Theorem-level checks for unital algebras and S(V)_0, the Clifford bracket
// table, Maurer-Cartan residuals, Q-complexes and Chevalley-Eilenberg
// cohomology. Every check returns a JSON report with "claim" and "status".

#include "hochkit/bicomplex.hpp"

#include "json.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hochkit {

using Report = nlohmann::json;

class NoUnit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegreeViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ClosednessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class JacobiFailure : public std::runtime_error {
 public:
  JacobiFailure(const std::string& message, std::array<int, 3> witness)
      : std::runtime_error(message), witness_(witness) {}
  const std::array<int, 3>& witness() const { return witness_; }

 private:
  std::array<int, 3> witness_;
};

/// NotAComplex carrying the offending index i (Q_{i+1} Q_i != 0).
class QNotAComplex : public NotAComplex {
 public:
  QNotAComplex(const std::string& message, int index) : NotAComplex(message), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

Index binomial(int n, int k);

struct CliffordCell {
  int degree;
  Index dim;
};

struct CliffordTable {
  int n;
  std::map<std::pair<int, int>, CliffordCell> expected;
  std::map<int, Index> total_by_degree;
};

/// Dimensions of ⋀^p(V^*) ⊗ ⋀^q(V) for all p, q <= n.
CliffordTable clifford_table(int n);

/// Column exactness of Hom(A^k, B) at rows 1..L-1 for k <= K, and the row-0
/// dual bar cohomology for k < K (expected: C at k = 0 only). Throws NoUnit.
/// With `include_table`, the windowed total cohomology is attached too.
Report verify_unital_vanishing(const AlgebraPtr& algebra, int K, int L, int parallelism = 1,
                               bool include_table = false);

Report table_json(const CohomologyTable& table);

/// Total cohomology of the bidegree-(p,q) complex of S(V)_0 truncated at
/// max(p,q,1), compared with C(n,p) C(n,q) in degree p - q.
Report verify_sv0_cohomology(int n, int p, int q, int parallelism = 1);

/// Antisymmetrized representatives r(I, J) for |I| = p, |J| = q over `sv0`
/// (a truncated polynomial algebra), in lexicographic order of (I, J).
/// Each is checked closed in the bidegree-(p,q) complex; throws
/// ClosednessFailure otherwise.
std::vector<MultilinearOp> clifford_representatives(const AlgebraPtr& sv0, int p, int q);
std::vector<MultilinearOp> clifford_representatives(int n, int p, int q);

/// Rank of the classes of `ops` (operators of bi-arity (p,q) in a
/// bidegree-(p,q) complex) modulo exact cochains.
Index independent_classes(const Bicomplex& b, const std::vector<MultilinearOp>& ops);

/// A monomial v_J v*_I of Clif(V ⊕ V^*) in normal order, J and I increasing.
struct CliffordMonomial {
  std::vector<int> v;
  std::vector<int> v_star;
  auto operator<=>(const CliffordMonomial&) const = default;
};

using CliffordElement = std::map<CliffordMonomial, Rational>;

/// Product in Clif(V ⊕ V^*) with v_i v*_j + v*_j v_i = δ_ij, normal ordered.
CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b);
/// ab - (-1)^{|a||b|} ba for homogeneous monomials (parity = length mod 2).
CliffordElement clifford_supercommutator(const CliffordMonomial& a, const CliffordMonomial& b);

/// Brackets of representatives with p, q <= bound, reduced modulo exact
/// cochains, compared with the super-commutator table under
/// r(I, J) <-> v_J v*_I. Mismatches are reported, not thrown.
Report clifford_bracket_table(int n, int bound, int parallelism = 1);

struct WeightedOp {
  int weight;
  OpSum op;
};

/// Residuals [m, γ_w] + ½ Σ_{a+b=w} [γ_a, γ_b] for weights 0..cutoff. Every
/// component of γ must have k - l = 1 (DegreeViolation otherwise).
Report mc_check(const std::vector<WeightedOp>& gamma, const AlgebraPtr& algebra, int cutoff = 0);

/// μ(a, μ(b,c)) - μ(μ(a,b), c) for μ = m + γ, γ a (2,1) operator.
MultilinearOp associativity_defect(const MultilinearOp& gamma);

struct LieStructure {
  int n = 0;
  /// c[(i, j)] = coefficients of [e_i, e_j] in the basis.
  std::map<std::pair<int, int>, std::vector<Rational>> c;

  Rational coeff(int i, int j, int k) const;
  void set(int i, int j, int k, const Rational& value);
};

/// "abelian<n>" or "nonabelian2" ([x, y] = y). Throws std::invalid_argument.
LieStructure builtin_lie(std::string_view name);

/// First (i, j, k) with a nonzero Jacobiator, if any.
std::optional<std::array<int, 3>> jacobi_witness(const LieStructure& g);

/// {f, g} = Σ c_ij^k x_k ∂_i f ∂_j g, scaled by `scale`, on a truncated
/// polynomial algebra in g.n variables. Products above the truncation vanish.
MultilinearOp lie_poisson_cochain(const AlgebraPtr& sv0, const LieStructure& g, const Rational& scale);

struct QComplex {
  int n = 0;
  /// maps[i]: ⋀^i V^* -> ⋀^{i+1} V^*, C(n,i+1) x C(n,i).
  std::vector<Matrix> maps;
};

QComplex zero_q_complex(int n);

/// Chevalley-Eilenberg differential on ⋀^• V^* with trivial coefficients.
/// Throws std::invalid_argument if c is not antisymmetric and
/// JacobiFailure if the maps do not square to zero.
QComplex ce_differential(const LieStructure& g);

/// Throws ShapeMismatch or QNotAComplex; otherwise reports Betti numbers
/// and the Euler characteristic check.
Report q_complex_check(const QComplex& q);

std::vector<Index> betti_numbers(const QComplex& q);

/// Betti numbers, the complete invariant under Q_i -> A_{i+1} Q_i A_i^{-1}.
std::vector<Index> gauge_invariants(const QComplex& q);

/// Random invertible matrix with entries in {-2..2}.
DenseMatrix random_invertible(Index size, std::mt19937_64& rng);

/// Q_i -> A_{i+1} Q_i A_i^{-1}; `gauge` holds A_0..A_n.
QComplex conjugate(const QComplex& q, const std::vector<DenseMatrix>& gauge);

}  // namespace hochkit
