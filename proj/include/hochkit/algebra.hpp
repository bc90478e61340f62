#pragma once

// Finite-dimensional associative algebras given by structure constants,
// degree truncations of the non-unital polynomial algebra S(V)_0, and
// tensor-power bases A^{⊗k}.

#include "hochkit/exactla.hpp"

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace hochkit {

using Word = std::vector<int>;

class AlgebraError : public std::runtime_error {
 public:
  enum class Kind { NonAssociative, BadUnit, GradingViolation, MalformedSpec, FilterWithoutGrading };

  AlgebraError(Kind kind, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  /// Basis indices exhibiting the failure (a triple for NonAssociative).
  const std::vector<int>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<int> witness_;
};

std::string_view to_string(AlgebraError::Kind kind);

struct ProductTerm {
  int index;
  Rational coeff;
};

struct Factorization {
  int left;
  int right;
  Rational coeff;
};

struct StructureConstant {
  int i;
  int j;
  int k;
  Rational value;
};

struct AlgebraSpec {
  std::string name;
  std::vector<std::string> basis;
  std::vector<StructureConstant> mult;
  std::optional<int> unit;
  std::optional<std::vector<int>> grading;
  std::optional<int> truncation_degree;
  /// Exponent vectors for polynomial algebras (used by Poisson-bracket helpers).
  std::optional<std::vector<std::vector<int>>> monomials;
};

class Algebra {
 public:
  /// Validates eagerly; throws AlgebraError.
  explicit Algebra(AlgebraSpec spec);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<int> unit() const { return unit_; }
  bool is_graded() const { return grading_.has_value(); }
  const std::optional<std::vector<int>>& grading() const { return grading_; }
  int degree(int i) const;
  std::optional<int> truncation_degree() const { return truncation_degree_; }
  const std::optional<std::vector<std::vector<int>>>& monomials() const { return monomials_; }

  /// e_i · e_j expanded in the basis.
  const std::vector<ProductTerm>& product(int i, int j) const {
    return products_[static_cast<std::size_t>(i * dim() + j)];
  }
  /// All (i, j, c) with c = coefficient of e_k in e_i · e_j, c != 0.
  const std::vector<Factorization>& factorizations(int k) const {
    return factorizations_[static_cast<std::size_t>(k)];
  }
  Rational coeff(int i, int j, int k) const;

  /// Structure constants in (i, j, k) order, zeros omitted.
  std::vector<StructureConstant> structure_constants() const;

  /// First basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), if any.
  std::optional<std::array<int, 3>> associativity_witness() const;

  /// Same basis, unit, grading; one structure constant replaced. No validation
  /// beyond index checks, so the result may be non-associative.
  static std::shared_ptr<const Algebra> perturbed(const Algebra& base, int i, int j, int k,
                                                  const Rational& delta);

  bool same_as(const Algebra& other) const;

 private:
  struct Unchecked {};
  Algebra(AlgebraSpec spec, Unchecked);
  void build_tables(const std::vector<StructureConstant>& mult);
  void validate() const;

  std::string name_;
  std::vector<std::string> labels_;
  std::optional<int> unit_;
  std::optional<std::vector<int>> grading_;
  std::optional<int> truncation_degree_;
  std::optional<std::vector<std::vector<int>>> monomials_;
  std::vector<std::vector<ProductTerm>> products_;
  std::vector<std::vector<Factorization>> factorizations_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(AlgebraSpec spec);

/// S(V)_0 truncated above degree `max_degree`: monomials of degree 1..D in
/// n variables, graded-lex order, no unit.
AlgebraPtr truncated_polynomial_algebra(int n, int max_degree);

/// Named algebras: "C", "dual", "T2" (upper triangular 2x2), "sq0-n<k>",
/// "poly0-n<k>-D<d>". Throws std::invalid_argument for unknown names.
AlgebraPtr builtin_algebra(std::string_view name);

/// Flat lexicographic indexing of A^{⊗k} (first letter most significant).
class TensorShape {
 public:
  TensorShape(int dim, int power);
  int dim() const { return dim_; }
  int power() const { return power_; }
  Index size() const { return size_; }
  Index flat(std::span<const int> word) const;
  Word word(Index flat) const;

 private:
  int dim_;
  int power_;
  Index size_;
};

Index tensor_size(int dim, int power);

class TensorBasis {
 public:
  TensorBasis(int dim, int power, std::vector<Word> words, std::optional<int> degree);

  int power() const { return power_; }
  std::optional<int> degree_filter() const { return degree_; }
  Index size() const { return static_cast<Index>(words_.size()); }
  const std::vector<Word>& words() const { return words_; }
  const Word& operator[](Index i) const { return words_[static_cast<std::size_t>(i)]; }
  /// Flat A^{⊗k} index of the i-th element.
  Index flat(Index i) const { return flats_[static_cast<std::size_t>(i)]; }
  /// Position of a flat index in this basis, or -1.
  Index position_of_flat(Index flat) const;

 private:
  int power_;
  std::optional<int> degree_;
  std::vector<Word> words_;
  std::vector<Index> flats_;
  std::unordered_map<Index, Index> position_;
};

/// Lexicographic enumeration of length-k multi-indices, optionally restricted
/// to total degree p. Throws AlgebraError(FilterWithoutGrading).
TensorBasis tensor_basis(const Algebra& a, int k, std::optional<int> p = std::nullopt);

int word_degree(const Algebra& a, std::span<const int> word);

}  // namespace hochkit
