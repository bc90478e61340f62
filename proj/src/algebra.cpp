#include "hochkit/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace hochkit {

std::string_view to_string(AlgebraError::Kind kind) {
  switch (kind) {
    case AlgebraError::Kind::NonAssociative: return "NonAssociative";
    case AlgebraError::Kind::BadUnit: return "BadUnit";
    case AlgebraError::Kind::GradingViolation: return "GradingViolation";
    case AlgebraError::Kind::MalformedSpec: return "MalformedSpec";
    case AlgebraError::Kind::FilterWithoutGrading: return "FilterWithoutGrading";
  }
  return "Unknown";
}

Algebra::Algebra(AlgebraSpec spec) : Algebra(std::move(spec), Unchecked{}) { validate(); }

Algebra::Algebra(AlgebraSpec spec, Unchecked)
    : name_(std::move(spec.name)),
      labels_(std::move(spec.basis)),
      unit_(spec.unit),
      grading_(std::move(spec.grading)),
      truncation_degree_(spec.truncation_degree),
      monomials_(std::move(spec.monomials)) {
  using K = AlgebraError::Kind;
  if (labels_.empty()) throw AlgebraError(K::MalformedSpec, "algebra basis must be non-empty");
  const int d = dim();
  if (unit_ && (*unit_ < 0 || *unit_ >= d)) {
    throw AlgebraError(K::MalformedSpec, "unit index out of range", {*unit_});
  }
  if (grading_) {
    if (static_cast<int>(grading_->size()) != d) {
      throw AlgebraError(K::MalformedSpec, "grading length differs from basis length");
    }
    for (int g : *grading_) {
      if (g < 0) throw AlgebraError(K::MalformedSpec, "grading degrees must be non-negative");
    }
  }
  if (truncation_degree_ && !grading_) {
    throw AlgebraError(K::MalformedSpec, "truncation_degree requires a grading");
  }
  for (const auto& c : spec.mult) {
    if (c.i < 0 || c.i >= d || c.j < 0 || c.j >= d || c.k < 0 || c.k >= d) {
      throw AlgebraError(K::MalformedSpec, "structure constant index out of range", {c.i, c.j, c.k});
    }
  }
  build_tables(spec.mult);
}

void Algebra::build_tables(const std::vector<StructureConstant>& mult) {
  const int d = dim();
  std::vector<std::map<int, Rational>> acc(static_cast<std::size_t>(d * d));
  for (const auto& c : mult) acc[static_cast<std::size_t>(c.i * d + c.j)][c.k] += c.value;
  products_.assign(static_cast<std::size_t>(d * d), {});
  factorizations_.assign(static_cast<std::size_t>(d), {});
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (const auto& [k, v] : acc[static_cast<std::size_t>(i * d + j)]) {
        if (v == 0) continue;
        products_[static_cast<std::size_t>(i * d + j)].push_back({k, v});
        factorizations_[static_cast<std::size_t>(k)].push_back({i, j, v});
      }
    }
  }
}

int Algebra::degree(int i) const {
  if (!grading_) throw AlgebraError(AlgebraError::Kind::FilterWithoutGrading, "algebra is not graded");
  return (*grading_)[static_cast<std::size_t>(i)];
}

Rational Algebra::coeff(int i, int j, int k) const {
  for (const auto& t : product(i, j)) {
    if (t.index == k) return t.coeff;
  }
  return Rational(0);
}

std::vector<StructureConstant> Algebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      for (const auto& t : product(i, j)) out.push_back({i, j, t.index, t.coeff});
    }
  }
  return out;
}

std::optional<std::array<int, 3>> Algebra::associativity_witness() const {
  const int d = dim();
  std::vector<Rational> lhs(static_cast<std::size_t>(d));
  std::vector<Rational> rhs(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        std::fill(lhs.begin(), lhs.end(), Rational(0));
        std::fill(rhs.begin(), rhs.end(), Rational(0));
        for (const auto& ij : product(i, j)) {
          for (const auto& t : product(ij.index, k)) lhs[t.index] += ij.coeff * t.coeff;
        }
        for (const auto& jk : product(j, k)) {
          for (const auto& t : product(i, jk.index)) rhs[t.index] += jk.coeff * t.coeff;
        }
        if (lhs != rhs) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

void Algebra::validate() const {
  using K = AlgebraError::Kind;
  const int d = dim();
  if (unit_) {
    const int u = *unit_;
    for (int i = 0; i < d; ++i) {
      for (int side = 0; side < 2; ++side) {
        const auto& p = side == 0 ? product(u, i) : product(i, u);
        if (p.size() != 1 || p[0].index != i || p[0].coeff != 1) {
          throw AlgebraError(K::BadUnit,
                             "unit " + label(u) + " does not act as identity on " + label(i), {u, i});
        }
      }
    }
  }
  if (grading_) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (const auto& t : product(i, j)) {
          const int total = degree(i) + degree(j);
          if (truncation_degree_ && total > *truncation_degree_) {
            throw AlgebraError(K::GradingViolation, "product exceeds truncation degree but is nonzero",
                               {i, j, t.index});
          }
          if (degree(t.index) != total) {
            throw AlgebraError(K::GradingViolation, "structure constant does not respect the grading",
                               {i, j, t.index});
          }
        }
      }
    }
  }
  if (auto w = associativity_witness()) {
    throw AlgebraError(K::NonAssociative,
                       "(e_i e_j) e_k != e_i (e_j e_k) for (" + label((*w)[0]) + ", " + label((*w)[1]) +
                           ", " + label((*w)[2]) + ")",
                       {(*w)[0], (*w)[1], (*w)[2]});
  }
}

std::shared_ptr<const Algebra> Algebra::perturbed(const Algebra& base, int i, int j, int k,
                                                  const Rational& delta) {
  AlgebraSpec spec;
  spec.name = base.name_ + "~perturbed";
  spec.basis = base.labels_;
  spec.mult = base.structure_constants();
  spec.mult.push_back({i, j, k, delta});
  spec.unit = std::nullopt;
  spec.grading = std::nullopt;
  return std::shared_ptr<const Algebra>(new Algebra(std::move(spec), Unchecked{}));
}

bool Algebra::same_as(const Algebra& other) const {
  if (this == &other) return true;
  if (dim() != other.dim() || unit_ != other.unit_ || grading_ != other.grading_) return false;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      const auto& a = product(i, j);
      const auto& b = other.product(i, j);
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t].index != b[t].index || a[t].coeff != b[t].coeff) return false;
      }
    }
  }
  return true;
}

AlgebraPtr make_algebra(AlgebraSpec spec) { return std::make_shared<const Algebra>(std::move(spec)); }

namespace {

std::string variable_name(int v, int n) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (n <= 4) return names[v];
  return "x" + std::to_string(v + 1);
}

std::string monomial_label(const std::vector<int>& e) {
  std::string s;
  const int n = static_cast<int>(e.size());
  for (int v = 0; v < n; ++v) {
    if (e[v] == 0) continue;
    s += variable_name(v, n);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s;
}

// Exponent vectors of total degree `deg`, in descending lex order
// (x^2, xy, y^2 for two variables).
void monomials_of_degree(int n, int deg, std::vector<int>& current, int var,
                         std::vector<std::vector<int>>& out) {
  if (var == n - 1) {
    current[var] = deg;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (int e = deg; e >= 0; --e) {
    current[var] = e;
    monomials_of_degree(n, deg - e, current, var + 1, out);
  }
  current[var] = 0;
}

int parse_positive(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw std::invalid_argument("bad " + std::string(what) + " in builtin algebra name");
  }
  return v;
}

}  // namespace

AlgebraPtr truncated_polynomial_algebra(int n, int max_degree) {
  if (n < 1 || max_degree < 1) {
    throw std::invalid_argument("truncated_polynomial_algebra requires n >= 1 and D >= 1");
  }
  std::vector<std::vector<int>> monos;
  std::vector<int> scratch(static_cast<std::size_t>(n), 0);
  for (int deg = 1; deg <= max_degree; ++deg) monomials_of_degree(n, deg, scratch, 0, monos);

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);

  AlgebraSpec spec;
  spec.name = "poly0-n" + std::to_string(n) + "-D" + std::to_string(max_degree);
  if (max_degree == 1) spec.name = "sq0-n" + std::to_string(n);
  std::vector<int> grading;
  for (const auto& m : monos) {
    spec.basis.push_back(monomial_label(m));
    int deg = 0;
    for (int e : m) deg += e;
    grading.push_back(deg);
  }
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      if (grading[i] + grading[j] > max_degree) continue;
      std::vector<int> prod(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) prod[v] = monos[i][v] + monos[j][v];
      spec.mult.push_back({static_cast<int>(i), static_cast<int>(j), index.at(prod), Rational(1)});
    }
  }
  spec.grading = grading;
  spec.truncation_degree = max_degree;
  spec.monomials = monos;
  return make_algebra(std::move(spec));
}

AlgebraPtr builtin_algebra(std::string_view name) {
  if (name == "C") {
    AlgebraSpec spec{"C", {"e"}, {{0, 0, 0, Rational(1)}}, 0, std::nullopt, std::nullopt, std::nullopt};
    return make_algebra(std::move(spec));
  }
  if (name == "dual") {
    AlgebraSpec spec{"dual",
                     {"1", "x"},
                     {{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 0, 1, Rational(1)}},
                     0,
                     std::nullopt,
                     std::nullopt,
                     std::nullopt};
    return make_algebra(std::move(spec));
  }
  if (name == "T2") {
    // Upper triangular 2x2 matrices: e11, e12, e22.
    AlgebraSpec spec{"T2",
                     {"e11", "e12", "e22"},
                     {{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 2, 1, Rational(1)},
                      {2, 2, 2, Rational(1)}},
                     std::nullopt,
                     std::nullopt,
                     std::nullopt,
                     std::nullopt};
    return make_algebra(std::move(spec));
  }
  if (name.starts_with("sq0-n")) {
    return truncated_polynomial_algebra(parse_positive(name.substr(5), "variable count"), 1);
  }
  if (name.starts_with("poly0-n")) {
    const auto rest = name.substr(7);
    const auto dash = rest.find("-D");
    if (dash == std::string_view::npos) throw std::invalid_argument("expected poly0-n<k>-D<d>");
    return truncated_polynomial_algebra(parse_positive(rest.substr(0, dash), "variable count"),
                                        parse_positive(rest.substr(dash + 2), "truncation degree"));
  }
  throw std::invalid_argument("unknown builtin algebra: " + std::string(name));
}

Index tensor_size(int dim, int power) {
  Index s = 1;
  for (int i = 0; i < power; ++i) s *= dim;
  return s;
}

TensorShape::TensorShape(int dim, int power) : dim_(dim), power_(power), size_(tensor_size(dim, power)) {}

Index TensorShape::flat(std::span<const int> word) const {
  Index f = 0;
  for (int letter : word) f = f * dim_ + letter;
  return f;
}

Word TensorShape::word(Index flat) const {
  Word w(static_cast<std::size_t>(power_));
  for (int i = power_ - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(flat % dim_);
    flat /= dim_;
  }
  return w;
}

TensorBasis::TensorBasis(int dim, int power, std::vector<Word> words, std::optional<int> degree)
    : power_(power), degree_(degree), words_(std::move(words)) {
  const TensorShape shape(dim, power);
  flats_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    flats_.push_back(shape.flat(words_[i]));
    position_.emplace(flats_.back(), static_cast<Index>(i));
  }
}

Index TensorBasis::position_of_flat(Index flat) const {
  auto it = position_.find(flat);
  return it == position_.end() ? -1 : it->second;
}

int word_degree(const Algebra& a, std::span<const int> word) {
  int d = 0;
  for (int letter : word) d += a.degree(letter);
  return d;
}

TensorBasis tensor_basis(const Algebra& a, int k, std::optional<int> p) {
  if (k < 0) throw std::invalid_argument("tensor_basis: negative tensor power");
  if (p && !a.is_graded()) {
    throw AlgebraError(AlgebraError::Kind::FilterWithoutGrading,
                       "tensor_basis: degree filter requested on an ungraded algebra");
  }
  std::vector<Word> words;
  Word current(static_cast<std::size_t>(k));
  // Depth-first in lexicographic order with degree pruning.
  int min_deg = 0;
  if (p) {
    min_deg = *std::min_element(a.grading()->begin(), a.grading()->end());
  }
  auto recurse = [&](auto&& self, int pos, int deg_so_far) -> void {
    if (pos == k) {
      if (!p || deg_so_far == *p) words.push_back(current);
      return;
    }
    for (int letter = 0; letter < a.dim(); ++letter) {
      int deg = deg_so_far;
      if (p) {
        deg += a.degree(letter);
        if (deg + min_deg * (k - pos - 1) > *p) continue;
      }
      current[static_cast<std::size_t>(pos)] = letter;
      self(self, pos + 1, deg);
    }
  };
  recurse(recurse, 0, 0);
  return TensorBasis(a.dim(), k, std::move(words), p);
}

}  // namespace hochkit
