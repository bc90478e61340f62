#include "hochkit/structures.hpp"

#include "hochkit/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hochkit {

Index binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Index r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CliffordTable clifford_table(int n) {
  if (n < 0) throw std::invalid_argument("clifford_table: n must be non-negative");
  CliffordTable t{n, {}, {}};
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const Index dim = binomial(n, p) * binomial(n, q);
      t.expected[{p, q}] = {p - q, dim};
      t.total_by_degree[p - q] += dim;
    }
  }
  return t;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > n) return out;
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  std::fill(mask.begin(), mask.begin() + size, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask[static_cast<std::size_t>(i)]) s.push_back(i);
    }
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// All orderings of `set` with their signs.
std::vector<std::pair<Word, int>> signed_orderings(const std::vector<int>& set) {
  std::vector<std::pair<Word, int>> out;
  Word w = set;
  do {
    out.emplace_back(w, permutation_sign(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

MultilinearOp representative(const AlgebraPtr& sv0, const std::vector<int>& in, const std::vector<int>& out) {
  std::vector<OpEntry> entries;
  for (const auto& [w, sw] : signed_orderings(in)) {
    for (const auto& [v, sv] : signed_orderings(out)) entries.push_back({w, v, Rational(sw * sv)});
  }
  return MultilinearOp::from_entries(sv0, static_cast<int>(in.size()), static_cast<int>(out.size()), entries);
}

int variable_count(const Algebra& a) {
  if (!a.monomials() || !a.truncation_degree()) {
    throw std::invalid_argument("expected a truncated polynomial algebra");
  }
  return static_cast<int>(a.monomials()->front().size());
}

// Embeds a top-slot operator of a bidegree window into its total degree.
DenseVector embed_top(const Bicomplex& b, const MultilinearOp& op) {
  const int i = b.max_k() - b.max_l();
  const Index total = b.total_dim(i);
  const Slot& top = b.slot(b.max_k(), b.max_l());
  DenseVector v = DenseVector::Zero(total);
  v.tail(top.size()) = top.coordinates(op);
  return v;
}

Matrix columns_of(const std::vector<DenseVector>& vs, Index rows) {
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < vs.size(); ++c) {
    for (Index r = 0; r < rows; ++r) {
      if (vs[c](r) != 0) t.emplace_back(r, static_cast<Index>(c), vs[c](r));
    }
  }
  return make_matrix(rows, static_cast<Index>(vs.size()), t);
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  std::vector<Triplet> t = triplets_of(a);
  for (const auto& e : triplets_of(b)) t.emplace_back(e.row(), a.cols() + e.col(), e.value());
  return make_matrix(a.rows(), a.cols() + b.cols(), t);
}

}  // namespace

std::vector<MultilinearOp> clifford_representatives(const AlgebraPtr& sv0, int p, int q) {
  const int n = variable_count(*sv0);
  if (p < 0 || q < 0 || p > n || q > n) throw std::invalid_argument("clifford_representatives: need 0 <= p, q <= n");
  const Bicomplex b = Bicomplex::assemble(sv0, BidegreeWindow{p, q});
  const Matrix d_out = b.total_differential(p - q);
  std::vector<MultilinearOp> reps;
  for (const auto& in : subsets(n, p)) {
    for (const auto& out : subsets(n, q)) {
      MultilinearOp r = representative(sv0, in, out);
      const DenseVector image = to_dense(d_out) * embed_top(b, r);
      if (!image.isZero()) {
        throw ClosednessFailure("representative (p,q) = (" + std::to_string(p) + "," + std::to_string(q) +
                                ") is not closed");
      }
      reps.push_back(std::move(r));
    }
  }
  return reps;
}

std::vector<MultilinearOp> clifford_representatives(int n, int p, int q) {
  return clifford_representatives(truncated_polynomial_algebra(n, std::max({p, q, 1})), p, q);
}

Index independent_classes(const Bicomplex& b, const std::vector<MultilinearOp>& ops) {
  const int i = b.max_k() - b.max_l();
  const Matrix d_in = b.total_differential(i - 1);
  std::vector<DenseVector> vs;
  for (const auto& op : ops) vs.push_back(embed_top(b, op));
  const Matrix reps = columns_of(vs, b.total_dim(i));
  return rank(hstack(d_in, reps)) - rank(d_in);
}

namespace {

// Generator (type, index): type 0 is v_i, type 1 is v*_i.
using Generator = std::pair<int, int>;
using GeneratorWord = std::vector<Generator>;

void normal_order(const GeneratorWord& w, const Rational& c, CliffordElement& out) {
  if (c == 0) return;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Generator a = w[i], b = w[i + 1];
    if (a < b) continue;
    if (a == b) return;
    GeneratorWord swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    if (a.first == 1 && b.first == 0 && a.second == b.second) {
      // v*_i v_i = 1 - v_i v*_i
      GeneratorWord contracted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      normal_order(contracted, c, out);
    }
    normal_order(swapped, -c, out);
    return;
  }
  CliffordMonomial m;
  for (const auto& g : w) (g.first == 0 ? m.v : m.v_star).push_back(g.second);
  auto [it, inserted] = out.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

GeneratorWord generators_of(const CliffordMonomial& m) {
  GeneratorWord w;
  for (int i : m.v) w.emplace_back(0, i);
  for (int i : m.v_star) w.emplace_back(1, i);
  return w;
}

int parity(const CliffordMonomial& m) { return static_cast<int>(m.v.size() + m.v_star.size()) % 2; }

}  // namespace

CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      GeneratorWord w = generators_of(ma);
      const GeneratorWord wb = generators_of(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      normal_order(w, ca * cb, out);
    }
  }
  return out;
}

CliffordElement clifford_supercommutator(const CliffordMonomial& a, const CliffordMonomial& b) {
  const CliffordElement ea{{a, Rational(1)}}, eb{{b, Rational(1)}};
  CliffordElement out = clifford_product(ea, eb);
  const Rational s = -sign_of(parity(a) * parity(b));
  for (const auto& [m, c] : clifford_product(eb, ea)) {
    auto [it, inserted] = out.emplace(m, s * c);
    if (!inserted) {
      it->second += s * c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

namespace {

struct Generator2 {
  std::vector<int> in;   // I, the ⋀^p V^* part
  std::vector<int> out;  // J, the ⋀^q V part
  MultilinearOp op;
};

std::string label(const Algebra& a, const CliffordMonomial& m) {
  if (m.v.empty() && m.v_star.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  auto put = [&](const std::string& s) {
    if (!first) os << ' ';
    os << s;
    first = false;
  };
  for (int j : m.v) put("v_" + a.label(j));
  for (int i : m.v_star) put("v*_" + a.label(i));
  return os.str();
}

Report element_json(const Algebra& a, const CliffordElement& e) {
  Report r = Report::object();
  for (const auto& [m, c] : e) r[label(a, m)] = to_string(c);
  return r;
}

// Cohomology classes of one bidegree (P,Q), with a solver expressing a top
// slot cocycle in the representative basis.
struct ClassReducer {
  std::optional<Bicomplex> complex;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> labels;
  DenseMatrix system;  // [reps | exact]
  Index rep_count = 0;

  // Coefficients on the representatives, or nullopt if `op` is not a cocycle
  // congruent to a combination of them.
  std::optional<std::vector<Rational>> reduce(const MultilinearOp& op) const {
    const DenseVector v = embed_top(*complex, op);
    const DenseVector image = to_dense(complex->total_differential(complex->max_k() - complex->max_l())) * v;
    if (!image.isZero()) return std::nullopt;
    const auto x = solve(system, v);
    if (!x) return std::nullopt;
    std::vector<Rational> coeffs;
    for (Index r = 0; r < rep_count; ++r) coeffs.push_back((*x)(r, 0));
    return coeffs;
  }
};

ClassReducer make_reducer(const AlgebraPtr& sv0, int n, int P, int Q) {
  ClassReducer red;
  red.complex = Bicomplex::assemble(sv0, BidegreeWindow{P, Q});
  std::vector<DenseVector> cols;
  if (P <= n && Q <= n) {
    for (const auto& in : subsets(n, P)) {
      for (const auto& out : subsets(n, Q)) {
        red.labels.emplace_back(in, out);
        cols.push_back(embed_top(*red.complex, representative(sv0, in, out)));
      }
    }
  }
  red.rep_count = static_cast<Index>(cols.size());
  const int i = P - Q;
  const Matrix d_in = red.complex->total_differential(i - 1);
  const Index rows = red.complex->total_dim(i);
  red.system = to_dense(hstack(columns_of(cols, rows), d_in));
  return red;
}

}  // namespace

Report clifford_bracket_table(int n, int bound, int parallelism) {
  if (n < 1 || bound < 0) throw std::invalid_argument("clifford_bracket_table: need n >= 1, bound >= 0");
  const int top = std::min(bound, n);
  const int D = std::max(2 * top, 1);
  const AlgebraPtr sv0 = truncated_polynomial_algebra(n, D);

  std::vector<Generator2> gens;
  for (int p = 0; p <= top; ++p) {
    for (int q = 0; q <= top; ++q) {
      for (const auto& in : subsets(n, p)) {
        for (const auto& out : subsets(n, q)) gens.push_back({in, out, representative(sv0, in, out)});
      }
    }
  }

  std::map<std::pair<int, int>, ClassReducer> reducers;
  for (int P = 0; P <= 2 * top; ++P) {
    for (int Q = 0; Q <= 2 * top; ++Q) reducers.emplace(std::make_pair(P, Q), make_reducer(sv0, n, P, Q));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a; b < gens.size(); ++b) pairs.emplace_back(a, b);
  }
  std::vector<Report> rows(pairs.size());
  std::vector<int> mismatched(pairs.size(), 0);
  parallel_for(pairs.size(), parallelism, [&](std::size_t idx) {
    const auto& g1 = gens[pairs[idx].first];
    const auto& g2 = gens[pairs[idx].second];
    const CliffordMonomial c1{g1.out, g1.in}, c2{g2.out, g2.in};
    const CliffordElement predicted = clifford_supercommutator(c1, c2);

    CliffordElement computed;
    bool reducible = true;
    const OpSum product = bracket(g1.op, g2.op);
    for (const auto& [key, op] : product.components()) {
      auto it = reducers.find(key);
      if (it == reducers.end()) {
        reducible = false;
        continue;
      }
      const auto coeffs = it->second.reduce(op);
      if (!coeffs) {
        reducible = false;
        continue;
      }
      for (std::size_t r = 0; r < coeffs->size(); ++r) {
        if ((*coeffs)[r] == 0) continue;
        const auto& [in, out] = it->second.labels[r];
        computed[CliffordMonomial{out, in}] += (*coeffs)[r];
      }
    }
    std::erase_if(computed, [](const auto& kv) { return kv.second == 0; });
    const bool match = reducible && computed == predicted;
    mismatched[idx] = match ? 0 : 1;
    rows[idx] = Report{{"left", label(*sv0, c1)},
                       {"right", label(*sv0, c2)},
                       {"computed", element_json(*sv0, computed)},
                       {"predicted", element_json(*sv0, predicted)},
                       {"reducible", reducible},
                       {"status", match ? "MATCH" : "MISMATCH"}};
  });

  const int mismatches = std::accumulate(mismatched.begin(), mismatched.end(), 0);
  return Report{{"claim", "clifford-bracket:n=" + std::to_string(n) + ":bound=" + std::to_string(bound)},
                {"identification", "r(I,J) <-> v_J v*_I, parity = p + q mod 2, global sign +1"},
                {"pairs", rows},
                {"pair_count", rows.size()},
                {"mismatches", mismatches},
                {"status", mismatches == 0 ? "PASS" : "MISMATCH"}};
}

}  // namespace hochkit
