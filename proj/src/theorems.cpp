#include "hochkit/structures.hpp"

#include <algorithm>
#include <map>

namespace hochkit {

Report table_json(const CohomologyTable& table) {
  Report dims = Report::object();
  for (const auto& [i, d] : table.by_total_degree) dims[std::to_string(i)] = d;
  Report reliable = Report::array();
  for (int i : table.reliable) reliable.push_back(i);
  return Report{{"window", describe(table.window)}, {"by_total_degree", dims}, {"reliable", reliable}};
}

Report verify_unital_vanishing(const AlgebraPtr& algebra, int K, int L, int parallelism, bool include_table) {
  if (!algebra->unit()) throw NoUnit("verify_unital_vanishing: algebra '" + algebra->name() + "' has no unit");
  if (K < 0 || L < 1) throw WindowError("verify_unital_vanishing: need K >= 0 and L >= 1");
  const Bicomplex b = Bicomplex::assemble(algebra, RectWindow{K, L}, parallelism);

  Report failures = Report::array();
  Report columns = Report::object();
  for (int k = 0; k <= K; ++k) {
    Report rows = Report::object();
    for (int l = 1; l <= L - 1; ++l) {
      const Index h = cohomology_dim(b.d2_map(k, l + 1), b.d2_map(k, l));
      rows[std::to_string(l)] = h;
      if (h != 0) failures.push_back(Report{{"k", k}, {"l", l}, {"dim", h}});
    }
    columns[std::to_string(k)] = rows;
  }

  // Row 0: Hom(A^k, C) with d1, interior columns k < K.
  Report row0 = Report::object();
  bool row0_ok = true;
  for (int k = 0; k < K; ++k) {
    const Matrix d_in = k > 0 ? b.d1_map(k - 1, 0) : Matrix(b.dim(0, 0), 0);
    const Index h = cohomology_dim(d_in, b.d1_map(k, 0));
    row0[std::to_string(k)] = h;
    if (h != (k == 0 ? 1 : 0)) {
      row0_ok = false;
      failures.push_back(Report{{"k", k}, {"l", 0}, {"dim", h}});
    }
  }
  Report out{{"claim", "thm3:" + algebra->name() + ":K=" + std::to_string(K) + ":L=" + std::to_string(L)},
             {"column_cohomology", columns},
             {"row0_cohomology", row0},
             {"row0_is_C_at_0", row0_ok},
             {"failures", failures},
             {"status", failures.empty() ? "PASS" : "FAIL"}};
  if (include_table) out["window_table"] = table_json(total_cohomology(b, parallelism));
  return out;
}

Report verify_sv0_cohomology(int n, int p, int q, int parallelism) {
  if (n < 1 || p < 0 || q < 0) throw std::invalid_argument("verify_sv0_cohomology: need n >= 1, p, q >= 0");
  const AlgebraPtr sv0 = truncated_polynomial_algebra(n, std::max({p, q, 1}));
  const Bicomplex b = Bicomplex::assemble(sv0, BidegreeWindow{p, q}, parallelism);
  const CohomologyTable table = total_cohomology(b, parallelism);
  const Index expected = binomial(n, p) * binomial(n, q);

  bool dims_ok = true;
  for (const auto& [i, d] : table.by_total_degree) {
    dims_ok = dims_ok && d == (i == p - q ? expected : 0);
  }
  if (!table.by_total_degree.contains(p - q) && expected != 0) dims_ok = false;

  Report reps = Report::object();
  bool reps_ok = true;
  if (p <= n && q <= n) {
    const auto r = clifford_representatives(sv0, p, q);
    const Index independent = independent_classes(b, r);
    reps_ok = independent == static_cast<Index>(r.size()) && independent == expected;
    reps = Report{{"count", r.size()}, {"independent", independent}};
  }
  Report out = table_json(table);
  out["claim"] = "thm4:n=" + std::to_string(n) + ":p=" + std::to_string(p) + ":q=" + std::to_string(q);
  out["expected"] = Report{{"degree", p - q}, {"dim", expected}};
  out["representatives"] = reps;
  out["status"] = dims_ok && reps_ok ? "PASS" : "FAIL";
  return out;
}

namespace {

Report component_json(const MultilinearOp& op) {
  Report r{{"k", op.k()}, {"l", op.l()}, {"nonzeros", op.matrix().nonZeros()}};
  const auto entries = op.entries();
  if (!entries.empty()) {
    const auto& e = entries.front();
    r["witness"] = Report{{"in", e.in}, {"out", e.out}, {"value", to_string(e.value)}};
  }
  return r;
}

}  // namespace

Report mc_check(const std::vector<WeightedOp>& gamma, const AlgebraPtr& algebra, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("mc_check: cutoff must be non-negative");
  std::map<int, OpSum> by_weight;
  for (const auto& g : gamma) {
    if (g.weight < 0) throw std::invalid_argument("mc_check: weights must be non-negative");
    for (const auto& [key, op] : g.op.components()) {
      if (op.degree() != 1) {
        throw DegreeViolation("mc_check: component (" + std::to_string(op.k()) + "," + std::to_string(op.l()) +
                              ") has total degree " + std::to_string(op.degree()) + ", expected 1");
      }
      if (!same_algebra(op.algebra(), *algebra)) throw OperatorError("mc_check: algebra mismatch");
    }
    by_weight[g.weight] += g.op;
  }
  const OpSum m(multiplication_op(algebra));
  Report weights = Report::array();
  bool holds = true;
  for (int w = 0; w <= cutoff; ++w) {
    OpSum residual;
    if (auto it = by_weight.find(w); it != by_weight.end()) residual += bracket(m, it->second);
    OpSum quadratic;
    for (const auto& [a, ga] : by_weight) {
      auto it = by_weight.find(w - a);
      if (it != by_weight.end()) quadratic += bracket(ga, it->second);
    }
    residual += Rational(1, 2) * quadratic;
    Report comps = Report::array();
    for (const auto& [key, op] : residual.components()) comps.push_back(component_json(op));
    holds = holds && residual.is_zero();
    weights.push_back(Report{{"weight", w}, {"residual", comps}, {"holds", residual.is_zero()}});
  }
  return Report{{"claim", "mc:" + algebra->name() + ":cutoff=" + std::to_string(cutoff)},
                {"weights", weights},
                {"status", holds ? "PASS" : "FAIL"}};
}

MultilinearOp associativity_defect(const MultilinearOp& gamma) {
  if (gamma.k() != 2 || gamma.l() != 1) throw OperatorError("associativity_defect: expected a (2,1) operator");
  const AlgebraPtr& a = gamma.algebra_ptr();
  const MultilinearOp mu = multiplication_op(a) + gamma;
  const Matrix mu_id = embed(mu, 0, 1);
  const Matrix id_mu = embed(mu, 1, 0);
  Matrix left = mu.matrix() * id_mu;
  Matrix right = mu.matrix() * mu_id;
  Matrix defect = left - right;
  return MultilinearOp(a, 3, 1, std::move(defect));
}

MultilinearOp lie_poisson_cochain(const AlgebraPtr& sv0, const LieStructure& g, const Rational& scale) {
  const Algebra& a = *sv0;
  if (!a.monomials() || !a.truncation_degree()) throw std::invalid_argument("lie_poisson_cochain: needs a polynomial algebra");
  const auto& monos = *a.monomials();
  const int n = static_cast<int>(monos.front().size());
  if (n != g.n) throw std::invalid_argument("lie_poisson_cochain: variable count differs from the Lie dimension");
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);

  std::vector<OpEntry> entries;
  for (int f = 0; f < a.dim(); ++f) {
    for (int h = 0; h < a.dim(); ++h) {
      const auto& alpha = monos[static_cast<std::size_t>(f)];
      const auto& beta = monos[static_cast<std::size_t>(h)];
      for (int i = 0; i < n; ++i) {
        if (alpha[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (beta[static_cast<std::size_t>(j)] == 0) continue;
          for (int k = 0; k < n; ++k) {
            const Rational c = g.coeff(i, j, k);
            if (c == 0) continue;
            std::vector<int> e(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
              const auto u = static_cast<std::size_t>(v);
              e[u] = alpha[u] + beta[u] - (v == i) - (v == j) + (v == k);
            }
            auto it = index.find(e);
            if (it == index.end()) continue;  // above the truncation
            const Rational value = scale * c * alpha[static_cast<std::size_t>(i)] * beta[static_cast<std::size_t>(j)];
            entries.push_back({{f, h}, {it->second}, value});
          }
        }
      }
    }
  }
  return MultilinearOp::from_entries(sv0, 2, 1, entries);
}

}  // namespace hochkit
