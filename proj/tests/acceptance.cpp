// One line per acceptance criterion: "criterion N: PASS|FAIL (<seconds>s / <limit>s) detail".
// Exit status is the number of failing criteria.

#include "hochkit/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace hochkit;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok;
  std::string detail;
};

int parallelism() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 4U));
}

bool passed(const Report& r) { return r.value("status", "") == "PASS"; }

Outcome oracle_identity() {
  const Report r = oracle_identity_suite(kSeed, 200, parallelism());
  return {passed(r) && r["instances"] == 200,
          std::to_string(r["instances"].get<int>()) + " pairs, " + std::to_string(r["failure_count"].get<int>()) + " failures"};
}

Outcome dg_lie() {
  const Report r = lie_suite(kSeed, 100, parallelism());
  const Report& det = r["m_self_bracket"];
  const bool detectors = det["C"] == "zero" && det["dual"] == "zero" && det["sq0-n2"] == "zero" &&
                         det["poly0-n2-D2"] == "zero" && det["dual~perturbed(0,1,1)+1"] != "zero";
  return {passed(r) && detectors && r["instances"] == 100,
          std::to_string(r["instances"].get<int>()) + " triples, " + std::to_string(r["failure_count"].get<int>()) +
              " failures, detector " + (detectors ? "ok" : "wrong")};
}

Outcome bidifferential() {
  const Report r = bidifferential_suite(kSeed, 200, parallelism());
  return {passed(r) && r["instances"] == 200,
          std::to_string(r["instances"].get<int>()) + " operators, " +
              std::to_string(r["failure_count"].get<int>()) + " failures"};
}

Outcome classical() {
  const Report r = classical_recovery_suite(kSeed, parallelism());
  return {passed(r), std::to_string(r["instances"].get<int>()) + " oracle comparisons, " +
                         std::to_string(r["failure_count"].get<int>()) + " failures"};
}

// Homology of 0 <- C <- A <- A^2 <- ... away from the C spot.
bool bar_exact(const AlgebraPtr& a, int top) {
  const auto bar = bar_complex(a, top);
  for (int l = 1; l < top; ++l) {
    if (cohomology_dim(bar[static_cast<std::size_t>(l)], bar[static_cast<std::size_t>(l - 1)]) != 0) return false;
  }
  return true;
}

Outcome column_exactness() {
  bool ok = true;
  std::ostringstream os;
  for (const char* name : {"C", "dual"}) {
    const AlgebraPtr a = builtin_algebra(name);
    const Report r = verify_unital_vanishing(a, 4, 5, parallelism());
    const bool bar = bar_exact(a, 6);
    ok = ok && passed(r) && bar;
    if (os.tellp() > 0) os << "; ";
    os << name << ": columns " << r["status"].get<std::string>() << ", bar " << (bar ? "exact" : "NOT exact");
  }
  return {ok, os.str()};
}

Outcome sv0_grid() {
  bool ok = true;
  int runs = 0, failures = 0;
  std::ostringstream os;
  for (int n = 1; n <= 2; ++n) {
    std::map<int, Index> computed, expected;
    for (int p = 0; p <= 3; ++p) {
      for (int q = 0; q <= 3; ++q) {
        const bool in_grid = n == 1 || (p <= 2 && q <= 2) || (p == 3 && q == 1) || (p == 1 && q == 3);
        if (!in_grid) continue;
        const Report r = verify_sv0_cohomology(n, p, q, parallelism());
        ++runs;
        if (!passed(r)) ++failures;
        for (const auto& [i, d] : r["by_total_degree"].items()) computed[std::stoi(i)] += d.get<Index>();
        expected[p - q] += binomial(n, p) * binomial(n, q);
      }
    }
    for (auto& [i, d] : expected) {
      if (computed[i] != d) ok = false;
    }
    for (const auto& [i, d] : computed) {
      if (d != expected[i]) ok = false;
    }
    for (const auto& [i, d] : clifford_table(n).total_by_degree) {
      if (expected[i] != d) ok = false;
    }
  }
  ok = ok && failures == 0;
  os << runs << " bidegrees, " << failures << " failures, totals " << (ok ? "match" : "differ");
  return {ok, os.str()};
}

Outcome clifford() {
  const Report one = clifford_bracket_table(1, 1, parallelism());
  const Report two = clifford_bracket_table(2, 1, parallelism());
  std::ostringstream os;
  os << "n=1: " << one["mismatches"].get<int>() << "/" << one["pair_count"].get<int>() << " mismatches, n=2: "
     << two["mismatches"].get<int>() << "/" << two["pair_count"].get<int>() << " mismatches";
  return {one["status"] == "MATCH" && two["status"] == "MATCH", os.str()};
}

Outcome toolkit() {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    const auto b = betti_numbers(zero_q_complex(n));
    for (int i = 0; i <= n; ++i) ok = ok && b[static_cast<std::size_t>(i)] == binomial(n, i);
  }
  for (const char* name : {"abelian1", "abelian2", "abelian3", "nonabelian2"}) {
    ok = ok && passed(q_complex_check(ce_differential(builtin_lie(name))));
  }
  ok = ok && betti_numbers(ce_differential(builtin_lie("nonabelian2"))) == std::vector<Index>{1, 1, 0};
  const Report r = toolkit_suite(kSeed, 50);
  const bool suite = passed(r) && r["gauge"]["invariant"] == 50 && r["mc_gutt_first_order"]["status"] == "PASS" &&
                     r["mc_generic_perturbation"]["status"] == "FAIL";
  return {ok && suite, std::string("betti/euler ") + (ok ? "ok" : "wrong") + ", gauge " +
                           std::to_string(r["gauge"]["invariant"].get<int>()) + "/50, gutt " +
                           r["mc_gutt_first_order"]["status"].get<std::string>() + ", generic " +
                           r["mc_generic_perturbation"]["status"].get<std::string>()};
}

Outcome determinism() {
  const std::string first = full_report(kSeed, 1).dump();
  const std::string second = full_report(kSeed, parallelism()).dump();
  return {first == second, std::to_string(first.size()) + " bytes, " + (first == second ? "identical" : "differ")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 120, oracle_identity}, {2, 120, dg_lie},  {3, 120, bidifferential}, {4, 60, classical},
      {5, 60, column_exactness}, {6, 300, sv0_grid}, {7, 300, clifford},      {8, 60, toolkit},
      {9, 0, determinism},
  };
  int failing = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.ok && (c.limit <= 0 || secs <= c.limit);
    if (!ok) ++failing;
    if (c.limit > 0) {
      std::printf("criterion %d: %s (%.2fs / %.0fs) %s\n", c.id, ok ? "PASS" : "FAIL", secs, c.limit, o.detail.c_str());
    } else {
      std::printf("criterion %d: %s (%.2fs) %s\n", c.id, ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    }
    std::fflush(stdout);
  }
  return failing;
}
