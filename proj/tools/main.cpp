#include "hochkit/serialize.hpp"
#include "hochkit/suites.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

using namespace hochkit;

namespace {

struct Options {
  std::string format = "json";
  std::uint64_t seed = 1;
  int parallelism = 1;
};

// Invalid input anywhere below maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const Options& opt, const Report& report, const std::string& text = {}) {
  if (opt.format == "table") {
    std::cout << (text.empty() ? report_text(report) : text);
  } else {
    std::cout << report.dump(2) << '\n';
  }
  const std::string status = report.value("status", "PASS");
  return status == "PASS" ? 0 : 1;
}

Report read_doc(const std::string& path) {
  try {
    return read_json_file(path);
  } catch (const AlgebraError& e) {
    throw InputError(e.what());
  }
}

Matrix dense_rows_to_matrix(const Report& rows, Index expect_rows, Index expect_cols, int index) {
  if (!rows.is_array()) throw InputError("map " + std::to_string(index) + " must be an array of rows");
  std::vector<Triplet> t;
  Index r = 0;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<Index>(row.size()) != expect_cols) {
      throw ShapeMismatch("Q_" + std::to_string(index) + " must have " + std::to_string(expect_cols) + " columns");
    }
    for (Index c = 0; c < expect_cols; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      const Rational x = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>());
      if (x != 0) t.emplace_back(r, c, x);
    }
    ++r;
  }
  if (r != expect_rows) {
    throw ShapeMismatch("Q_" + std::to_string(index) + " must have " + std::to_string(expect_rows) + " rows");
  }
  return make_matrix(expect_rows, expect_cols, t);
}

// { "n": n, "maps": [Q_0 rows, Q_1 rows, ...] } with dense rational rows.
QComplex q_from_json(const Report& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("maps")) {
    throw InputError("Q-complex document needs \"n\" and \"maps\"");
  }
  QComplex q{doc["n"].get<int>(), {}};
  if (!doc["maps"].is_array() || static_cast<int>(doc["maps"].size()) != q.n) {
    throw ShapeMismatch("Q-complex with n = " + std::to_string(q.n) + " needs " + std::to_string(q.n) + " maps");
  }
  for (int i = 0; i < q.n; ++i) {
    q.maps.push_back(dense_rows_to_matrix(doc["maps"][static_cast<std::size_t>(i)], binomial(q.n, i + 1),
                                          binomial(q.n, i), i));
  }
  return q;
}

// A builtin name or a file { "n": n, "c": [[i, j, k, "num/den"], ...] }.
LieStructure resolve_lie(const std::string& name_or_path) {
  try {
    return builtin_lie(name_or_path);
  } catch (const std::invalid_argument&) {
  }
  const Report doc = read_doc(name_or_path);
  if (!doc.contains("n") || !doc.contains("c")) throw InputError("Lie document needs \"n\" and \"c\"");
  LieStructure g{doc["n"].get<int>(), {}};
  for (const auto& e : doc["c"]) {
    if (!e.is_array() || e.size() != 4) throw InputError("each \"c\" entry must be [i, j, k, \"num/den\"]");
    const Rational v = e[3].is_string() ? parse_rational(e[3].get<std::string>()) : Rational(e[3].get<long long>());
    g.set(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), v);
  }
  return g;
}

std::vector<WeightedOp> gamma_from_json(const AlgebraPtr& a, const Report& doc) {
  // Either an operator (weight 0), an array of operators (weight 0), or an
  // array of { "weight": w, "op": operator-or-array }.
  std::vector<WeightedOp> out;
  if (doc.is_array() && !doc.empty() && doc.front().contains("weight")) {
    for (const auto& w : doc) out.push_back({w["weight"].get<int>(), opsum_from_json(a, w["op"])});
  } else {
    out.push_back({0, opsum_from_json(a, doc)});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bicomplex, bracket and cohomology computations for associative algebras."};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", opt.seed, "Seed for randomized suites");
  app.add_option("--parallelism", opt.parallelism, "Worker threads")->check(CLI::PositiveNumber);

  std::string algebra_name, f_path, g_path, op_path, gamma_path, q_path, lie_name;
  int K = -1, L = -1, p = -1, q = -1, n = -1, bound = 1, count = -1, cutoff = 0, zero_n = -1;
  std::function<int()> action;

  auto* algebra_cmd = app.add_subcommand("algebra", "Algebra utilities");
  algebra_cmd->require_subcommand(1);
  auto* algebra_check = algebra_cmd->add_subcommand("check", "Validate an algebra spec or builtin name");
  algebra_check->add_option("spec", algebra_name, "JSON file or builtin name")->required();
  algebra_check->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(algebra_name);
      Report r{{"claim", "algebra:" + a->name()},
               {"dim", a->dim()},
               {"unit", a->unit() ? Report(*a->unit()) : Report(nullptr)},
               {"graded", a->is_graded()},
               {"associative", true},
               {"m_self_bracket_zero", bracket(multiplication_op(a), multiplication_op(a)).is_zero()},
               {"status", "PASS"}};
      return emit(opt, r);
    };
  });

  auto* op_cmd = app.add_subcommand("op", "Operator arithmetic");
  op_cmd->require_subcommand(1);
  auto* op_bracket = op_cmd->add_subcommand("bracket", "Bracket of two operators");
  op_bracket->add_option("--algebra", algebra_name)->required();
  op_bracket->add_option("--f", f_path, "Operator JSON")->required();
  op_bracket->add_option("--g", g_path, "Operator JSON")->required();
  op_bracket->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(algebra_name);
      const OpSum f = opsum_from_json(a, read_doc(f_path));
      const OpSum g = opsum_from_json(a, read_doc(g_path));
      Report r{{"claim", "op:bracket"}, {"bracket", opsum_to_json(bracket(f, g))}, {"status", "PASS"}};
      return emit(opt, r);
    };
  });
  auto* op_diff = op_cmd->add_subcommand("diff", "d1, d2 and the bracket with m");
  op_diff->add_option("--algebra", algebra_name)->required();
  op_diff->add_option("--op", op_path, "Operator JSON")->required();
  op_diff->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(algebra_name);
      const MultilinearOp psi = op_from_json(a, read_doc(op_path));
      Report r{{"claim", "op:diff"}, {"d1", op_to_json(d1(psi))}};
      if (psi.l() >= 1) r["d2"] = op_to_json(d2(psi));
      if (psi.l() == 0) r["row0_coupling"] = op_to_json(row0_coupling(psi));
      bool ok = true;
      try {
        r["bracket_with_m"] = opsum_to_json(bracket_with_m_decomposition(a, psi));
      } catch (const std::logic_error& e) {
        ok = false;
        r["error"] = e.what();
      }
      r["status"] = ok ? "PASS" : "FAIL";
      return emit(opt, r);
    };
  });

  auto* complex_cmd = app.add_subcommand("complex", "Bicomplex computations");
  complex_cmd->require_subcommand(1);
  auto* cohomology = complex_cmd->add_subcommand("cohomology", "Total cohomology of a window");
  cohomology->add_option("--algebra", algebra_name)->required();
  cohomology->add_option("--K", K, "Rectangular window: max k");
  cohomology->add_option("--L", L, "Rectangular window: max l");
  cohomology->add_option("--p", p, "Bidegree window: input degree");
  cohomology->add_option("--q", q, "Bidegree window: output degree");
  cohomology->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(algebra_name);
      Window w;
      if (K >= 0 && L >= 0 && p < 0 && q < 0) {
        w = RectWindow{K, L};
      } else if (p >= 0 && q >= 0 && K < 0 && L < 0) {
        w = BidegreeWindow{p, q};
      } else {
        throw InputError("give either --K and --L or --p and --q");
      }
      const CohomologyTable t = total_cohomology(Bicomplex::assemble(a, w, opt.parallelism), opt.parallelism);
      Report r = table_json(t);
      r["claim"] = "cohomology:" + a->name() + ":" + describe(w);
      r["status"] = "PASS";
      return emit(opt, r, table_text(t));
    };
  });

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* v_bidiff = verify->add_subcommand("bidifferential", "d1, d2 identities and [m, psi] decomposition");
  v_bidiff->add_option("--count", count, "Random instances");
  v_bidiff->callback([&] {
    action = [&] { return emit(opt, bidifferential_suite(opt.seed, count < 0 ? 200 : count, opt.parallelism)); };
  });
  auto* v_oracles = verify->add_subcommand("oracles", "Oracle identity, dg Lie identities, classical oracles");
  v_oracles->add_option("--count", count, "Random instances per suite");
  v_oracles->callback([&] {
    action = [&] {
      Report r{{"claim", "oracles"}};
      r["oracle_identity"] = oracle_identity_suite(opt.seed, count < 0 ? 200 : count, opt.parallelism);
      r["dg_lie"] = lie_suite(opt.seed, count < 0 ? 100 : count, opt.parallelism);
      r["classical"] = classical_recovery_suite(opt.seed, opt.parallelism);
      const bool ok = r["oracle_identity"]["status"] == "PASS" && r["dg_lie"]["status"] == "PASS" &&
                      r["classical"]["status"] == "PASS";
      r["status"] = ok ? "PASS" : "FAIL";
      return emit(opt, r);
    };
  });
  auto* v_thm3 = verify->add_subcommand("thm3", "Vanishing for unital algebras");
  v_thm3->add_option("--algebra", algebra_name)->required();
  v_thm3->add_option("--K", K)->required();
  v_thm3->add_option("--L", L)->required();
  v_thm3->callback([&] {
    action = [&] {
      return emit(opt, verify_unital_vanishing(resolve_algebra(algebra_name), K, L, opt.parallelism, true));
    };
  });
  auto* v_thm4 = verify->add_subcommand("thm4", "Bidegree cohomology of S(V)_0");
  v_thm4->add_option("--n", n)->required();
  v_thm4->add_option("--p", p)->required();
  v_thm4->add_option("--q", q)->required();
  v_thm4->callback([&] { action = [&] { return emit(opt, verify_sv0_cohomology(n, p, q, opt.parallelism)); }; });
  auto* v_cliff = verify->add_subcommand("clifford-bracket", "Bracket table against the Clifford algebra");
  v_cliff->add_option("--n", n)->required();
  v_cliff->add_option("--bound", bound, "Max p and q of the generators");
  v_cliff->callback([&] { action = [&] { return emit(opt, clifford_bracket_table(n, bound, opt.parallelism)); }; });
  auto* v_all = verify->add_subcommand("all", "Every suite at desk scale");
  v_all->callback([&] {
    action = [&] {
      Report r = full_report(opt.seed, opt.parallelism);
      bool ok = true;
      for (const auto& [claim, rep] : r.items()) ok = ok && rep["status"] == "PASS";
      Report out{{"claim", "all"}, {"reports", r}, {"status", ok ? "PASS" : "FAIL"}};
      return emit(opt, out);
    };
  });

  auto* mc_cmd = app.add_subcommand("mc", "Maurer-Cartan residuals");
  mc_cmd->require_subcommand(1);
  auto* mc_check_cmd = mc_cmd->add_subcommand("check", "Check the Maurer-Cartan equation");
  mc_check_cmd->add_option("--algebra", algebra_name)->required();
  auto* gamma_opt = mc_check_cmd->add_option("--gamma", gamma_path, "Gamma JSON");
  mc_check_cmd->add_option("--gutt", lie_name, "Use the first-order Gutt term of a Lie structure")->excludes(gamma_opt);
  mc_check_cmd->add_option("--cutoff", cutoff, "Highest weight checked");
  mc_check_cmd->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(algebra_name);
      if (!lie_name.empty()) {
        const MultilinearOp b1 = lie_poisson_cochain(a, resolve_lie(lie_name), Rational(1, 2));
        return emit(opt, mc_check({{1, OpSum(b1)}}, a, std::max(cutoff, 1)));
      }
      if (gamma_path.empty()) throw InputError("give --gamma or --gutt");
      return emit(opt, mc_check(gamma_from_json(a, read_doc(gamma_path)), a, cutoff));
    };
  });

  auto* q_cmd = app.add_subcommand("q", "Q-complexes");
  q_cmd->require_subcommand(1);
  auto* q_check = q_cmd->add_subcommand("check", "Betti numbers and the Euler relation");
  auto* q_file = q_check->add_option("--maps", q_path, "Q-complex JSON");
  q_check->add_option("--zero", zero_n, "Zero complex on n generators")->excludes(q_file);
  q_check->callback([&] {
    action = [&] {
      if (zero_n >= 0) return emit(opt, q_complex_check(zero_q_complex(zero_n)));
      if (q_path.empty()) throw InputError("give --maps or --zero");
      return emit(opt, q_complex_check(q_from_json(read_doc(q_path))));
    };
  });

  auto* ce_cmd = app.add_subcommand("ce", "Chevalley-Eilenberg cohomology");
  ce_cmd->require_subcommand(1);
  auto* ce_betti = ce_cmd->add_subcommand("betti", "Betti numbers of a Lie algebra");
  ce_betti->add_option("--n", n, "Dimension (checked against the structure)");
  ce_betti->add_option("--lie", lie_name, "Builtin name or JSON file")->required();
  ce_betti->callback([&] {
    action = [&] {
      const LieStructure g = resolve_lie(lie_name);
      if (n >= 0 && n != g.n) throw InputError("--n does not match the Lie structure dimension");
      Report r = q_complex_check(ce_differential(g));
      r["claim"] = "ce-betti:" + lie_name;
      return emit(opt, r);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what();
    if (!e.witness().empty()) {
      std::cerr << " witness";
      for (int w : e.witness()) std::cerr << ' ' << w;
    }
    std::cerr << '\n';
    return 2;
  } catch (const JacobiFailure& e) {
    const auto& w = e.witness();
    std::cerr << "error: JacobiFailure: " << e.what() << " witness " << w[0] << ' ' << w[1] << ' ' << w[2] << '\n';
    return 2;
  } catch (const QNotAComplex& e) {
    std::cerr << "error: NotAComplex at i=" << e.index() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Report::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
