#include "hochkit/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hochkit {

namespace {

using K = AlgebraError::Kind;

[[noreturn]] void malformed(const std::string& what) { throw AlgebraError(K::MalformedSpec, what); }

Rational rational_field(const Report& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      malformed(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long long>());
  malformed(where + ": expected a \"num/den\" string or an integer");
}

int int_field(const Report& v, const std::string& where) {
  if (!v.is_number_integer()) malformed(where + ": expected an integer");
  return v.get<int>();
}

Word word_field(const Report& v, const std::string& where) {
  if (!v.is_array()) malformed(where + ": expected an array of basis indices");
  Word w;
  for (const auto& x : v) w.push_back(int_field(x, where));
  return w;
}

}  // namespace

AlgebraSpec algebra_spec_from_json(const Report& doc) {
  if (!doc.is_object()) malformed("algebra document must be a JSON object");
  AlgebraSpec spec;
  spec.name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "anonymous";
  if (!doc.contains("basis") || !doc["basis"].is_array()) malformed("algebra document needs a \"basis\" array");
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) malformed("basis labels must be strings");
    spec.basis.push_back(b.get<std::string>());
  }
  if (doc.contains("mult")) {
    if (!doc["mult"].is_array()) malformed("\"mult\" must be an array");
    for (const auto& t : doc["mult"]) {
      if (!t.is_array() || t.size() != 4) malformed("each \"mult\" entry must be [i, j, k, \"num/den\"]");
      spec.mult.push_back({int_field(t[0], "mult"), int_field(t[1], "mult"), int_field(t[2], "mult"),
                           rational_field(t[3], "mult")});
    }
  }
  if (doc.contains("unit") && !doc["unit"].is_null()) spec.unit = int_field(doc["unit"], "unit");
  if (doc.contains("grading") && !doc["grading"].is_null()) spec.grading = word_field(doc["grading"], "grading");
  if (doc.contains("truncation_degree") && !doc["truncation_degree"].is_null()) {
    spec.truncation_degree = int_field(doc["truncation_degree"], "truncation_degree");
  }
  return spec;
}

Report algebra_to_json(const Algebra& algebra) {
  Report mult = Report::array();
  for (const auto& c : algebra.structure_constants()) mult.push_back({c.i, c.j, c.k, to_string(c.value)});
  Report doc{{"name", algebra.name()}, {"basis", algebra.labels()}, {"mult", mult}};
  doc["unit"] = algebra.unit() ? Report(*algebra.unit()) : Report(nullptr);
  doc["grading"] = algebra.grading() ? Report(*algebra.grading()) : Report(nullptr);
  doc["truncation_degree"] = algebra.truncation_degree() ? Report(*algebra.truncation_degree()) : Report(nullptr);
  return doc;
}

Report read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open '" + path + "'");
  try {
    return Report::parse(in);
  } catch (const Report::parse_error& e) {
    malformed("'" + path + "' is not valid JSON: " + e.what());
  }
}

AlgebraPtr resolve_algebra(std::string_view name_or_path) {
  const std::string s(name_or_path);
  if (std::filesystem::exists(s)) return make_algebra(algebra_spec_from_json(read_json_file(s)));
  try {
    return builtin_algebra(s);
  } catch (const std::invalid_argument&) {
    malformed("'" + s + "' is neither a builtin algebra nor a readable file");
  }
}

Report op_to_json(const MultilinearOp& op) {
  Report entries = Report::array();
  for (const auto& e : op.entries()) entries.push_back({e.in, e.out, to_string(e.value)});
  return Report{{"k", op.k()}, {"l", op.l()}, {"entries", entries}};
}

MultilinearOp op_from_json(const AlgebraPtr& algebra, const Report& doc) {
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("l")) {
    throw OperatorError("operator document needs \"k\", \"l\" and \"entries\"");
  }
  const int k = int_field(doc["k"], "k");
  const int l = int_field(doc["l"], "l");
  std::vector<OpEntry> entries;
  if (doc.contains("entries")) {
    if (!doc["entries"].is_array()) throw OperatorError("\"entries\" must be an array");
    for (const auto& e : doc["entries"]) {
      if (!e.is_array() || e.size() != 3) throw OperatorError("each entry must be [in, out, \"num/den\"]");
      entries.push_back({word_field(e[0], "entry input"), word_field(e[1], "entry output"),
                         rational_field(e[2], "entry value")});
    }
  }
  return MultilinearOp::from_entries(algebra, k, l, entries);
}

OpSum opsum_from_json(const AlgebraPtr& algebra, const Report& doc) {
  OpSum out;
  if (doc.is_array()) {
    for (const auto& d : doc) out.add(op_from_json(algebra, d));
  } else {
    out.add(op_from_json(algebra, doc));
  }
  return out;
}

Report opsum_to_json(const OpSum& sum) {
  Report out = Report::array();
  for (const auto& [key, op] : sum.components()) out.push_back(op_to_json(op));
  return out;
}

namespace {

void flatten(const Report& r, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (r.is_object() && !r.empty()) {
    for (const auto& [key, value] : r.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (r.is_array() && !r.empty() && std::any_of(r.begin(), r.end(), [](const Report& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < r.size(); ++i) flatten(r[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, r.is_string() ? r.get<std::string>() : r.dump());
}

}  // namespace

std::string report_text(const Report& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  return os.str();
}

std::string table_text(const CohomologyTable& table) {
  std::ostringstream os;
  os << "window " << describe(table.window) << '\n';
  os << std::right << std::setw(8) << "degree" << std::setw(8) << "dim" << std::setw(10) << "reliable" << '\n';
  for (const auto& [i, d] : table.by_total_degree) {
    os << std::setw(8) << i << std::setw(8) << d << std::setw(10) << (table.reliable.contains(i) ? "yes" : "no")
       << '\n';
  }
  return os.str();
}

}  // namespace hochkit
