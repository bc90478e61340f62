#pragma once

// JSON documents for algebras and operators, and plain-text renderings of
// reports.

#include "hochkit/structures.hpp"

#include <string>
#include <string_view>

namespace hochkit {

/// { "name", "basis", "mult": [[i, j, k, "num/den"]...], "unit", "grading",
/// "truncation_degree" }. Throws AlgebraError(MalformedSpec) on bad shape.
AlgebraSpec algebra_spec_from_json(const Report& doc);
Report algebra_to_json(const Algebra& algebra);

/// Reads a JSON file. Throws AlgebraError(MalformedSpec) if unreadable.
Report read_json_file(const std::string& path);

/// A builtin name, or otherwise a path to an algebra document.
AlgebraPtr resolve_algebra(std::string_view name_or_path);

/// { "k", "l", "entries": [[in, out, "num/den"]...] }.
Report op_to_json(const MultilinearOp& op);
MultilinearOp op_from_json(const AlgebraPtr& algebra, const Report& doc);

/// A single operator document or an array of them.
OpSum opsum_from_json(const AlgebraPtr& algebra, const Report& doc);
Report opsum_to_json(const OpSum& sum);

/// Aligned "key  value" lines; nested objects are flattened with dots.
std::string report_text(const Report& report);

/// Aligned columns: degree, dimension, reliable.
std::string table_text(const CohomologyTable& table);

}  // namespace hochkit
