#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypercount/counting.hpp"
#include "hypercount/harness.hpp"
#include "hypercount/properties.hpp"
#include "hypercount/structure.hpp"

namespace hypercount {

// Every function returns pretty-printed JSON text with keys in a fixed order,
// so equal inputs always serialize to identical bytes.

std::string verdict_json(const Verdict& v);
std::string pseudo_verdict_json(const PseudoVerdict& v);
std::string profile_json(const StructureProfile& prof);
std::string count_report_json(const CountReport& report);

/// Array of run records (wall time excluded).
std::string records_json(const std::vector<RunRecord>& records);

/// Inverse of records_json. Throws Error(parse) on malformed input.
std::vector<RunRecord> records_from_json(std::string_view text);

/// Header plus one row per record in the given order. Columns: experiment,
/// seed, n, p, total, expected, relative_error, then one column per
/// assertion name in order of first appearance.
std::string records_csv(const std::vector<RunRecord>& records);

}  // namespace hypercount
