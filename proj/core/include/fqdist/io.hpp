#pragma once

#include <string>
#include <string_view>

#include "fqdist/lemma_lab.hpp"
#include "fqdist/pointset.hpp"

namespace fqdist {

// Point-set text format: a header line `q s n`, then n lines of s
// space-separated integers in [0, q). Duplicate points are rejected.
// Throws ParseError (with line number), DuplicatePoint, CoordinateOutOfRange.
PointSet parse_pointset(std::string_view text);
std::string format_pointset(const PointSet& set);

PointSet read_pointset(const std::string& path);
void write_pointset(const PointSet& set, const std::string& path);

// 17 significant digits, '.' decimal point, independent of locale.
std::string format_double(double v);

// One JSON object with the fixed fields lemma_id, hypothesis_met, lhs,
// rhs_terms, explicit_pass, measured_constant, notes.
std::string report_to_json(const LemmaReport& report);

}  // namespace fqdist
