#include "fqdist/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "fqdist/error.hpp"
#include "json.hpp"

namespace fqdist {
namespace {

std::vector<std::uint64_t> parse_line(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() ||
        (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected a nonnegative integer in '" +
                                        std::string(line) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

PointSet parse_pointset(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  // Trailing blank lines are tolerated.
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string_view::npos) {
    lines.pop_back();
  }
  if (lines.empty()) throw Error(Errc::ParseError, "line 1: missing header 'q s n'");

  auto header = parse_line(lines[0], 1);
  if (header.size() != 3) throw Error(Errc::ParseError, "line 1: header must be 'q s n'");
  const std::uint64_t q = header[0], s = header[1], n = header[2];
  if (q < 2 || q > UINT32_MAX || s < 1 || s > 64) {
    throw Error(Errc::ParseError, "line 1: unsupported q or s");
  }
  if (lines.size() - 1 != n) {
    throw Error(Errc::ParseError, "line " + std::to_string(lines.size() + 1) + ": header promises " +
                                      std::to_string(n) + " points, found " +
                                      std::to_string(lines.size() - 1));
  }
  Shape shape = Shape::make(static_cast<std::uint32_t>(q), static_cast<int>(s));
  std::vector<std::uint64_t> indices;
  indices.reserve(n);
  std::vector<FieldElement> point(s);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto values = parse_line(lines[i], i + 1);
    if (values.size() != s) {
      throw Error(Errc::ParseError, "line " + std::to_string(i + 1) + ": expected " +
                                        std::to_string(s) + " coordinates, got " +
                                        std::to_string(values.size()));
    }
    for (std::size_t k = 0; k < s; ++k) {
      if (values[k] >= q) {
        throw Error(Errc::CoordinateOutOfRange, "line " + std::to_string(i + 1) + ": coordinate " +
                                                    std::to_string(values[k]) + " not in [0, " +
                                                    std::to_string(q) + ")");
      }
      point[k] = static_cast<FieldElement>(values[k]);
    }
    indices.push_back(shape.encode(point));
  }
  std::vector<std::uint64_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    std::size_t first = 0, second = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (indices[i] != *dup) continue;
      if (first == 0) {
        first = i + 2;
      } else {
        second = i + 2;
        break;
      }
    }
    throw Error(Errc::DuplicatePoint, "line " + std::to_string(second) + " repeats line " +
                                          std::to_string(first));
  }
  return PointSet::from_indices(static_cast<std::uint32_t>(q), static_cast<int>(s),
                                std::move(indices));
}

std::string format_pointset(const PointSet& set) {
  std::string out = std::to_string(set.q()) + " " + std::to_string(set.s()) + " " +
                    std::to_string(set.size()) + "\n";
  for (std::uint64_t i = 0; i < set.size(); ++i) {
    auto p = set.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(p[k]);
    }
    out += '\n';
  }
  return out;
}

PointSet read_pointset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_pointset(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void write_pointset(const PointSet& set, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << format_pointset(set);
  if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string report_to_json(const LemmaReport& report) {
  nlohmann::ordered_json j;
  j["lemma_id"] = report.lemma_id;
  j["hypothesis_met"] = report.hypothesis_met;
  j["lhs"] = report.lhs;
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.rhs_terms) terms[name] = value;
  j["rhs_terms"] = std::move(terms);
  j["explicit_pass"] = report.explicit_pass ? nlohmann::ordered_json(*report.explicit_pass)
                                            : nlohmann::ordered_json(nullptr);
  j["measured_constant"] = report.measured_constant
                               ? nlohmann::ordered_json(*report.measured_constant)
                               : nlohmann::ordered_json(nullptr);
  j["notes"] = report.notes;
  return j.dump();
}

}  // namespace fqdist
