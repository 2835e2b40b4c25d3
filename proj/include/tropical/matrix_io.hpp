#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tropical/matrix.hpp"
#include "tropical/metric.hpp"

namespace tropical {

// Text format:
//
//   tmat 1
//   <rows> <cols>
//   <row 1 entries, whitespace separated>
//   ...
//
// Entries are integers, decimals ("-1.5") or fractions ("-3/2"); "-inf" only
// in extended matrices. Blank lines and lines starting with '#' are skipped.
// serialize() writes the canonical form, for which parse is the inverse.

TropMatrix parse_matrix(std::string_view text);
ExtMatrix parse_ext_matrix(std::string_view text);
TropMatrix read_matrix_file(const std::filesystem::path& path);
ExtMatrix read_ext_matrix_file(const std::filesystem::path& path);

std::string serialize(const TropMatrix& m);
std::string serialize(const ExtMatrix& m);

/// Rows as space-separated entries, no header. `decimal` is display only.
std::string format_rows(const TropMatrix& m, bool decimal = false);
std::string format_vector(const TropVector& v, bool decimal = false);

/// Comma-separated point, e.g. "0,-1/2,1.5".
TropVector parse_point(std::string_view text);

nlohmann::ordered_json to_json(const ClassificationReport& r);

}  // namespace tropical
