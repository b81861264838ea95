#ifndef LINES_REPORT_IO_HPP
#define LINES_REPORT_IO_HPP

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "lines/invariants.hpp"

namespace lines::io {

using Json = nlohmann::ordered_json;

struct ViewOptions {
  /// When false the mirror field is emitted as null even if present.
  bool show_mirror = true;
};

/// {"ambient_dim", "hypersurface_degree", "insertions", "dimension_ok",
///  "residue_value", "schubert_value", "engines_agree", "mirror"}.
/// Big integers are decimal strings.
Json to_json(const InvariantReport& r, const ViewOptions& view = {});
Json to_json(std::span<const InvariantReport> reports, const ViewOptions& view = {});

/// Inverse of to_json; throws nlohmann::json::exception or InputError on
/// malformed input.
InvariantReport report_from_json(const Json& j);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& j);

void write_table(std::ostream& out, std::span<const InvariantReport> reports, const ViewOptions& view = {});

}  // namespace lines::io

#endif  // LINES_REPORT_IO_HPP
