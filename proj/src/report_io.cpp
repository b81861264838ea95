#include "lines/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <vector>

namespace lines::io {

namespace {

BigInt parse_bigint(const Json& j) {
  const std::string s = j.get<std::string>();
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InputError("not a decimal integer: \"" + s + "\"");
  return v;
}

std::string insertions_text(const std::vector<int>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

}  // namespace

Json to_json(const InvariantReport& r, const ViewOptions& view) {
  Json j;
  j["ambient_dim"] = r.query.ambient;
  j["hypersurface_degree"] = r.query.degree;
  j["insertions"] = r.query.insertions;
  j["dimension_ok"] = r.dimension_ok;
  j["residue_value"] = r.residue_value.get_str();
  j["schubert_value"] = r.schubert_value ? Json(r.schubert_value->get_str()) : Json(nullptr);
  j["engines_agree"] = r.engines_agree ? Json(*r.engines_agree) : Json(nullptr);
  if (r.mirror && view.show_mirror) {
    Json m;
    m["w_ab"] = r.mirror->w_ab.get_str();
    m["w_total"] = r.mirror->w_total.get_str();
    m["difference"] = r.mirror->difference.get_str();
    j["mirror"] = std::move(m);
  } else {
    j["mirror"] = nullptr;
  }
  return j;
}

Json to_json(std::span<const InvariantReport> reports, const ViewOptions& view) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, view));
  return arr;
}

InvariantReport report_from_json(const Json& j) {
  InvariantReport r;
  r.query.ambient = j.at("ambient_dim").get<int>();
  r.query.degree = j.at("hypersurface_degree").get<int>();
  r.query.insertions = j.at("insertions").get<std::vector<int>>();
  r.dimension_ok = j.at("dimension_ok").get<bool>();
  r.residue_value = parse_bigint(j.at("residue_value"));
  if (!j.at("schubert_value").is_null()) r.schubert_value = parse_bigint(j.at("schubert_value"));
  if (!j.at("engines_agree").is_null()) r.engines_agree = j.at("engines_agree").get<bool>();
  if (const Json& m = j.at("mirror"); !m.is_null())
    r.mirror = MirrorBlock{parse_bigint(m.at("w_ab")), parse_bigint(m.at("w_total")), parse_bigint(m.at("difference"))};
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_table(std::ostream& out, std::span<const InvariantReport> reports, const ViewOptions& view) {
  const std::vector<std::string> header{"N", "k", "insertions", "dim", "residue", "schubert", "agree",
                                        "w_ab", "w_total", "difference"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    const bool mirror = r.mirror && view.show_mirror;
    rows.push_back({
        std::to_string(r.query.ambient),
        std::to_string(r.query.degree),
        insertions_text(r.query.insertions),
        r.dimension_ok ? "ok" : "no",
        r.residue_value.get_str(),
        r.schubert_value ? r.schubert_value->get_str() : "-",
        r.engines_agree ? (*r.engines_agree ? "yes" : "NO") : "-",
        mirror ? r.mirror->w_ab.get_str() : "-",
        mirror ? r.mirror->w_total.get_str() : "-",
        mirror ? r.mirror->difference.get_str() : "-",
    });
  }
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
    for (const auto& row : rows) widths[c] = std::max(widths[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << std::setw(static_cast<int>(widths[c])) << row[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

}  // namespace lines::io
