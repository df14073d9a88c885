#include "horo/record.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "horo/chern.hpp"
#include "horo/errors.hpp"

namespace horo {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kColumns[] = {
    "descriptor", "kind",     "c1_X",     "c1_Y",           "c1_Z",         "codim_Y",
    "codim_Z",    "dim_X",    "dim_Y",    "dim_Z",          "ch2_SY",       "ch2_SZ",
    "two_fano",   "tangent_stable", "k_polystable", "checks", "rule"};

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Cells in column order; nullopt renders empty in CSV and "-" in tables.
std::vector<std::optional<std::string>> cells(const OutputRecord& r) {
  std::vector<std::optional<std::string>> out;
  out.emplace_back(r.descriptor);
  out.emplace_back(r.kind);
  auto inv = [&](std::int64_t InvariantRecord::*field) -> std::optional<std::string> {
    if (!r.invariants) return std::nullopt;
    return std::to_string((*r.invariants).*field);
  };
  out.push_back(inv(&InvariantRecord::c1_x));
  out.push_back(inv(&InvariantRecord::c1_y));
  out.push_back(inv(&InvariantRecord::c1_z));
  out.push_back(inv(&InvariantRecord::codim_y));
  out.push_back(inv(&InvariantRecord::codim_z));
  out.push_back(inv(&InvariantRecord::dim_x));
  out.push_back(inv(&InvariantRecord::dim_y));
  out.push_back(inv(&InvariantRecord::dim_z));
  auto rat = [](const std::optional<Rational>& q) -> std::optional<std::string> {
    if (!q) return std::nullopt;
    return to_string(*q);
  };
  auto flag = [](const std::optional<bool>& b) -> std::optional<std::string> {
    if (!b) return std::nullopt;
    return bool_text(*b);
  };
  out.push_back(rat(r.ch2_sy));
  out.push_back(rat(r.ch2_sz));
  out.push_back(flag(r.two_fano));
  out.push_back(flag(r.tangent_stable));
  out.push_back(flag(r.k_polystable));
  out.push_back(r.checks);
  out.push_back(r.rule);
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void fill_horospherical(Evaluation& e, const HorosphericalFamily& f, bool with_ch2) {
  e.record.invariants = invariants(f);
  const CheckReport table = cross_check_reference(f);
  e.report.columns.insert(e.report.columns.end(), table.columns.begin(), table.columns.end());
  if (with_ch2) {
    const Ch2Report ch2 = ch2_surfaces(f);
    e.record.ch2_sy = ch2.ch2_dot_sy;
    e.record.ch2_sz = ch2.ch2_dot_sz;
    const CheckReport closed = closed_form_check(f);
    e.report.columns.insert(e.report.columns.end(), closed.columns.begin(),
                            closed.columns.end());
  }
  e.record.checks = e.report.passed() ? "pass" : "fail";
}

void apply_verdict(OutputRecord& r, const Verdict& v) {
  r.two_fano = v.two_fano;
  r.rule = v.rule;
  r.tangent_stable = v.tangent_stable;
  r.k_polystable = v.k_polystable;
}

std::optional<std::string> column_value(const OutputRecord& r, const std::string& column) {
  static const std::vector<std::string> names(std::begin(kColumns), std::end(kColumns));
  const auto it = std::find(names.begin(), names.end(), column);
  if (it == names.end() || column == "descriptor" || column == "kind" || column == "rule" ||
      column == "checks")
    throw ParseError("unknown expectation column '" + column + "'");
  return cells(r)[static_cast<std::size_t>(it - names.begin())];
}

// Canonical text for comparison: rationals reduced, booleans lower-case.
std::string canonical_value(const std::string& column, const std::string& raw) {
  if (column == "two_fano" || column == "tangent_stable" || column == "k_polystable") {
    if (raw == "true" || raw == "false") return raw;
    throw ParseError("bad boolean '" + raw + "' for column " + column);
  }
  return to_string(parse_rational(raw));
}

template <class T>
std::optional<T> opt_get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  if (j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

Evaluation evaluate_invariants(const HorosphericalFamily& f) {
  Evaluation e;
  e.report.subject = f.descriptor();
  e.record.descriptor = f.descriptor();
  e.record.kind = "horospherical";
  fill_horospherical(e, f, false);
  return e;
}

Evaluation evaluate_classification(const ClassifiedVariety& v) {
  Evaluation e;
  e.report.subject = descriptor(v);
  e.record.descriptor = descriptor(v);
  e.record.kind = kind_name(v);
  if (const auto* f = std::get_if<HorosphericalFamily>(&v)) fill_horospherical(e, *f, true);
  apply_verdict(e.record, classify(v));
  return e;
}

OutputRecord make_record(const Classified& entry) {
  OutputRecord r;
  r.descriptor = descriptor(entry.first);
  r.kind = kind_name(entry.first);
  if (const auto* f = std::get_if<HorosphericalFamily>(&entry.first)) {
    Evaluation e;
    e.report.subject = r.descriptor;
    fill_horospherical(e, *f, true);
    r.invariants = e.record.invariants;
    r.ch2_sy = e.record.ch2_sy;
    r.ch2_sz = e.record.ch2_sz;
    r.checks = e.record.checks;
    require_consistent(e.report);
  }
  apply_verdict(r, entry.second);
  return r;
}

void apply_expectations(Evaluation& e, std::string_view expectations) {
  std::string text(expectations);
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw ParseError("bad expectation '" + item + "', want column=value");
    const std::string column = item.substr(0, eq);
    const std::string expected = canonical_value(column, item.substr(eq + 1));
    const auto actual = column_value(e.record, column);
    if (!actual)
      throw DomainError("column " + column + " is not available for " + e.record.descriptor);
    e.report.add(column, *actual, expected);
  }
  if (e.record.checks || !e.report.columns.empty())
    e.record.checks = e.report.passed() ? "pass" : "fail";
}

std::string to_json_line(const OutputRecord& r) {
  Json j;
  j["descriptor"] = r.descriptor;
  j["kind"] = r.kind;
  if (r.invariants) {
    const auto& i = *r.invariants;
    j["invariants"] = Json{{"c1_X", i.c1_x},       {"c1_Y", i.c1_y},    {"c1_Z", i.c1_z},
                           {"codim_Y", i.codim_y}, {"codim_Z", i.codim_z}, {"dim_X", i.dim_x},
                           {"dim_Y", i.dim_y},     {"dim_Z", i.dim_z}};
  } else {
    j["invariants"] = nullptr;
  }
  auto put = [&](const char* key, const auto& value) {
    if (value) j[key] = *value;
    else j[key] = nullptr;
  };
  j["ch2_SY"] = r.ch2_sy ? Json(to_string(*r.ch2_sy)) : Json(nullptr);
  j["ch2_SZ"] = r.ch2_sz ? Json(to_string(*r.ch2_sz)) : Json(nullptr);
  put("two_fano", r.two_fano);
  put("rule", r.rule);
  put("tangent_stable", r.tangent_stable);
  put("k_polystable", r.k_polystable);
  put("checks", r.checks);
  return j.dump();
}

OutputRecord parse_json_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("invalid JSON record: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError("JSON record must be an object");
  try {
    OutputRecord r;
    r.descriptor = j.at("descriptor").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    if (!j.contains("invariants")) throw ParseError("missing key 'invariants'");
    if (!j["invariants"].is_null()) {
      const auto& i = j["invariants"];
      InvariantRecord inv;
      inv.c1_x = i.at("c1_X").get<std::int64_t>();
      inv.c1_y = i.at("c1_Y").get<std::int64_t>();
      inv.c1_z = i.at("c1_Z").get<std::int64_t>();
      inv.codim_y = i.at("codim_Y").get<std::int64_t>();
      inv.codim_z = i.at("codim_Z").get<std::int64_t>();
      inv.dim_x = i.at("dim_X").get<std::int64_t>();
      inv.dim_y = i.at("dim_Y").get<std::int64_t>();
      inv.dim_z = i.at("dim_Z").get<std::int64_t>();
      r.invariants = inv;
    }
    if (auto s = opt_get<std::string>(j, "ch2_SY")) r.ch2_sy = parse_rational(*s);
    if (auto s = opt_get<std::string>(j, "ch2_SZ")) r.ch2_sz = parse_rational(*s);
    r.two_fano = opt_get<bool>(j, "two_fano");
    r.rule = opt_get<std::string>(j, "rule");
    r.tangent_stable = opt_get<bool>(j, "tangent_stable");
    r.k_polystable = opt_get<bool>(j, "k_polystable");
    r.checks = opt_get<std::string>(j, "checks");
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("JSON record does not match schema: ") + ex.what());
  }
}

std::string csv_header() {
  std::string out;
  for (const char* c : kColumns) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string to_csv_row(const OutputRecord& r) {
  std::string out;
  bool first = true;
  for (const auto& cell : cells(r)) {
    if (!first) out += ',';
    first = false;
    if (cell) out += csv_escape(*cell);
  }
  return out;
}

std::string format_records(const std::vector<OutputRecord>& records, OutputFormat format) {
  if (records.empty()) return {};
  std::string out;
  switch (format) {
    case OutputFormat::JsonLines:
      for (const auto& r : records) out += to_json_line(r) + '\n';
      return out;
    case OutputFormat::Csv:
      out = csv_header() + '\n';
      for (const auto& r : records) out += to_csv_row(r) + '\n';
      return out;
    case OutputFormat::Table: {
      std::vector<std::vector<std::string>> rows;
      rows.emplace_back(std::begin(kColumns), std::end(kColumns));
      for (const auto& r : records) {
        std::vector<std::string> row;
        for (const auto& cell : cells(r)) row.push_back(cell.value_or("-"));
        rows.push_back(std::move(row));
      }
      std::vector<std::size_t> width(rows.front().size(), 0);
      for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
          line += row[c];
          if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += line + '\n';
      }
      return out;
    }
  }
  return out;
}

}  // namespace horo
