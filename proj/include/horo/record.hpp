#pragma once

// The machine-readable record emitted for every classified variety, its
// serializations, and the expectation tripwire used to confirm claimed
// values.
//
// JSON-lines schema, one object per line, keys in this order:
//
//   descriptor      string, canonical descriptor
//   kind            "homogeneous" | "horospherical" | "linear_section" | "wci"
//   invariants      null | {c1_X, c1_Y, c1_Z, codim_Y, codim_Z, dim_X, dim_Y, dim_Z}
//   ch2_SY, ch2_SZ  null | exact rational string "p/q" or "p"
//   two_fano        null | bool
//   rule            null | rule ids joined by " + "
//   tangent_stable  null | bool
//   k_polystable    null | bool
//   checks          null | "pass" | "fail"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "horo/checks.hpp"
#include "horo/classification.hpp"
#include "horo/rational.hpp"

namespace horo {

struct OutputRecord {
  std::string descriptor;
  std::string kind;
  std::optional<InvariantRecord> invariants;
  std::optional<Rational> ch2_sy;
  std::optional<Rational> ch2_sz;
  std::optional<bool> two_fano;
  std::optional<std::string> rule;
  std::optional<bool> tangent_stable;
  std::optional<bool> k_polystable;
  std::optional<std::string> checks;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// A record together with every consistency check run while building it.
struct Evaluation {
  OutputRecord record;
  CheckReport report;
};

/// Invariants plus the reference-table cross-check. Horospherical only.
Evaluation evaluate_invariants(const HorosphericalFamily& f);

/// Full verdict; horospherical inputs also carry invariants, the ch2 pair and
/// both reference checks.
Evaluation evaluate_classification(const ClassifiedVariety& v);

/// Record for an already-computed enumeration entry.
OutputRecord make_record(const Classified& entry);

/// Compares record columns with "column=value" pairs separated by commas or
/// whitespace, e.g. "c1_Y=5, ch2_SZ=3/2". Results are appended to the
/// evaluation's report and its checks field is updated. Throws ParseError on
/// an unknown column or malformed value, DomainError when the column is absent
/// from the record.
void apply_expectations(Evaluation& e, std::string_view expectations);

enum class OutputFormat { Table, JsonLines, Csv };

std::string to_json_line(const OutputRecord& r);
/// Throws ParseError on schema violations.
OutputRecord parse_json_line(std::string_view line);

std::string csv_header();
std::string to_csv_row(const OutputRecord& r);

/// Whole document: aligned table with header, JSON lines, or CSV with header.
/// Every line ends with '\n'. An empty record list yields an empty string.
std::string format_records(const std::vector<OutputRecord>& records, OutputFormat format);

}  // namespace horo
