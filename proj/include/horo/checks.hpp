#pragma once

#include <string>
#include <vector>

namespace horo {

/// One compared column: derived value against the reference value, both
/// rendered exactly.
struct ColumnCheck {
  std::string column;
  std::string derived;
  std::string expected;
  bool pass = false;
};

struct CheckReport {
  std::string subject;  // canonical descriptor
  std::vector<ColumnCheck> columns;

  bool passed() const;
  void add(std::string column, std::string derived, std::string expected);

  /// One line per failing column: "<subject>: column <c>: derived <d>, expected <e>".
  std::string failure_summary() const;
};

/// Throws ConsistencyError carrying failure_summary() when any column fails.
void require_consistent(const CheckReport& report);

}  // namespace horo
