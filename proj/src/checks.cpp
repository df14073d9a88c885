#include "horo/checks.hpp"

#include <algorithm>

#include "horo/errors.hpp"

namespace horo {

bool CheckReport::passed() const {
  return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.pass; });
}

void CheckReport::add(std::string column, std::string derived, std::string expected) {
  const bool pass = derived == expected;
  columns.push_back({std::move(column), std::move(derived), std::move(expected), pass});
}

std::string CheckReport::failure_summary() const {
  std::string out;
  for (const auto& c : columns) {
    if (c.pass) continue;
    if (!out.empty()) out += '\n';
    out += subject + ": column " + c.column + ": derived " + c.derived + ", expected " +
           c.expected;
  }
  return out;
}

void require_consistent(const CheckReport& report) {
  if (!report.passed()) throw ConsistencyError(report.failure_summary());
}

}  // namespace horo
