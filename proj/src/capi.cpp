#include "horo/horo.h"

#include <cstring>
#include <string>
#include <vector>

#include "horo/descriptor.hpp"
#include "horo/errors.hpp"
#include "horo/record.hpp"

struct horo_record {
  horo::OutputRecord record;
};

struct horo_record_list {
  std::vector<horo_record> records;
};

namespace {

thread_local std::string t_last_error;

horo_status fail(horo_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

// Maps the exception in flight to a status code.
horo_status translate() {
  try {
    throw;
  } catch (const horo::ParseError& e) {
    return fail(HORO_E_PARSE, e.what());
  } catch (const horo::CapExceeded& e) {
    return fail(HORO_E_CAP, e.what());
  } catch (const horo::DomainError& e) {
    return fail(HORO_E_DOMAIN, e.what());
  } catch (const horo::ConsistencyError& e) {
    return fail(HORO_E_CONSISTENCY, e.what());
  } catch (const std::exception& e) {
    return fail(HORO_E_INTERNAL, e.what());
  } catch (...) {
    return fail(HORO_E_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

horo::OutputFormat to_format(horo_format f) {
  switch (f) {
    case HORO_FORMAT_TABLE: return horo::OutputFormat::Table;
    case HORO_FORMAT_JSONL: return horo::OutputFormat::JsonLines;
    case HORO_FORMAT_CSV: return horo::OutputFormat::Csv;
  }
  throw std::invalid_argument("bad format");
}

horo_status finish(horo::Evaluation&& e, const char* expectations, horo_record** out) {
  if (expectations) horo::apply_expectations(e, expectations);
  *out = new horo_record{std::move(e.record)};
  if (!e.report.passed()) return fail(HORO_E_CONSISTENCY, e.report.failure_summary());
  t_last_error.clear();
  return HORO_OK;
}

horo_status emit(const std::string& text, char** out) {
  *out = copy_string(text);
  if (!*out) return fail(HORO_E_INTERNAL, "out of memory");
  t_last_error.clear();
  return HORO_OK;
}

}  // namespace

extern "C" {

const char* horo_version(void) { return "1.0.0"; }

const char* horo_last_error(void) { return t_last_error.c_str(); }

void horo_string_free(char* s) { std::free(s); }

void horo_bounds_init(horo_bounds* bounds) {
  if (!bounds) return;
  *bounds = horo_bounds{};
  bounds->cap = 64;
}

horo_status horo_invariants(const char* descriptor, const char* expectations,
                            horo_record** out) {
  if (!descriptor || !out) return fail(HORO_E_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    return finish(horo::evaluate_invariants(horo::parse_family(descriptor)), expectations, out);
  } catch (...) {
    return translate();
  }
}

horo_status horo_classify(const char* descriptor, const char* expectations, horo_record** out) {
  if (!descriptor || !out) return fail(HORO_E_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    return finish(horo::evaluate_classification(horo::parse_descriptor(descriptor)),
                  expectations, out);
  } catch (...) {
    return translate();
  }
}

void horo_record_free(horo_record* record) { delete record; }

const char* horo_record_descriptor(const horo_record* record) {
  return record ? record->record.descriptor.c_str() : nullptr;
}

int horo_record_two_fano(const horo_record* record) {
  if (!record || !record->record.two_fano) return -1;
  return *record->record.two_fano ? 1 : 0;
}

horo_status horo_record_ch2(const horo_record* record, char which, char** out) {
  if (!record || !out) return fail(HORO_E_ARGUMENT, "null argument");
  const auto& value = which == 'Y' ? record->record.ch2_sy : record->record.ch2_sz;
  if (which != 'Y' && which != 'Z') return fail(HORO_E_ARGUMENT, "which must be 'Y' or 'Z'");
  if (!value) return fail(HORO_E_DOMAIN, "record carries no ch2 value");
  return emit(horo::to_string(*value), out);
}

horo_status horo_record_format(const horo_record* record, horo_format format, char** out) {
  if (!record || !out) return fail(HORO_E_ARGUMENT, "null argument");
  try {
    return emit(horo::format_records({record->record}, to_format(format)), out);
  } catch (const std::invalid_argument& e) {
    return fail(HORO_E_ARGUMENT, e.what());
  } catch (...) {
    return translate();
  }
}

horo_status horo_enumerate(const horo_bounds* bounds, horo_record_list** out) {
  if (!bounds || !out) return fail(HORO_E_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    horo::EnumerationBounds b;
    b.homogeneous = bounds->homogeneous != 0;
    b.horospherical = bounds->horospherical != 0;
    b.linear_sections = bounds->linear_sections != 0;
    b.hypersurfaces = bounds->hypersurfaces != 0;
    if (bounds->series) {
      if (std::strchr("ABCDEFG", bounds->series) == nullptr)
        return fail(HORO_E_PARSE, std::string("unknown series '") + bounds->series + "'");
      b.series = static_cast<horo::Series>(bounds->series);
    }
    b.max_rank = bounds->max_rank;
    b.max_n = bounds->max_n;
    b.max_codim = bounds->max_codim;
    b.max_degree = bounds->max_degree;
    b.cap = bounds->cap;
    auto list = std::make_unique<horo_record_list>();
    for (const auto& entry : horo::enumerate(b))
      list->records.push_back(horo_record{horo::make_record(entry)});
    *out = list.release();
    t_last_error.clear();
    return HORO_OK;
  } catch (...) {
    return translate();
  }
}

void horo_record_list_free(horo_record_list* list) { delete list; }

size_t horo_record_list_size(const horo_record_list* list) {
  return list ? list->records.size() : 0;
}

const horo_record* horo_record_list_get(const horo_record_list* list, size_t index) {
  if (!list || index >= list->records.size()) return nullptr;
  return &list->records[index];
}

horo_status horo_record_list_format(const horo_record_list* list, horo_format format,
                                    char** out) {
  if (!list || !out) return fail(HORO_E_ARGUMENT, "null argument");
  try {
    std::vector<horo::OutputRecord> records;
    records.reserve(list->records.size());
    for (const auto& r : list->records) records.push_back(r.record);
    return emit(horo::format_records(records, to_format(format)), out);
  } catch (const std::invalid_argument& e) {
    return fail(HORO_E_ARGUMENT, e.what());
  } catch (...) {
    return translate();
  }
}

}  // extern "C"
