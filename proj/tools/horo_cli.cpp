// horo: command-line front end over the C API.
//
//   horo invariants X3(4,2)
//   horo classify "WCI(1,1,1,1,1,1; 2)" --format jsonl
//   horo enumerate --horospherical --max-n 9 --format csv
//   horo enumerate --homogeneous --max-rank 8 --golden tests/golden
//
// Exit codes: 0 success, 1 usage/parse/domain, 2 consistency failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "horo/horo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConsistency = 2;

int exit_code(horo_status status) {
  switch (status) {
    case HORO_OK: return kExitOk;
    case HORO_E_CONSISTENCY:
    case HORO_E_INTERNAL: return kExitConsistency;
    default: return kExitUsage;
  }
}

struct StringDeleter {
  void operator()(char* s) const { horo_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct RecordDeleter {
  void operator()(horo_record* r) const { horo_record_free(r); }
};
struct ListDeleter {
  void operator()(horo_record_list* l) const { horo_record_list_free(l); }
};

int report(horo_status status, const std::string& message) {
  std::cerr << "horo: " << message << (message.ends_with('\n') ? "" : "\n");
  return exit_code(status);
}

int report(horo_status status) { return report(status, horo_last_error()); }

const std::map<std::string, horo_format> kFormats{
    {"table", HORO_FORMAT_TABLE}, {"jsonl", HORO_FORMAT_JSONL}, {"csv", HORO_FORMAT_CSV}};

const char* extension(horo_format f) {
  switch (f) {
    case HORO_FORMAT_JSONL: return ".jsonl";
    case HORO_FORMAT_CSV: return ".csv";
    default: return ".txt";
  }
}

using Query = horo_status (*)(const char*, const char*, horo_record**);

int run_single(Query query, const std::string& descriptor, const std::string& expect,
               horo_format format) {
  horo_record* raw = nullptr;
  const horo_status status = query(descriptor.c_str(), expect.empty() ? nullptr : expect.c_str(), &raw);
  std::unique_ptr<horo_record, RecordDeleter> record(raw);
  const std::string failure = status == HORO_OK ? "" : horo_last_error();
  if (record) {
    char* text = nullptr;
    if (horo_status s = horo_record_format(record.get(), format, &text); s != HORO_OK)
      return report(s);
    std::cout << CString(text).get();
  }
  if (status != HORO_OK) return report(status, failure);
  return kExitOk;
}

int enumerate_to(const horo_bounds& bounds, horo_format format, std::ostream& out) {
  horo_record_list* raw = nullptr;
  if (horo_status s = horo_enumerate(&bounds, &raw); s != HORO_OK) return report(s);
  std::unique_ptr<horo_record_list, ListDeleter> list(raw);
  char* text = nullptr;
  if (horo_status s = horo_record_list_format(list.get(), format, &text); s != HORO_OK)
    return report(s);
  out << CString(text).get();
  return kExitOk;
}

int write_goldens(horo_bounds bounds, horo_format format, const std::string& dir) {
  std::filesystem::create_directories(dir);
  struct Part {
    const char* name;
    int horo_bounds::*flag;
  };
  const Part parts[] = {{"homogeneous", &horo_bounds::homogeneous},
                        {"horospherical", &horo_bounds::horospherical},
                        {"linear_sections", &horo_bounds::linear_sections},
                        {"hypersurfaces", &horo_bounds::hypersurfaces}};
  for (const auto& part : parts) {
    if (!(bounds.*part.flag)) continue;
    horo_bounds only = bounds;
    only.homogeneous = only.horospherical = only.linear_sections = only.hypersurfaces = 0;
    only.*part.flag = 1;
    const auto path = std::filesystem::path(dir) / (std::string(part.name) + extension(format));
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "horo: cannot write " << path << '\n';
      return kExitUsage;
    }
    if (int rc = enumerate_to(only, format, file); rc != kExitOk) return rc;
    std::cerr << "wrote " << path.string() << '\n';
  }
  return kExitOk;
}

int enumeration_cap() {
  const char* env = std::getenv("HORO_ENUM_CAP");
  if (!env || !*env) return 64;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw CLI::ValidationError("HORO_ENUM_CAP", std::string("not an integer: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 2-Fano classification engine for horospherical and related varieties"};
  app.require_subcommand(1);
  app.set_version_flag("--version", horo_version());

  std::string descriptor;
  std::string expect;
  horo_format format = HORO_FORMAT_TABLE;

  auto* inv = app.add_subcommand("invariants", "Invariants of a two-orbit family, cross-checked");
  inv->add_option("descriptor", descriptor, "X1(n), X2, X3(n,m), X4 or X5")->required();
  inv->add_option("--expect", expect, "Extra checks, e.g. \"c1_Y=5,codim_Z=3\"");
  inv->add_option("--format", format, "table, jsonl or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* cls = app.add_subcommand("classify", "2-Fano verdict for any descriptor");
  cls->add_option("descriptor", descriptor,
                  "X.., <Series><rank>/P<k>, G(k,n)+c<c>, OG(k,2k)+c<c>, WCI(a..; d..)")
      ->required();
  cls->add_option("--expect", expect, "Extra checks, e.g. \"ch2_SY=3/2,two_fano=true\"");
  cls->add_option("--format", format, "table, jsonl or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  horo_bounds bounds;
  horo_bounds_init(&bounds);
  bounds.max_rank = 8;
  bounds.max_n = 10;
  bounds.max_codim = 4;
  bounds.max_degree = 5;
  bool homogeneous = false, horospherical = false, sections = false, hypersurfaces = false;
  std::string series;
  std::string golden;

  auto* en = app.add_subcommand("enumerate", "Canonically ordered classification sweep");
  en->add_flag("--homogeneous", homogeneous, "Sweep G/P_k");
  en->add_flag("--horospherical", horospherical, "Sweep the two-orbit families");
  en->add_flag("--linear-sections", sections, "Sweep G(k,n) and OG(k,2k) sections");
  en->add_flag("--hypersurfaces", hypersurfaces, "Sweep hypersurfaces of P^n");
  en->add_option("--series", series, "Restrict the homogeneous sweep to one series")
      ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  en->add_option("--max-rank", bounds.max_rank, "Largest rank for the homogeneous sweep")
      ->capture_default_str();
  en->add_option("--max-n", bounds.max_n,
                 "Largest rank of G (two-orbit), n of G(k,n) (sections), n of P^n")
      ->capture_default_str();
  en->add_option("--max-codim", bounds.max_codim, "Largest section codimension")
      ->capture_default_str();
  en->add_option("--max-degree", bounds.max_degree, "Largest hypersurface degree")
      ->capture_default_str();
  en->add_option("--format", format, "table, jsonl or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  en->add_option("--golden", golden, "Write one byte-stable file per category into this directory");

  try {
    app.parse(argc, argv);
    bounds.cap = enumeration_cap();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*inv) return run_single(horo_invariants, descriptor, expect, format);
  if (*cls) return run_single(horo_classify, descriptor, expect, format);

  if (!homogeneous && !horospherical && !sections && !hypersurfaces)
    homogeneous = horospherical = sections = hypersurfaces = true;
  bounds.homogeneous = homogeneous;
  bounds.horospherical = horospherical;
  bounds.linear_sections = sections;
  bounds.hypersurfaces = hypersurfaces;
  bounds.series = series.empty() ? 0 : series[0];

  if (!golden.empty()) return write_goldens(bounds, format, golden);
  return enumerate_to(bounds, format, std::cout);
}
