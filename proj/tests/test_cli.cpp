#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output when requested.
Run run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(HORO_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("invariants") {
  auto r = run("invariants X2 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("X2,horospherical,7,5,6,4,3,9,5,6,,,,,,pass,") != std::string::npos);

  r = run("invariants 'X3(4,2)' --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"X3(4,2)\",horospherical,8,7,8,2,6,13,11,7,") != std::string::npos);

  r = run("invariants 'X1(2)'", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("n >= 3") != std::string::npos);
}

TEST_CASE("classify") {
  auto r = run("classify 'X3(9,7)' --format jsonl");
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("ch2_SY":"1/2","ch2_SZ":"1/2","two_fano":true)") != std::string::npos);

  r = run("classify 'WCI(1,1,1,1,1,1; 2)' --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find(",true,true,,,wci.criterion") != std::string::npos);

  r = run("classify G2/P1 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("G2/P1,homogeneous,,,,,,,,,,,true,") != std::string::npos);

  r = run("classify 'X3(4;2)'", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("';'") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("classify X2 --format xml").code == 1);
  CHECK(run("enumerate --series Q").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("consistency failures exit 2 with a report") {
  auto r = run("classify X4 --expect ch2_SY=1", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("X4: column ch2_SY: derived -1, expected 1") != std::string::npos);
  r = run("invariants X2 --expect 'c1_Y=5,codim_Z=3'");
  CHECK(r.code == 0);
}

TEST_CASE("enumerate") {
  auto r = run("enumerate --horospherical --max-n 9 --format csv");
  CHECK(r.code == 0);
  int two_fano = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line))
    if (line.find(",pass,") != std::string::npos && line.find("/2,true,") != std::string::npos) ++two_fano;
  CHECK(two_fano == 4);

  r = run("enumerate --horospherical --max-n 0");
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  r = run("enumerate --homogeneous --series B --max-rank 8 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.find("B5/P3,homogeneous,,,,,,,,,,,true,true,true,,homogeneous.B.middle") !=
        std::string::npos);
  CHECK(r.out.find("B4/P2,homogeneous,,,,,,,,,,,false,") != std::string::npos);

  CHECK(run("enumerate --homogeneous --max-rank 80").code == 1);
  CHECK(run("enumerate --homogeneous --max-rank 6; HORO_ENUM_CAP=5 " HORO_CLI " enumerate --homogeneous --max-rank 6").code == 1);
}

TEST_CASE("output is byte-stable and matches the golden table") {
  const auto a = run("enumerate --homogeneous --max-rank 8 --format csv");
  const auto b = run("enumerate --homogeneous --max-rank 8 --format csv");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == slurp(std::filesystem::path(HORO_GOLDEN_DIR) / "homogeneous.csv"));
}

TEST_CASE("golden directory output") {
  const auto dir = std::filesystem::temp_directory_path() / "horo_cli_golden_test";
  std::filesystem::remove_all(dir);
  const auto r = run("enumerate --homogeneous --horospherical --max-rank 4 --max-n 5 --format jsonl --golden " +
                     dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto homog = slurp(dir / "homogeneous.jsonl");
  const auto horo = slurp(dir / "horospherical.jsonl");
  CHECK(homog == run("enumerate --homogeneous --max-rank 4 --format jsonl").out);
  CHECK(horo == run("enumerate --horospherical --max-n 5 --format jsonl").out);
  CHECK(count_lines(horo) == 3 + 1 + 10 + 1 + 1);
  CHECK_FALSE(std::filesystem::exists(dir / "linear_sections.jsonl"));
  std::filesystem::remove_all(dir);
}
