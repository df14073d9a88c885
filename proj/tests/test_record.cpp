#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "horo/descriptor.hpp"
#include "horo/errors.hpp"
#include "horo/record.hpp"

using namespace horo;

TEST_CASE("rational text form") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-4, 2)) == "-2");
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational("-9/2") == make_rational(-9, 2));
  CHECK(parse_rational("4/2") == 2);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int i = 0; i < 2000; ++i) {
    long den = dist(rng);
    if (den == 0) den = 1;
    const Rational r = make_rational(dist(rng), den);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("descriptor parsing") {
  CHECK(descriptor(parse_descriptor("X1(5)")) == "X1(5)");
  CHECK(descriptor(parse_descriptor("X3( 6 , 5 )")) == "X3(6,5)");
  CHECK(descriptor(parse_descriptor("  X2 ")) == "X2");
  CHECK(descriptor(parse_descriptor("B5/P3")) == "B5/P3");
  CHECK(descriptor(parse_descriptor("G2/P1")) == "G2/P1");
  CHECK(descriptor(parse_descriptor("G(3, 6)+c1")) == "G(3,6)+c1");
  CHECK(descriptor(parse_descriptor("OG(5,10)+c3")) == "OG(5,10)+c3");
  CHECK(descriptor(parse_descriptor("WCI(1, 1,1,1,1,1; 2)")) == "WCI(1,1,1,1,1,1; 2)");
  CHECK(descriptor(parse_descriptor("WCI(1,1,1;)")) == "WCI(1,1,1;)");
  CHECK(kind_name(parse_descriptor("E8/P8")) == "homogeneous");

  // The canonical form parses back to itself.
  for (const char* text : {"X1(3)", "X2", "X3(9,7)", "X4", "X5", "D4/P2", "G(2,5)+c0",
                           "OG(4,8)+c2", "WCI(1,1,2,3; 6)", "WCI(1,1,1,1; 2,2)"})
    CHECK(descriptor(parse_descriptor(descriptor(parse_descriptor(text)))) == text);
}

TEST_CASE("descriptor errors name the bad token") {
  auto message = [](const char* text) {
    try {
      parse_descriptor(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("X7").find("'7'") != std::string::npos);
  CHECK(message("Q3/P1").find("'Q3'") != std::string::npos);
  CHECK(message("X3(4;2)").find("';'") != std::string::npos);
  CHECK(message("B5/P3x").find("'x'") != std::string::npos);
  CHECK(message("B5-P3").find("'-'") != std::string::npos);
  CHECK(message("").find("empty") != std::string::npos);
  CHECK(message("X 2").find("' '") != std::string::npos);

  CHECK_THROWS_AS(parse_descriptor("X1(2)"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("D3/P1"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("OG(5,9)+c1"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("WCI(1,1,1; 2,2)"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("X1(99999999999)"), ParseError);
  CHECK_THROWS_AS(parse_family("B3/P1"), ParseError);
}

TEST_CASE("records serialize and parse back") {
  EnumerationBounds b;
  b.homogeneous = b.horospherical = b.linear_sections = b.hypersurfaces = true;
  b.max_rank = 6;
  b.max_n = 8;
  b.max_codim = 3;
  b.max_degree = 3;
  std::vector<OutputRecord> records;
  for (const auto& entry : enumerate(b)) records.push_back(make_record(entry));
  records.push_back(evaluate_invariants(HorosphericalFamily::X2()).record);
  REQUIRE(records.size() > 100);

  std::istringstream lines(format_records(records, OutputFormat::JsonLines));
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) {
    REQUIRE(i < records.size());
    CHECK(parse_json_line(line) == records[i]);
    CHECK(to_json_line(parse_json_line(line)) == line);
    ++i;
  }
  CHECK(i == records.size());
}

TEST_CASE("json schema") {
  const auto rec = evaluate_classification(parse_descriptor("X2")).record;
  CHECK(to_json_line(rec) ==
        R"({"descriptor":"X2","kind":"horospherical","invariants":{"c1_X":7,"c1_Y":5,"c1_Z":6,)"
        R"("codim_Y":4,"codim_Z":3,"dim_X":9,"dim_Y":5,"dim_Z":6},"ch2_SY":"3/2","ch2_SZ":"3/2",)"
        R"("two_fano":true,"rule":"horospherical.two_orbit_list + horospherical.ch2_derivation",)"
        R"("tangent_stable":true,"k_polystable":false,"checks":"pass"})");
  CHECK_THROWS_AS(parse_json_line("{"), ParseError);
  CHECK_THROWS_AS(parse_json_line("[1]"), ParseError);
  CHECK_THROWS_AS(parse_json_line(R"({"descriptor":"X2"})"), ParseError);
  CHECK_THROWS_AS(parse_json_line(R"({"descriptor":"X2","kind":"horospherical","invariants":null,)"
                                  R"("ch2_SY":"1.5","ch2_SZ":null,"two_fano":null,"rule":null,)"
                                  R"("tangent_stable":null,"k_polystable":null,"checks":null})"),
                  ParseError);
}

TEST_CASE("csv and table rendering") {
  const auto rec = evaluate_classification(parse_descriptor("X3(9,7)")).record;
  CHECK(csv_header() ==
        "descriptor,kind,c1_X,c1_Y,c1_Z,codim_Y,codim_Z,dim_X,dim_Y,dim_Z,ch2_SY,ch2_SZ,"
        "two_fano,tangent_stable,k_polystable,checks,rule");
  CHECK(to_csv_row(rec) ==
        "\"X3(9,7)\",horospherical,13,12,13,7,6,63,56,57,1/2,1/2,true,true,false,pass,"
        "horospherical.two_orbit_list + horospherical.ch2_derivation");
  const auto wci = evaluate_classification(parse_descriptor("WCI(1,1,1,1,1,1;2)")).record;
  CHECK(to_csv_row(wci) == "\"WCI(1,1,1,1,1,1; 2)\",wci,,,,,,,,,,,true,true,,,wci.criterion");

  CHECK(format_records({}, OutputFormat::Csv).empty());
  CHECK(format_records({}, OutputFormat::Table).empty());
  const auto table = format_records({rec, wci}, OutputFormat::Table);
  std::istringstream in(table);
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header.rfind("descriptor", 0) == 0);
  // Aligned columns: "kind" starts at the same offset in every line.
  CHECK(header.find("kind") == row1.find("horospherical"));
  CHECK(header.find("kind") == row2.find("wci"));
}

TEST_CASE("expectations") {
  auto e = evaluate_classification(parse_descriptor("X2"));
  apply_expectations(e, "c1_Y=5, ch2_SZ=6/4 two_fano=true");
  CHECK(e.report.passed());
  CHECK(e.record.checks == "pass");

  auto bad = evaluate_classification(parse_descriptor("X2"));
  apply_expectations(bad, "c1_Y=6");
  CHECK_FALSE(bad.report.passed());
  CHECK(bad.record.checks == "fail");
  CHECK(bad.report.failure_summary() == "X2: column c1_Y: derived 5, expected 6");

  auto inv = evaluate_invariants(HorosphericalFamily::X2());
  CHECK_THROWS_AS(apply_expectations(inv, "ch2_SY=3/2"), DomainError);
  CHECK_THROWS_AS(apply_expectations(inv, "colour=3"), ParseError);
  CHECK_THROWS_AS(apply_expectations(inv, "c1_Y"), ParseError);
  CHECK_THROWS_AS(apply_expectations(inv, "c1_Y=five"), ParseError);

  auto homog = evaluate_classification(parse_descriptor("B4/P2"));
  apply_expectations(homog, "two_fano=false");
  CHECK(homog.report.passed());
  CHECK(homog.record.checks == "pass");
}
