#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "paramspec/cli.hpp"
#include "paramspec/document.hpp"
#include "paramspec/errors.hpp"
#include "paramspec/svg.hpp"
#include "support/oracles.hpp"

using namespace paramspec;
using namespace paramspec::testing;

namespace {

const char* kBenzeneJson = R"({
  "n": 6,
  "parameter": "lambda",
  "entries": [
    {"i": 1, "j": 2, "coeffs": ["1"]},
    {"i": 1, "j": 6, "coeffs": ["0", "1"]},
    {"i": 2, "j": 3, "coeffs": ["0", "1"]},
    {"i": 3, "j": 4, "coeffs": ["1"]},
    {"i": 4, "j": 5, "coeffs": ["0", "1"]},
    {"i": 5, "j": 6, "coeffs": ["1"]}
  ]
})";

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("paramspec_test_" + name);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream file(path, std::ios::binary);
  REQUIRE(file.good());
  file << data;
}

struct CapturedRun {
  int exit_code;
  std::string stdout_bytes;
};

CapturedRun run_captured(const std::vector<std::string>& args) {
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  const int code = run(args);
  std::cout.rdbuf(old);
  return {code, captured.str()};
}

std::vector<std::string> polyline_points(const std::string& svg) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
    const std::size_t start = svg.find("points=\"", pos);
    REQUIRE(start != std::string::npos);
    const std::size_t end = svg.find('"', start + 8);
    out.push_back(svg.substr(start + 8, end - start - 8));
    pos = end;
  }
  return out;
}

std::vector<std::pair<double, double>> parse_points(const std::string& points) {
  std::vector<std::pair<double, double>> out;
  std::istringstream is(points);
  std::string token;
  while (is >> token) {
    const auto comma = token.find(',');
    out.emplace_back(std::stod(token.substr(0, comma)), std::stod(token.substr(comma + 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("parse_document: fixture file equals the builtin") {
  const MatrixDocument parsed = parse_document(kBenzeneJson);
  const MatrixDocument builtin = builtin_document("benzene-huckel");
  CHECK(parsed == builtin);
  CHECK(to_matrix(parsed).char_poly() == benzene_fixture().char_poly());
  CHECK_THROWS_AS(builtin_document("nonexistent"), ValidationError);
}

TEST_CASE("parse_document: entry semantics") {
  SUBCASE("coeffs [0,1] is the parameter itself") {
    const auto doc = parse_document(
        R"({"n": 2, "entries": [{"i": 1, "j": 2, "coeffs": [0, 1]}]})");
    CHECK(to_matrix(doc).entry(0, 1) == UniPoly::variable("lambda"));
  }
  SUBCASE("duplicate entries are rejected") {
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"n": 3, "entries": [
          {"i": 2, "j": 3, "coeffs": [1]}, {"i": 2, "j": 3, "coeffs": [1]}]})"),
        "duplicate entry (2,3)", ValidationError);
  }
  SUBCASE("conflicting mirror entries are rejected with coordinates") {
    CHECK_THROWS_WITH_AS(
        parse_document(R"({"n": 3, "entries": [
          {"i": 2, "j": 3, "coeffs": [1]}, {"i": 3, "j": 2, "coeffs": [2]}]})"),
        "conflicting symmetric entries (2,3) and (3,2)", ValidationError);
  }
  SUBCASE("consistent mirror entries fold into one") {
    const auto doc = parse_document(R"({"n": 3, "entries": [
      {"i": 3, "j": 2, "coeffs": [5]}, {"i": 2, "j": 3, "coeffs": [5]}]})");
    CHECK(doc.entries.size() == 1);
    CHECK(doc.entries[0].i == 2);
    CHECK(doc.entries[0].j == 3);
  }
  SUBCASE("malformed rationals") {
    CHECK_THROWS_AS(parse_document(
                        R"({"n": 1, "entries": [{"i": 1, "j": 1, "coeffs": ["1/0"]}]})"),
                    ValidationError);
    CHECK_THROWS_AS(
        parse_document(R"({"n": 1, "entries": [{"i": 1, "j": 1, "coeffs": ["x"]}]})"),
        ValidationError);
    CHECK_THROWS_AS(
        parse_document(R"({"n": 1, "entries": [{"i": 1, "j": 1, "coeffs": [1.5]}]})"),
        ValidationError);
  }
  SUBCASE("structural validation") {
    CHECK_THROWS_AS(parse_document("not json"), ValidationError);
    CHECK_THROWS_AS(parse_document("[]"), ValidationError);
    CHECK_THROWS_AS(parse_document(R"({"entries": []})"), ValidationError);
    CHECK_THROWS_AS(parse_document(R"({"n": 0, "entries": []})"), ValidationError);
    CHECK_THROWS_AS(
        parse_document(R"({"n": 2, "entries": [{"i": 1, "j": 3, "coeffs": [1]}]})"),
        ValidationError);
    CHECK_THROWS_AS(parse_document(R"({"n": 2, "parameter": "", "entries": []})"),
                    ValidationError);
  }
}

TEST_CASE("document round-trip is the identity on canonical documents") {
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> degree(0, 3);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> keep(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixDocument doc;
    doc.n = dim(rng);
    doc.parameter = trial % 3 == 0 ? "t" : "lambda";
    for (int i = 1; i <= doc.n; ++i) {
      for (int j = i; j <= doc.n; ++j) {
        if (keep(rng) != 0) continue;
        std::vector<Rational> coeffs(static_cast<std::size_t>(degree(rng)) + 1);
        for (auto& c : coeffs) c = coeff(rng);
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
        if (coeffs.empty()) continue;
        doc.entries.push_back({i, j, std::move(coeffs)});
      }
    }
    const MatrixDocument reparsed = parse_document(serialize_document(doc));
    CHECK(reparsed == doc);
    CHECK(serialize_document(reparsed) == serialize_document(doc));
    CHECK(document_digest(reparsed) == document_digest(doc));
  }

  // Non-canonical input normalizes once and is stable afterwards.
  const auto once = parse_document(
      R"({"n": 2, "entries": [{"i": 2, "j": 1, "coeffs": ["2/4", 0]}]})");
  CHECK(once.entries.size() == 1);
  CHECK(once.entries[0].coeffs == std::vector<Rational>{Rational(1, 2)});
  CHECK(parse_document(serialize_document(once)) == once);
}

TEST_CASE("cli: subcommands write data, stdout stays clean with --output") {
  const auto out = temp_path("charpoly.txt");
  const CapturedRun result = run_captured(
      {"charpoly", "--builtin", "benzene-huckel", "--format", "text", "--output",
       out.string()});
  CHECK(result.exit_code == 0);
  CHECK(result.stdout_bytes.empty());
  const std::string text = read_file(out);
  CHECK(text ==
        "E^6 - (3*lambda^2 + 3)*E^4 + (3*lambda^4 + 3*lambda^2 + 3)*E^2 - "
        "(lambda^6 + 2*lambda^3 + 1)\n");
  std::filesystem::remove(out);
}

TEST_CASE("cli: report is byte-identical across runs") {
  const auto first = temp_path("report1.json");
  const auto second = temp_path("report2.json");
  CHECK(run({"report", "--builtin", "benzene-huckel", "--format", "json", "--output",
             first.string()}) == 0);
  CHECK(run({"report", "--builtin", "benzene-huckel", "--format", "json", "--output",
             second.string()}) == 0);
  const std::string a = read_file(first);
  const std::string b = read_file(second);
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.find("\"disc_before_reduction_zero\": true") != std::string::npos);
  CHECK(a.find("\"convergence_radius\": 1") != std::string::npos);
  CHECK(a.find("\"order\": 6") != std::string::npos);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST_CASE("cli: sweep csv golden rows") {
  const CapturedRun result = run_captured({"sweep", "--builtin", "benzene-huckel", "--range",
                                           "-2:2", "--steps", "5", "--format", "csv"});
  CHECK(result.exit_code == 0);
  std::istringstream is(result.stdout_bytes);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "lambda,E1,E2,E3,E4,E5,E6");
  // lambda = 0 row: -1,-1,-1,1,1,1 to full precision.
  std::istringstream row(lines[3]);
  std::string cell;
  std::vector<double> values;
  while (std::getline(row, cell, ',')) values.push_back(std::stod(cell));
  REQUIRE(values.size() == 7);
  CHECK(values[0] == 0.0);
  for (int k = 1; k <= 3; ++k) CHECK(values[static_cast<std::size_t>(k)] == doctest::Approx(-1.0).epsilon(1e-10));
  for (int k = 4; k <= 6; ++k) CHECK(values[static_cast<std::size_t>(k)] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("cli: document file input") {
  const auto doc_path = temp_path("benzene.json");
  write_file(doc_path, kBenzeneJson);
  const auto json_out = temp_path("disc.json");
  CHECK(run({"disc", "--input", doc_path.string(), "--format", "json", "--output",
             json_out.string()}) == 0);
  const std::string payload = read_file(json_out);
  CHECK(payload.find("\"disc_before_reduction_zero\": true") != std::string::npos);
  CHECK(payload.find("1296") != std::string::npos);
  std::filesystem::remove(doc_path);
  std::filesystem::remove(json_out);
}

TEST_CASE("cli: exit codes") {
  // 1: usage errors.
  CHECK(run(std::vector<std::string>{}) == 1);
  CHECK(run({"charpoly"}) == 1);  // neither --input nor --builtin
  CHECK(run({"charpoly", "--builtin", "benzene-huckel", "--input", "x.json"}) == 1);
  CHECK(run({"report", "--builtin", "benzene-huckel", "--format", "csv"}) == 1);
  CHECK(run({"sweep", "--builtin", "benzene-huckel", "--range", "oops"}) == 1);
  CHECK(run({"sweep", "--builtin", "benzene-huckel", "--steps", "1"}) == 1);
  CHECK(run({"report", "--builtin", "benzene-huckel", "--lambda-tol", "-1"}) == 1);
  CHECK(run({"frobnicate"}) == 1);

  // 2: document problems.
  CHECK(run({"charpoly", "--input", temp_path("missing.json").string()}) == 2);
  const auto bad = temp_path("bad.json");
  write_file(bad, "{\"n\": 2");
  CHECK(run({"charpoly", "--input", bad.string()}) == 2);
  write_file(bad, R"({"n": 2, "entries": [{"i": 1, "j": 2, "coeffs": ["1/0"]}]})");
  CHECK(run({"charpoly", "--input", bad.string()}) == 2);
  std::filesystem::remove(bad);

  // 4: capability bound (exhaustive symmetry search above n = 10).
  std::ostringstream big;
  big << R"({"n": 11, "entries": [)";
  for (int i = 1; i <= 10; ++i) {
    big << (i > 1 ? ", " : "") << R"({"i": )" << i << R"(, "j": )" << i + 1
        << R"(, "coeffs": [1]})";
  }
  big << "]}";
  const auto chain = temp_path("chain11.json");
  write_file(chain, big.str());
  CHECK(run({"symmetry", "--input", chain.string()}) == 4);
  std::filesystem::remove(chain);

  // 0: help.
  CHECK(run_captured({"--help"}).exit_code == 0);
}

TEST_CASE("cli: symmetry subcommand and signed search flag") {
  const CapturedRun plain = run_captured(
      {"symmetry", "--builtin", "benzene-huckel", "--format", "json"});
  CHECK(plain.exit_code == 0);
  CHECK(plain.stdout_bytes.find("\"order\": 6") != std::string::npos);
  CHECK(plain.stdout_bytes.find("\"abelian\": false") != std::string::npos);

  const CapturedRun with_signs = run_captured(
      {"symmetry", "--builtin", "benzene-huckel", "--format", "json", "--signed-symmetries"});
  CHECK(with_signs.exit_code == 0);
  // The ring is connected, so signs are fixed up to a global flip: the
  // signed commutant is exactly +-U for each plain element.
  CHECK(with_signs.stdout_bytes.find("\"order\": 12") != std::string::npos);
}

TEST_CASE("emit_svg: structural checks on the fixture sweep") {
  const SweepTable table = sweep(benzene_fixture(), -2.0, 2.0, 401);
  const std::string svg = emit_svg(table, "lambda");

  const auto curves = polyline_points(svg);
  REQUIRE(curves.size() == 6);
  for (const auto& points : curves) {
    CHECK(parse_points(points).size() == 401);
  }

  // Meeting points: at lambda = -1 (grid row 100) the crossing pair E3/E4
  // lands on the same pixel; at lambda = 0 (row 200) E1..E3 do.
  const auto c1 = parse_points(curves[0]);
  const auto c2 = parse_points(curves[1]);
  const auto c3 = parse_points(curves[2]);
  const auto c4 = parse_points(curves[3]);
  CHECK(std::abs(c3[100].second - c4[100].second) <= 0.02);
  CHECK(std::abs(c1[200].second - c3[200].second) <= 0.02);
  // Away from the crossings those curves are visibly separate (E1/E2 stay
  // glued for all lambda: that is the persistent degeneracy).
  CHECK(std::abs(c3[0].second - c4[0].second) > 5.0);
  CHECK(std::abs(c2[0].second - c3[0].second) > 5.0);

  // The x coordinate of row 100 matches the lambda = -1 grid position.
  CHECK(std::abs(c3[100].first - c4[100].first) <= 0.01);
}

TEST_CASE("emit_svg: edge cases") {
  const ParametricMatrix single =
      ParametricMatrix::build(1, {{0, 0, UniPoly::variable("lambda")}});
  const std::string one_curve = emit_svg(sweep(single, 0.0, 1.0, 10), "lambda");
  CHECK(polyline_points(one_curve).size() == 1);

  const std::string two_rows = emit_svg(sweep(benzene_fixture(), -1.0, 1.0, 2), "lambda");
  for (const auto& points : polyline_points(two_rows)) {
    CHECK(parse_points(points).size() == 2);
  }

  CHECK_THROWS_AS(emit_svg(SweepTable{}, "lambda"), DomainError);
}

TEST_CASE("cli: plot subcommand emits deterministic svg") {
  const auto first = temp_path("plot1.svg");
  const auto second = temp_path("plot2.svg");
  CHECK(run({"plot", "--builtin", "benzene-huckel", "--range", "-2:2", "--steps", "101",
             "--output", first.string()}) == 0);
  CHECK(run({"plot", "--builtin", "benzene-huckel", "--range", "-2:2", "--steps", "101",
             "--output", second.string()}) == 0);
  const std::string a = read_file(first);
  CHECK(a == read_file(second));
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}
