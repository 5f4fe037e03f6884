#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "numrange/bounds.hpp"
#include "numrange/enclosure.hpp"
#include "numrange/matrix_io.hpp"
#include "test_support.hpp"

using namespace numrange;
using testsup::C;
using testsup::Mat;

namespace {

const std::string kCli = NUMRANGE_CLI_PATH;
const std::string kData = NUMRANGE_DATA_DIR;

std::filesystem::path tmp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "numrange_io_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

struct CmdResult {
  int code;
  std::string out;
  std::string err;
};

CmdResult run_cli(const std::string& args) {
  auto dir = tmp_dir();
  auto out_path = dir / "stdout.txt";
  auto err_path = dir / "stderr.txt";
  std::string cmd = kCli + " " + args + " > " + out_path.string() + " 2> " +
                    err_path.string();
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return {WEXITSTATUS(rc), slurp(out_path), slurp(err_path)};
}

bool bits_equal(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_CASE("parse_complex_token covers the token grammar") {
  CHECK(io::parse_complex_token("2-4i") == C(2, -4));
  CHECK(io::parse_complex_token("-4+4i") == C(-4, 4));
  CHECK(io::parse_complex_token("5i") == C(0, 5));
  CHECK(io::parse_complex_token("-2i") == C(0, -2));
  CHECK(io::parse_complex_token("-1") == C(-1, 0));
  CHECK(io::parse_complex_token("i") == C(0, 1));
  CHECK(io::parse_complex_token("-i") == C(0, -1));
  CHECK(io::parse_complex_token("3-i") == C(3, -1));
  CHECK(io::parse_complex_token("+2.5") == C(2.5, 0));
  CHECK(io::parse_complex_token("2.5e-3+1e2i") == C(2.5e-3, 100));
  CHECK(io::parse_complex_token("0") == C(0, 0));

  for (const char* bad : {"", "3+", "1+2", "abc", "1ii", "i3", "3--4i", "inf"}) {
    CHECK_THROWS_AS(io::parse_complex_token(bad), ParseError);
  }
}

TEST_CASE("grid files parse with comments and validate shape") {
  Mat a = io::read_matrix_file(kData + "/matrix_a.txt");
  REQUIRE(a.rows() == 4);
  REQUIRE(a.cols() == 4);
  CHECK(a(0, 0) == C(2, -4));
  CHECK(a(1, 3) == C(0, 5));
  CHECK(a(2, 0) == C(0, -2));
  CHECK(a(3, 3) == C(2, 5));
  CHECK(adjoint(a)(0, 1) == C(1, 3));

  CHECK_THROWS_AS(io::parse_matrix_grid("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_grid("# nothing\n"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix(""), ParseError);
}

TEST_CASE("json and grid fixtures hold the same matrices") {
  for (const char* stem : {"matrix_a", "matrix_b"}) {
    Mat grid = io::read_matrix_file(kData + "/" + stem + ".txt");
    Mat json = io::read_matrix_file(kData + "/" + stem + ".json");
    CHECK((grid - json).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("matrix json round-trips bit for bit") {
  Mat m(2, 2);
  m(0, 0) = C(-0.0, 1.0 / 3.0);
  m(0, 1) = C(1e300, -1e-308);
  m(1, 0) = C(3.141592653589793, -2.2250738585072014e-308);
  m(1, 1) = C(-123456789.123456789, 0.1);
  Mat back = io::parse_matrix_json(io::matrix_to_json(m));
  REQUIRE(back.rows() == 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(bits_equal(back(i, j).real(), m(i, j).real()));
      CHECK(bits_equal(back(i, j).imag(), m(i, j).imag()));
    }
  }
  // sign of zero survives
  CHECK(std::signbit(back(0, 0).real()));
}

TEST_CASE("matrix json errors name the offending field") {
  auto message = [](auto fn) -> std::string {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  std::string m1 = message([] { io::parse_matrix_json("{\"entries\": []}"); });
  CHECK(m1.find("dim") != std::string::npos);
  std::string m2 =
      message([] { io::parse_matrix_json("{\"dim\": 0, \"entries\": []}"); });
  CHECK(m2.find("dim") != std::string::npos);
  std::string m3 = message([] {
    io::parse_matrix_json("{\"dim\": 2, \"entries\": [[1, 2], [3, 4]]}");
  });
  CHECK(m3.find("entries") != std::string::npos);
  std::string m4 = message([] {
    io::parse_matrix_json(
        "{\"dim\": 1, \"entries\": [[1, \"x\"]]}");
  });
  CHECK(m4.find("entries[0]") != std::string::npos);
  CHECK_THROWS_AS(io::parse_matrix_json("{nope"), ParseError);
}

TEST_CASE("format_sig12 prints 12 significant digits") {
  CHECK(io::format_sig12(std::sqrt(2.0)) == "1.41421356237");
  CHECK(io::format_sig12(0.5) == "0.5");
  CHECK(io::format_sig12(-123456789012345.0) == "-1.23456789012e+14");
}

TEST_CASE("report and region json are well formed") {
  Mat a = io::read_matrix_file(kData + "/matrix_a.json");
  auto report = bound_report(a);
  auto doc = nlohmann::json::parse(io::bound_report_json(report));
  CHECK(doc["spectral_norm"].get<double>() ==
        doctest::Approx(report.spectral_norm).epsilon(1e-11));
  CHECK(doc["classical"].get<double>() ==
        doctest::Approx(report.classical).epsilon(1e-11));
  CHECK(doc["kittaneh_power"].is_number());
  CHECK(doc["kittaneh_mean"].is_number());
  CHECK(doc["corollary"].get<double>() ==
        doctest::Approx(report.octagon).epsilon(1e-11));
  CHECK(doc["ratios"]["corollary"].is_number());

  auto region = enclosure_region(cartesian_split(a));
  auto rdoc = nlohmann::json::parse(io::region_json(region));
  CHECK(rdoc["kind"].is_string());
  CHECK(rdoc["vertices"].is_array());

  EnclosureRegion<double> seg = Segment<double>{Vec2<double>(1.5, -2)};
  auto sdoc = nlohmann::json::parse(io::region_json(seg));
  CHECK(sdoc["kind"] == "segment");
  CHECK(sdoc["endpoint"][0].get<double>() == doctest::Approx(1.5));
  CHECK(sdoc["vertices"].size() == 2);
}

TEST_CASE("cli bounds matches the library and exits cleanly") {
  auto res = run_cli("bounds " + kData + "/matrix_a.json");
  REQUIRE(res.code == 0);
  auto doc = nlohmann::json::parse(res.out);
  auto report = bound_report(io::read_matrix_file(kData + "/matrix_a.json"));
  CHECK(doc["spectral_norm"].get<double>() ==
        doctest::Approx(report.spectral_norm).epsilon(1e-10));
  CHECK(doc["corollary"].get<double>() ==
        doctest::Approx(report.octagon).epsilon(1e-10));
}

TEST_CASE("cli octagon agrees with the in-process region") {
  for (const std::string norm : {"spectral", "one", "inf", "frobenius"}) {
    auto res = run_cli("octagon " + kData + "/matrix_b.json --norm " + norm);
    REQUIRE(res.code == 0);
    auto doc = nlohmann::json::parse(res.out);
    NormKind kind = norm == "spectral"   ? NormKind::Spectral
                    : norm == "one"      ? NormKind::InducedOne
                    : norm == "inf"      ? NormKind::InducedInf
                                         : NormKind::Frobenius;
    auto region = enclosure_region(
        cartesian_split(io::read_matrix_file(kData + "/matrix_b.json")), kind);
    const auto& poly = std::get<ConvexPolygon<double>>(region);
    CHECK(doc["kind"].get<std::string>() == shape_name(poly.shape));
    REQUIRE(doc["vertices"].size() == poly.vertices.size());
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
      CHECK(doc["vertices"][i][0].get<double>() ==
            doctest::Approx(poly.vertices[i].x()).epsilon(1e-10));
      CHECK(doc["vertices"][i][1].get<double>() ==
            doctest::Approx(poly.vertices[i].y()).epsilon(1e-10));
    }
  }
}

TEST_CASE("cli check passes honestly and fails when the region shrinks") {
  auto good = run_cli("check " + kData + "/matrix_a.json --seed 5");
  CHECK(good.code == 0);
  CHECK(good.out.find("result: PASS") != std::string::npos);

  auto bad = run_cli("check " + kData +
                     "/matrix_a.json --seed 5 --debug-scale-region 0.8");
  CHECK(bad.code == 4);
  CHECK(bad.out.find("result: FAIL") != std::string::npos);
  CHECK(bad.out.find("VIOLATED") != std::string::npos);
}

TEST_CASE("cli maps errors to distinct exit codes") {
  auto dir = tmp_dir();
  auto zero = dir / "zero.json";
  spit(zero, "{\"dim\": 2, \"entries\": [[0,0],[0,0],[0,0],[0,0]]}");
  CHECK(run_cli("bounds " + zero.string()).code == 3);

  CHECK(run_cli("bounds " + dir.string() + "/does_not_exist.json").code == 2);

  auto mangled = dir / "mangled.json";
  spit(mangled, "{\"dim\": 2, \"entries\": [[0,0]]}");
  auto res = run_cli("bounds " + mangled.string());
  CHECK(res.code == 2);
  CHECK(res.err.find("entries") != std::string::npos);

  CHECK(run_cli("octagon " + kData + "/matrix_a.json --norm nuclear").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("check " + kData + "/matrix_a.json --angles 1").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli octagon reports segments for Hermitian multiples") {
  auto dir = tmp_dir();
  auto herm = dir / "herm.json";
  // (1+i) times the symmetric flip
  spit(herm, "{\"dim\": 2, \"entries\": [[0,0],[1,1],[1,1],[0,0]]}");
  auto res = run_cli("octagon " + herm.string());
  REQUIRE(res.code == 0);
  auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["kind"] == "segment");
  double ex = doc["endpoint"][0].get<double>();
  double ey = doc["endpoint"][1].get<double>();
  CHECK(std::abs(std::abs(ex) - 1.0) < 1e-9);
  CHECK(std::abs(std::abs(ey) - 1.0) < 1e-9);
}

TEST_CASE("cli plot writes deterministic svg and honors write failures") {
  auto dir = tmp_dir();
  auto svg1 = dir / "plot1.svg";
  auto svg2 = dir / "plot2.svg";
  auto res1 = run_cli("plot " + kData + "/matrix_a.json " + svg1.string() +
                      " --angles 180 --samples 40 --seed 3");
  REQUIRE(res1.code == 0);
  auto res2 = run_cli("plot " + kData + "/matrix_a.json " + svg2.string() +
                      " --angles 180 --samples 40 --seed 3");
  REQUIRE(res2.code == 0);
  std::string body1 = slurp(svg1);
  CHECK(body1.rfind("<svg", 0) == 0);
  CHECK(body1.find("</svg>") != std::string::npos);
  CHECK(body1.find("stroke-dasharray") != std::string::npos);
  CHECK(body1 == slurp(svg2));

  auto res3 = run_cli("plot " + kData + "/matrix_a.json /no_such_dir/x.svg");
  CHECK(res3.code == 5);
}

TEST_CASE("cli ensemble is reproducible and speaks csv") {
  std::string args = "ensemble --sizes 2,3 --trials 6 --seed 42 --threads 2";
  auto a = run_cli(args);
  auto b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["m"] == 2);
  CHECK(doc[1]["m"] == 3);
  for (const auto& row : doc) {
    CHECK(row["trials"] == 6);
    CHECK(row["kittaneh_power"].get<double>() > 0.3);
    CHECK(row["kittaneh_power"].get<double>() <= 1.0 + 1e-12);
    CHECK(row["corollary"].get<double>() > 0.3);
  }

  auto csv = run_cli(args + " --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("m,trials,kittaneh_power,kittaneh_mean,corollary\n", 0) == 0);

  // single-thread run agrees with the two-thread run
  auto single = run_cli("ensemble --sizes 2,3 --trials 6 --seed 42 --threads 1");
  CHECK(single.out == a.out);
}
