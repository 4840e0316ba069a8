#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "herglotz/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kSpecs = HERGLOTZ_SPECS_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "herglotz");
  std::ostringstream out, err;
  const int code = herglotz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Fresh scratch directory per call.
fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("herglotz_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const fs::path& p) { return json::parse(slurp(p)); }

std::string spec(const std::string& name) { return kSpecs + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("extract z^(1/2)") {
    const fs::path dir = scratch("extract_sqrt");
    const Run r = run({"extract", "--spec", spec("sqrt.json"), "--out", dir.string()});
    REQUIRE(r.code == herglotz::cli::kOk);
    CHECK(fs::exists(dir / "atoms.json"));
    CHECK(fs::exists(dir / "summary.json"));
    std::istringstream csv(slurp(dir / "density.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "x,re,im,error_est");
    bool found = false;
    while (std::getline(csv, line)) {
      if (line.rfind("-1,", 0) != 0) continue;
      found = true;
      const double re = std::stod(line.substr(3, line.find(',', 3) - 3));
      CHECK(std::abs(re - 0.159155) <= 1e-6);
    }
    CHECK(found);
  }

  TEST_CASE("extract tan away from the poles") {
    const fs::path dir = scratch("extract_tan");
    const Run r = run({"extract", "--spec", spec("tan.json"), "--out", dir.string()});
    REQUIRE(r.code == herglotz::cli::kOk);
    std::istringstream csv(slurp(dir / "density.csv"));
    std::string line;
    std::getline(csv, line);
    double worst = 0.0;
    int rows = 0;
    while (std::getline(csv, line)) {
      std::istringstream fields(line);
      std::string x, re, im;
      std::getline(fields, x, ',');
      std::getline(fields, re, ',');
      std::getline(fields, im, ',');
      worst = std::max({worst, std::abs(std::stod(re)), std::abs(std::stod(im))});
      ++rows;
    }
    CHECK(rows > 100);
    CHECK(worst <= 1e-8);
  }

  TEST_CASE("extract z^(3/2) diverges at infinity") {
    const fs::path dir = scratch("extract_p15");
    const Run r = run({"extract", "--spec", spec("power_1_5.json"), "--out", dir.string()});
    CHECK(r.code == herglotz::cli::kDiverged);
    CHECK(r.err.find("non-simple behavior near") != std::string::npos);
    CHECK(read_json(dir / "summary.json").at("status") == "non-simple");
  }

  TEST_CASE("check suite on tan") {
    const fs::path dir = scratch("check_tan");
    const Run r = run({"check", "--spec", spec("tan.json"), "--out", dir.string()});
    CHECK(r.code == herglotz::cli::kOk);
    const json report = read_json(dir / "check.json");
    std::vector<std::string> names;
    for (const auto& c : report.at("checks")) {
      names.push_back(c.at("name"));
      CHECK(c.at("pass") == true);
    }
    CHECK(names == std::vector<std::string>{"vladimirov", "appendixC-identity", "circle-line"});
    const json& v = report.at("checks").at(0);
    CHECK(v.at("bound").get<double>() == doctest::Approx(1.2071067811865475 * std::tanh(1.0)));
    CHECK(v.at("norm").get<double>() <= v.at("bound").get<double>());
    CHECK(report.at("checks").at(1).at("max_error").get<double>() <= 1e-10);
  }

  TEST_CASE("circle-line check on z^(1/2)") {
    const Run r = run({"check", "--spec", spec("sqrt.json"), "--check", "circle-line", "--window=-4,-1"});
    CHECK(r.code == herglotz::cli::kOk);
    const json j = json::parse(r.out);
    CHECK(j.at("checks").at(0).at("report").at("gap").get<double>() <= 1e-4);
    const Run strict =
        run({"check", "--spec", spec("sqrt.json"), "--check", "circle-line", "--window=-4,-1", "--tol", "1e-30"});
    CHECK(strict.code == herglotz::cli::kCheckFailed);
  }

  TEST_CASE("reconstruct 1/log z") {
    const fs::path dir = scratch("rec_invlog");
    const Run r = run({"reconstruct", "--spec", spec("inv_log.json"), "--out", dir.string()});
    REQUIRE(r.code == herglotz::cli::kOk);
    const json m = read_json(dir / "measure.json");
    bool found = false;
    for (const auto& a : m.at("atoms")) {
      if (!a.at("loc").is_number() || a.at("loc").get<double>() != 1.0) continue;
      found = true;
      CHECK(std::abs(a.at("mass").at(0).get<double>() + 0.5) <= 1e-8);
      CHECK(std::abs(a.at("mass").at(1).get<double>()) <= 1e-8);
    }
    CHECK(found);
    CHECK(fs::exists(dir / "diagnostics.json"));
  }

  TEST_CASE("reconstruct the rational example") {
    const fs::path dir = scratch("rec_rational");
    const Run r = run({"reconstruct", "--spec", spec("rational.json"), "--out", dir.string()});
    REQUIRE(r.code == herglotz::cli::kOk);
    const json m = read_json(dir / "measure.json");
    int seen = 0;
    for (const auto& a : m.at("atoms")) {
      const double re = a.at("mass").at(0), im = a.at("mass").at(1);
      if (a.at("loc") == "inf") {
        CHECK(std::abs(re - 2.0) <= 1e-9);
        CHECK(std::abs(im) <= 1e-9);
        ++seen;
      } else if (a.at("loc").get<double>() == 5.0) {
        CHECK(std::abs(re - 4.0 / 26) <= 1e-9);
        CHECK(std::abs(im - 1.0 / 26) <= 1e-9);
        ++seen;
      }
    }
    CHECK(seen == 2);
  }

  TEST_CASE("reconstruct -1/z and the residual bound") {
    const Run ok = run({"reconstruct", "--spec", spec("minus_inverse.json")});
    REQUIRE(ok.code == herglotz::cli::kOk);
    const json j = json::parse(ok.out);
    CHECK(j.at("residual").get<double>() <= 1e-10);
    CHECK(j.at("atoms").size() == 1);
    const Run tight = run({"reconstruct", "--spec", spec("minus_inverse.json"), "--tol", "1e-30"});
    CHECK(tight.code == herglotz::cli::kCheckFailed);
  }

  TEST_CASE("mobius pushforward of atoms") {
    const fs::path dir = scratch("mobius");
    const Run r = run({"mobius", "--spec", spec("point_mass.json"), "--out", dir.string()});
    REQUIRE(r.code == herglotz::cli::kOk);
    // z -> -1/z: the atom at 1 moves to -1, the one at infinity to 0; weights are 1
    const json m = read_json(dir / "measure.json");
    REQUIRE(m.at("atoms").size() == 2);
    CHECK(m.at("atoms").at(0).at("loc").get<double>() == doctest::Approx(-1.0));
    CHECK(m.at("atoms").at(0).at("mass").at(0).get<double>() == doctest::Approx(1.0));
    CHECK(m.at("atoms").at(1).at("loc").get<double>() == 0.0);
    CHECK(m.at("atoms").at(1).at("mass").at(0).get<double>() == doctest::Approx(0.5));
    CHECK(run({"mobius", "--spec", spec("point_mass.json"), "--matrix", "1,2,2,4"}).code ==
          herglotz::cli::kConfigError);
  }

  TEST_CASE("phi profile") {
    const fs::path dir = scratch("phi");
    const Run r = run({"phi-profile", "--spec", spec("phi_minus_inverse.json"), "--out", dir.string()});
    REQUIRE(r.code == herglotz::cli::kOk);
    std::istringstream csv(slurp(dir / "phi.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "t,re,im");
    bool zero_seen = false;
    while (std::getline(csv, line)) {
      if (line.rfind("0,", 0) != 0) continue;
      zero_seen = true;
      const double im = std::stod(line.substr(line.rfind(',') + 1));
      CHECK(std::abs(im + std::acos(-1.0) / 2) <= 1e-8);
    }
    CHECK(zero_seen);
  }

  TEST_CASE("circle-line refuses windows with atoms") {
    const Run r = run({"circle-line", "--spec", spec("tan.json"), "--window", "1,2"});
    CHECK(r.code == herglotz::cli::kConfigError);
    CHECK(r.err.find("--force") != std::string::npos);
    const Run ok = run({"circle-line", "--spec", spec("tan.json")});
    CHECK(ok.code == herglotz::cli::kOk);
    CHECK(json::parse(ok.out).at("gap").get<double>() <= 1e-4);
  }

  TEST_CASE("configuration errors") {
    CHECK(run({"extract", "--spec", "/nonexistent/spec.json"}).code == herglotz::cli::kConfigError);
    CHECK(run({"extract"}).code == herglotz::cli::kConfigError);
    CHECK(run({"frobnicate"}).code == herglotz::cli::kConfigError);
    CHECK(run({"extract", "--spec", spec("tan.json"), "--window", "2,1"}).code == herglotz::cli::kConfigError);
    CHECK(run({"extract", "--spec", spec("tan.json"), "--side", "sideways"}).code == herglotz::cli::kConfigError);
    CHECK(run({"check", "--spec", spec("tan.json"), "--check", "nonsense"}).code == herglotz::cli::kConfigError);

    const fs::path dir = scratch("bad_json");
    fs::create_directories(dir);
    std::ofstream(dir / "bad.json") << "{ not json";
    CHECK(run({"extract", "--spec", (dir / "bad.json").string()}).code == herglotz::cli::kConfigError);
    std::ofstream(dir / "neg.json") << R"({"function": {"kind": "tan_sigma_log", "sigma": -1}})";
    CHECK(run({"extract", "--spec", (dir / "neg.json").string()}).code == herglotz::cli::kConfigError);
  }

  TEST_CASE("outputs are byte-identical across runs") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    REQUIRE(run({"extract", "--spec", spec("sqrt.json"), "--out", a.string()}).code == 0);
    REQUIRE(run({"extract", "--spec", spec("sqrt.json"), "--out", b.string()}).code == 0);
    for (const char* f : {"density.csv", "atoms.json", "summary.json"}) CHECK(slurp(a / f) == slurp(b / f));
    const fs::path c = scratch("det_c"), d = scratch("det_d");
    REQUIRE(run({"reconstruct", "--spec", spec("inv_log.json"), "--out", c.string()}).code == 0);
    REQUIRE(run({"reconstruct", "--spec", spec("inv_log.json"), "--out", d.string()}).code == 0);
    CHECK(slurp(c / "measure.json") == slurp(d / "measure.json"));
    CHECK(slurp(c / "diagnostics.json") == slurp(d / "diagnostics.json"));
  }
}
