#include "fgeo/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using namespace fgeo;
using namespace fgeo::cli;

namespace {

RunReport run(std::vector<std::string> args) { return dispatch(args); }

const ReportValue* entry(const RunReport& r, const std::string& key) {
  if (!r.result) return nullptr;
  for (const auto& [k, v] : *r.result) {
    if (k == key) return &v;
  }
  return nullptr;
}

template <class T>
const T& get(const RunReport& r, const std::string& key) {
  const auto* v = entry(r, key);
  REQUIRE(v != nullptr);
  REQUIRE(std::holds_alternative<T>(*v));
  return std::get<T>(*v);
}

}  // namespace

TEST_CASE("documented examples") {
  const auto pc = run({"cosmo", "point-count", "--rho-vac", "5.4e-10", "--l-u", "8.8e26"});
  CHECK(pc.exit_code == 0);
  CHECK(get<Quantity>(pc, "point_count").value == doctest::Approx(3.3e123).epsilon(0.03));
  CHECK(get<Quantity>(pc, "point_count").unit == "1");

  const auto table = run({"field", "table", "--p", "2", "--k", "2"});
  CHECK(table.exit_code == 0);
  const auto& mul = get<StringTable>(table, "multiplication");
  REQUIRE(mul.size() == 5);
  CHECK(mul[0][3] == "α");
  CHECK(mul[3][0] == "α");
  CHECK(mul[3][3] == "1+α");

  const auto deg = run({"geometry", "degenerate", "--q", "3", "--dim", "2"});
  CHECK(deg.exit_code == 0);
  CHECK(deg.status() == "none");
  CHECK(render_text(deg).find("none found") != std::string::npos);
  const auto json = render_json(deg);
  CHECK(json.find("\"result\": null") != std::string::npos);
  CHECK(json.find("\"status\": \"none\"") != std::string::npos);

  const auto zeta = run({"regularize", "zeta", "--s", "1"});
  CHECK(get<RationalNumber>(zeta, "value") == RationalNumber(BigInt(-1), BigInt(12)));
  const auto zj = render_json(zeta);
  CHECK(zj.find("\"num\": -1") != std::string::npos);
  CHECK(zj.find("\"den\": 12") != std::string::npos);

  const auto r5 = run({"field", "info", "--p", "5", "--gaussian"});
  CHECK(r5.exit_code == 1);
  CHECK(r5.error == "NotAField");
  CHECK(r5.witness == "(2+i)*(2+4i)=0");
  const auto r5j = render_json(r5);
  CHECK(r5j.find("\"error\": \"NotAField\"") != std::string::npos);
  CHECK(r5j.find("\"witness\"") != std::string::npos);
}

TEST_CASE("physics outputs carry units") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"cosmo", "lambda"},
           {"cosmo", "min-diameter"},
           {"cosmo", "planck-density"},
           {"cosmo", "growth", "--gyr", "6"},
           {"cosmo", "rate"},
           {"cosmo", "density"},
           {"cosmo", "accel"},
           {"regularize", "vacuum-partial", "--l", "1", "--n", "3"},
           {"regularize", "mode-energy", "--kx", "1"}}) {
    const auto r = run(args);
    CAPTURE(args[1]);
    REQUIRE(r.exit_code == 0);
    for (const auto& [k, v] : *r.result) {
      if (const auto* q = std::get_if<Quantity>(&v)) CHECK_FALSE(q->unit.empty());
    }
  }
  const auto g = run({"cosmo", "growth", "--gyr", "6"});
  CHECK(get<Quantity>(g, "factor").value == doctest::Approx(5.25).epsilon(0.01));
}

TEST_CASE("exit codes") {
  CHECK(run({"field", "add", "--p", "7", "--a", "3", "--b", "5"}).exit_code == 0);
  CHECK(get<std::string>(run({"field", "add", "--p", "7", "--a", "3", "--b", "5"}), "value") == "1");
  CHECK(run({"nonsense", "info"}).exit_code == 2);
  CHECK(run({"field", "frobnicate", "--p", "3"}).exit_code == 2);
  CHECK(run({"field", "info"}).exit_code == 2);                        // missing required flag
  CHECK(run({"field", "info", "--p", "3", "--bogus", "1"}).exit_code == 2);
  CHECK(run({"field", "info", "--p", "three"}).exit_code == 2);
  CHECK(run({"field", "info", "--p", "3", "--format", "yaml"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"field", "info", "--p", "6"}).exit_code == 1);
  CHECK(run({"field", "inv", "--p", "5", "--a", "0"}).exit_code == 1);
  CHECK(run({"geometry", "ordinary", "--points", "0,0;1,1"}).exit_code == 1);
  CHECK(run({"cosmo", "rate", "--kappa", "1"}).error == "CurvatureUnsupported");
  CHECK(run({"regularize", "bernoulli", "--n", "65"}).error == "RangeLimit");
}

TEST_CASE("JSON round trip and determinism") {
  const std::vector<std::vector<std::string>> cases = {
      {"field", "table", "--p", "3", "--gaussian"},
      {"field", "axioms", "--ring", "6"},
      {"geometry", "degenerate", "--q", "5"},
      {"geometry", "degenerate", "--q", "3"},
      {"geometry", "incidence", "--q", "3"},
      {"geometry", "hesse", "--q", "2"},
      {"geometry", "ordinary", "--points", "0,0;1,0;0,1;1/2,1/2"},
      {"geometry", "metric", "--table", "0,0,1;0,0,1;1,1,0"},
      {"geometry", "cardinality", "--order", "1024", "--dim", "40"},
      {"hilbert", "isotropic", "--p", "2", "--k", "2"},
      {"hilbert", "inner", "--p", "3", "--gaussian", "--u", "3,1", "--v", "3,1"},
      {"regularize", "bernoulli", "--n", "30"},
      {"regularize", "vacuum-regularized", "--l", "1"},
      {"cosmo", "point-count"},
      {"cosmo", "planck-density", "--l-planck", "1.616e-35"},
      {"cosmo", "evolve", "--eos", "vacuum", "--t-end", "1e18", "--step", "1e15", "--samples", "4"},
      {"field", "info", "--p", "5", "--gaussian"},
      {"field", "info"},
  };
  for (const auto& args : cases) {
    CAPTURE(args[0] + " " + args[1]);
    const auto report = run(args);
    const auto json = render_json(report);
    CHECK(render_json(run(args)) == json);
    const auto back = parse_json_report(json);
    CHECK(back == report);
    CHECK(render_json(back) == json);
  }
}

TEST_CASE("inputs are echoed with defaults applied") {
  const auto r = run({"geometry", "lines", "--q", "2"});
  REQUIRE(r.exit_code == 0);
  CHECK(std::find(r.inputs.begin(), r.inputs.end(), std::pair<std::string, std::string>{"dim", "2"}) !=
        r.inputs.end());
  CHECK(get<BigInt>(r, "line_count") == 6);
}

TEST_CASE("config file overrides defaults") {
  const std::string path = "fgeo_test_config.conf";
  {
    std::ofstream out(path);
    out << "rho_vac = 1.08e-9\n";
  }
  const auto base = run({"cosmo", "point-count"});
  const auto doubled = run({"cosmo", "point-count", "--config", path});
  REQUIRE(doubled.exit_code == 0);
  CHECK(get<Quantity>(doubled, "point_count").value ==
        doctest::Approx(2 * get<Quantity>(base, "point_count").value).epsilon(1e-12));
  // Explicit flags win over the file.
  const auto flagged = run({"cosmo", "point-count", "--config", path, "--rho-vac", "5.4e-10"});
  CHECK(get<Quantity>(flagged, "point_count").value ==
        doctest::Approx(get<Quantity>(base, "point_count").value).epsilon(1e-12));
  std::remove(path.c_str());
  CHECK(run({"cosmo", "point-count", "--config", path}).exit_code == 1);
}
