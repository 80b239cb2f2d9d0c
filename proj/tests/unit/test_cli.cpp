// Copyright 2026 The rggdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#ifdef RGG_HAVE_CLI

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "rgg/commands.hpp"
#include "rgg/distances.hpp"

using namespace rgg;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"rgg"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("pdf3 reports density, case and geometry") {
    const auto r = run({"pdf3", "--r12", "0.5", "--r13", "0.5", "--r23", "0.5"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["density"].get<double>() == joint_pdf3({0.5, 0.5, 0.5}, DiskDomain(1.0)).density);
    CHECK(j["case_tag"] == "acute_inscribed");
    CHECK(j["Q"].get<double>() == doctest::Approx(0.1875));
    CHECK(j["rbar"].get<double>() == 0.5);

    const auto z = nlohmann::json::parse(run({"pdf3", "--r12", "0.3", "--r13", "0.3", "--r23", "0.9"}).out);
    CHECK(z["density"].get<double>() == 0.0);
    CHECK(z["case_tag"] == "zero_support");
    CHECK(z["d"].is_null());
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({"pdf3", "--r12", "-0.5", "--r13", "0.5", "--r23", "0.5"}).code == 2);
    CHECK(run({"pdf3", "--r12", "0.5"}).code == 2);
    CHECK(run({"pdf3", "--r12", "abc", "--r13", "0.5", "--r23", "0.5"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"pmf", "--model", "hard:r0=x"}).code == 2);
    CHECK(run({"sweep-connectivity", "--r0-start", "0.5", "--r0-stop", "0.2"}).code == 2);
    CHECK(run({"sweep-connectivity", "--steps", "1"}).code == 2);
    CHECK(run({"validate", "nothing"}).code == 2);
    CHECK(run({"pairpdf", "--r", "0.5", "--diameter", "0"}).code == 2);
  }

  TEST_CASE("unsupported requests exit 3") {
    CHECK(run({"pmf", "--n", "4"}).code == 3);
    CHECK(run({"entropy", "--n", "5"}).code == 3);
    CHECK(run({"sweep-connectivity", "--n", "4"}).code == 3);
    CHECK(run({"sweep-entropy", "--n", "7", "--mc"}).code == 3);
  }

  TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

  TEST_CASE("pmf and entropy") {
    const auto r = run({"pmf", "--n", "3", "--model", "hard:r0=0.4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["probs"].size() == 8);
    CHECK(j["probs"][7]["edges"] == "111");
    CHECK(j["method"] == "quadrature");
    CHECK(j["settings"]["model"] == "hard:r0=0.4");
    const auto e = nlohmann::json::parse(run({"entropy", "--n", "2", "--model", "hard:r0=0.4"}).out);
    CHECK(e["entropy_bits"].get<double>() > 0.9);
    const auto m = run({"entropy-mc", "--n", "4", "--samples", "20000", "--model", "hard:r0=0.4"});
    REQUIRE(m.code == 0);
    CHECK(nlohmann::json::parse(m.out)["settings"]["mc"]["samples"] == 20000);
  }

  TEST_CASE("bounds") {
    const auto r = run({"bounds", "--n", "5", "--model", "hard:r0=0.4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["factor"] == "10/3");
    CHECK(j["entries"][1]["factor"] == "10/1");
    CHECK(j["tightest_bits"].get<double>() <= j["entries"][1]["bound_bits"].get<double>());
  }

  TEST_CASE("connectivity sweep csv") {
    const auto r = run({"sweep-connectivity", "--steps", "6", "--seed", "5"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 8);
    CHECK(l[0].rfind("# seed=5 ", 0) == 0);
    CHECK(l[0].find("rng=philox4x32-10") != std::string::npos);
    CHECK(l[1] == "r0,p_connected,p_complete,method,err_est");
    CHECK(l[2].rfind("0,0,0,quadrature,", 0) == 0);
    CHECK(l[7].rfind("1,", 0) == 0);
    double last_conn = -1.0, last_comp = -1.0;
    for (std::size_t i = 2; i < l.size(); ++i) {
      std::istringstream row(l[i]);
      std::string r0, conn, comp;
      std::getline(row, r0, ',');
      std::getline(row, conn, ',');
      std::getline(row, comp, ',');
      CHECK(std::stod(comp) <= std::stod(conn));
      CHECK(std::stod(conn) >= last_conn - 1e-3);
      CHECK(std::stod(comp) >= last_comp - 1e-3);
      last_conn = std::stod(conn);
      last_comp = std::stod(comp);
    }
    CHECK(last_conn == doctest::Approx(1.0).epsilon(1e-3));
  }

  TEST_CASE("entropy sweep csv with sampling") {
    const auto r = run({"sweep-entropy", "--n", "4", "--mc", "--samples", "20000", "--steps", "3",
                        "--r0-start", "0.2", "--r0-stop", "0.6"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 5);
    CHECK(l[0].find("samples=20000") != std::string::npos);
    CHECK(l[1] == "r0,H_exact_or_mc,H_std_err,bound_from_G3,bound_from_G2");
    CHECK(l[2].rfind("0.2,", 0) == 0);
    CHECK(l[3].rfind("0.4,", 0) == 0);
  }

  TEST_CASE("entropy sweep for two nodes leaves the three-node bound empty") {
    const auto r = run({"sweep-entropy", "--n", "2", "--steps", "2"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 4);
    CHECK(l[2] == "0,0,0,,0");
  }

  TEST_CASE("soft model sweep") {
    const auto r = run({"sweep-connectivity", "--model", "exp:beta=2", "--steps", "3"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).size() == 5);
    CHECK(run({"sweep-connectivity", "--model", "table:@x.csv", "--steps", "3"}).code == 2);
  }

  TEST_CASE("validation report") {
    const auto r = run({"validate", "pair", "--samples", "100000"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 2);
    CHECK(j["settings"]["mc"]["seed"] == 1);
  }

  TEST_CASE("repeated runs are identical and --out writes the same bytes") {
    const auto a = run({"pmf", "--n", "3", "--mc", "--samples", "30000", "--workers", "3", "--seed", "9"});
    const auto b = run({"pmf", "--n", "3", "--mc", "--samples", "30000", "--workers", "3", "--seed", "9"});
    CHECK(a.out == b.out);
    const auto path = (std::filesystem::temp_directory_path() / "rgg_cli_out.json").string();
    const auto c = run({"pmf", "--n", "3", "--mc", "--samples", "30000", "--workers", "3", "--seed", "9", "--out",
                        path.c_str()});
    CHECK(c.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == a.out);
  }

  TEST_CASE("csv numbers use 12 significant digits") {
    CHECK(cli::format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(cli::format_number(1234567.0) == "1234567");
    CHECK(cli::format_number(-0.0) == "0");
    CHECK(cli::format_number(2.5e-7) == "2.5e-07");
  }
}

#endif
