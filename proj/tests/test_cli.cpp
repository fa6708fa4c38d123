#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "jhull/cli.hpp"

using jhull::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "jhull");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> csv_rows(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return rows;
}

Json csv_header(const std::string& text) {
  REQUIRE(text.rfind("# ", 0) == 0);
  return Json::parse(text.substr(2, text.find('\n') - 2));
}

std::vector<double> column(const std::vector<std::string>& rows, int col) {
  std::vector<double> v;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream is(rows[i]);
    std::string cell;
    for (int c = 0; c <= col; ++c) std::getline(is, cell, ',');
    v.push_back(std::stod(cell));
  }
  return v;
}

int system_exit(const std::string& args) {
  const std::string cmd = std::string(JHULL_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config errors exit with 2") {
  CHECK(invoke({"coeffs", "dump", "--lambda", "2.5"}).code == 2);
  CHECK(invoke({"coeffs", "dump", "--lambda", "five"}).code == 2);
  CHECK(invoke({"no-such-command"}).code == 2);
  CHECK(invoke({"verify", "--tol", "bogus=1"}).code == 2);
  CHECK(invoke({"verify", "--tol", "v_identity=abc"}).code == 2);
  CHECK(invoke({"verify", "--digits", "16"}).code == 2);
  CHECK(invoke({"ruelle", "coeffs", "--n", "10", "--digits", "8"}).code == 2);
  CHECK(invoke({"dyadic", "--kappa", "12x"}).code == 2);

  auto small = invoke({"coeffs", "dump", "--lambda", "2.5", "--allow-small-lambda", "--depth", "3"});
  CHECK(small.code == 0);
  CHECK(csv_rows(small.out).size() == 9);
}

TEST_CASE("the installed binary reports the same exit codes") {
  CHECK(system_exit("coeffs at --kappa 5") == 0);
  CHECK(system_exit("coeffs dump --lambda 5/2") == 2);
  CHECK(system_exit("hull v-identity --kappa 1 --truncation 64 --tol v_identity=1e-300") == 1);
}

TEST_CASE("every output carries the header") {
  auto r = invoke({"coeffs", "at", "--kappa", "6", "--tol", "reflection=1e-7"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  const auto& h = j["header"];
  CHECK(h["lambda"] == "4");
  CHECK(h["M"] == 32);
  CHECK(h["N"] == 1024);
  CHECK(h["tolerances"]["reflection"] == 1e-7);
  CHECK(h["version"].get<std::string>().rfind("jhull ", 0) == 0);

  auto csv = invoke({"dynamics", "w", "--n", "2", "--points", "5"});
  CHECK(csv_header(csv.out)["M"] == 32);
}

TEST_CASE("coeffs") {
  auto dump = invoke({"coeffs", "dump", "--depth", "4"});
  REQUIRE(dump.code == 0);
  auto rows = csv_rows(dump.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[0] == "n,a_sq_num,a_sq_den,a_float");
  CHECK(rows[5].rfind("4,1,3,", 0) == 0);
  CHECK(rows[8].rfind("7,35,11,", 0) == 0);

  auto at = invoke({"coeffs", "at", "--kappa", "1(10)*"});
  REQUIRE(at.code == 0);
  auto j = Json::parse(at.out);
  CHECK(j["truncated_to"] == 24);
  CHECK(j.contains("value"));
  CHECK(j.contains("error_bound"));
  CHECK(j["representative"].get<std::uint64_t>() < (1u << 24));

  auto three = Json::parse(invoke({"coeffs", "at", "--kappa", "3"}).out);
  CHECK(three["value"].get<double>() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("dyadic and dynamics") {
  auto d = invoke({"dyadic", "--kappa", "5", "--digits", "8", "--steps", "2"});
  REQUIRE(d.code == 0);
  auto j = Json::parse(d.out);
  CHECK(j["kappa"] == "10100000(M=8)");
  CHECK(j["modified_shift_orbit"][1] == "1100000(M=7)");
  CHECK(j["representative"] == 5);

  auto w = invoke({"dynamics", "w", "--n", "3", "--points", "11"});
  REQUIRE(w.code == 0);
  auto rows = csv_rows(w.out);
  CHECK(rows[0] == "x,n,w_value,lower_bound,upper_bound,within_bounds");
  CHECK(rows.size() == 1 + 11 * 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ends_with(",true"));

  auto tree = invoke({"dynamics", "preimages", "--root", "1", "--tree-depth", "3"});
  CHECK(csv_rows(tree.out).size() == 1 + 8);

  CHECK(invoke({"dynamics", "invariance"}).code == 0);
}

TEST_CASE("hull") {
  auto v = invoke({"hull", "v-identity", "--kappa", "0", "--truncation", "256"});
  REQUIRE(v.code == 0);
  auto j = Json::parse(v.out);
  CHECK(j["identity"] == "V");
  CHECK(j["N"] == 256);
  CHECK(j["residual"].get<double>() < 1e-10);

  auto r = Json::parse(invoke({"hull", "renorm", "--kappa", "6", "--truncation", "256"}).out);
  CHECK(r["identity"] == "renormalization");
  CHECK(r["degree"] == 8);

  auto atoms = invoke({"hull", "atoms", "--kappa", "1", "--truncation", "64"});
  REQUIRE(atoms.code == 0);
  auto rows = csv_rows(atoms.out);
  CHECK(rows[0] == "x,W11,W12,W22");
  CHECK(rows.size() == 1 + 129);
  double mass = 0.0;
  for (double w : column(rows, 1)) mass += w;
  for (double w : column(rows, 3)) mass += w;
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-12));

  auto p = Json::parse(invoke({"hull", "probe", "--x", "6.5", "--truncation", "64"}).out);
  CHECK(p["values"].size() == 3);
}

TEST_CASE("ruelle") {
  auto c = invoke({"ruelle", "coeffs", "--kappa", "1", "--n", "2"});
  REQUIRE(c.code == 0);
  auto j = Json::parse(c.out);
  REQUIRE(j["coefficients"].size() == 3);
  CHECK(j["coefficients"][0].size() == 2);
  CHECK(j["coefficients"][0][0].size() == 2);

  auto cert = invoke({"ruelle", "certificate", "--kappa", "1(10)*", "--n", "8", "--grid", "50"});
  REQUIRE(cert.code == 0);
  auto k = Json::parse(cert.out);
  for (const char* key : {"kappa", "N_window", "n", "min_eig", "predicted_C1", "pass"}) CHECK(k.contains(key));
  CHECK(k["N_window"] == 2);
  CHECK(k["pass"] == true);

  auto s = invoke({"ruelle", "sandwich", "--kappa", "1(10)*", "--n", "6", "--grid", "40", "--truncation", "256"});
  CHECK(s.code == 0);
}

TEST_CASE("explore-measures") {
  auto same = invoke({"explore-measures", "--kappa-a", "3", "--kappa-b", "3", "--bins", "16", "--truncation", "128"});
  REQUIRE(same.code == 0);
  CHECK(same.out.find("exploratory: no singularity claim") != std::string::npos);
  auto rows = csv_rows(same.out);
  CHECK(rows[0] == "bin_lo,bin_hi,mass_a,mass_b");
  CHECK(column(rows, 2) == column(rows, 3));

  auto diff = invoke({"explore-measures", "--kappa-a", "0", "--kappa-b", "1(10)*", "--truncation", "128"});
  REQUIRE(diff.code == 0);
  auto drows = csv_rows(diff.out);
  CHECK(drows.size() == 65);
  double ma = 0.0, mb = 0.0;
  for (double v : column(drows, 2)) ma += v;
  for (double v : column(drows, 3)) mb += v;
  CHECK(ma == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mb == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("verify: default passes, deterministic, fault injection is caught") {
  auto a = invoke({"verify"});
  CHECK(a.code == 0);
  auto b = invoke({"verify"});
  CHECK(a.out == b.out);
  auto report = Json::parse(a.out);
  CHECK(report["pass"] == true);
  CHECK(report["checks"].size() >= 15);

  auto bad = invoke({"verify", "--corrupt-row", "99"});
  CHECK(bad.code == 1);
  auto br = Json::parse(bad.out);
  REQUIRE(!br["failed"].empty());
  CHECK(br["failed"][0] == "coefficient_relations");
  CHECK(br["checks"][0]["first_bad_row"].get<int>() <= 99);

  const std::string path = "verify_out_test.json";
  CHECK(invoke({"verify", "--out", path}).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
  f.close();
  std::remove(path.c_str());
}
