// End-to-end checks of the coxcli binary: exit codes, JSON report shapes,
// default radius selection, and byte-determinism of repeated runs.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "support/fixtures.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout so error text is observable.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(COXCLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(COX_FIXTURE_DIR) + "/" + name;
}

std::string strip_timing(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("\"timing_ms\"") == std::string::npos) out << line << "\n";
  return out.str();
}

nlohmann::json parse_report(const RunResult& r) {
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("validate summarizes a system and exits zero") {
  RunResult r = run_cli("validate " + fixture("sysb.cox"));
  CHECK(r.exit_code == 0);
  auto j = parse_report(r);
  CHECK(j["command"] == "validate");
  CHECK(j["rank"] == 4);
  CHECK(j["even"] == true);
  CHECK(j["spherical_subsets"] == 9);
  CHECK(j["max_longest"] == 4);
  CHECK(j["input_digest"].get<std::string>().rfind("fnv1a:", 0) == 0);
}

TEST_CASE("nerve reports the f-vector and flagness") {
  auto j = parse_report(run_cli("nerve " + fixture("sysd.cox")));
  CHECK(j["dim"] == 3);
  CHECK(j["f_vector"] == nlohmann::json({8, 24, 32, 16}));
  CHECK(j["flag"] == true);
  CHECK(j["euler_characteristic"] == 0);
}

TEST_CASE("flag failures carry the smallest missing face and exit one") {
  RunResult r = run_cli("flag " + fixture("hollow.cox"));
  CHECK(r.exit_code == 1);
  auto j = parse_report(r);
  CHECK(j["flag"] == false);
  CHECK(j["missing_face"].size() == 3);
}

TEST_CASE("sphere-check distinguishes the right dimension") {
  CHECK(run_cli("sphere-check --dim 1 " + fixture("sysb.cox")).exit_code == 0);
  CHECK(run_cli("sphere-check --dim 3 " + fixture("sysb.cox")).exit_code == 1);
  CHECK(run_cli("sphere-check --dim 3 " + fixture("sysd.cox")).exit_code == 0);
}

TEST_CASE("ball census counts layers and cells by type") {
  auto j = parse_report(run_cli("ball --radius 4 " + fixture("sysb.cox")));
  CHECK(j["vertex_count"] == 95);
  CHECK(j["layer_sizes"] == nlohmann::json({1, 4, 10, 24, 56}));
  CHECK(j["cells_by_type"]["{t,s}"] == 1);
  CHECK(j["cells_by_type"]["{t,q}"] == 8);
}

TEST_CASE("default radius is four for small rank and three beyond") {
  auto small = parse_report(run_cli("ball " + fixture("sysb.cox")));
  CHECK(small["parameters"]["radius"] == 4);
  auto large = parse_report(run_cli("ball " + fixture("sysd.cox")));
  CHECK(large["parameters"]["radius"] == 3);
}

TEST_CASE("one-letter ruin lists collars with parity") {
  auto j = parse_report(run_cli("ruin --gen t --radius 5 " + fixture("sysb.cox")));
  auto comp = j["identity_component"];
  CHECK(comp["collars"].get<int>() > 0);
  bool saw_even = false, saw_odd = false;
  for (const auto& c : comp["collar_list"]) {
    if (c["parity"] == "even") saw_even = true;
    if (c["parity"] == "odd") saw_odd = true;
  }
  CHECK(saw_even);
  CHECK(saw_odd);
}

TEST_CASE("two-letter ruin reports cell counts") {
  auto j = parse_report(run_cli("ruin --gen t --pair s --radius 5 " + fixture("sysb.cox")));
  CHECK(j["omega_cells"].get<long long>() > 0);
  CHECK(j["boundary_cells"].get<long long>() > 0);
  CHECK(j["hat_cells"].get<long long>() > j["omega_cells"].get<long long>());
}

TEST_CASE("svg strips are written for rank-3 systems and refused otherwise") {
  std::string path = "cli_strips_test.svg";
  RunResult ok = run_cli("ruin --gen t --radius 5 --svg " + path + " " + fixture("sysf.cox"));
  CHECK(ok.exit_code == 0);
  std::ifstream svg(path);
  REQUIRE(svg.good());
  std::stringstream buf;
  buf << svg.rdbuf();
  CHECK(buf.str().find("<svg") != std::string::npos);
  std::remove(path.c_str());

  RunResult bad = run_cli("ruin --gen t --svg " + path + " " + fixture("sysb.cox"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("rank-3") != std::string::npos);
}

TEST_CASE("colors partitions the identity component") {
  auto j = parse_report(run_cli("colors --gen t --radius 5 " + fixture("sysb.cox")));
  long long total = 0;
  for (const auto& c : j["classes"]) total += c["vertices"].get<long long>();
  CHECK(total == j["component_vertices"].get<long long>());
  CHECK(j["trivial_color"] == "e|e|e");
}

TEST_CASE("homology targets produce betti, torsion, and chi") {
  auto ball = parse_report(run_cli("homology --radius 4 " + fixture("sysb.cox")));
  CHECK(ball["betti"] == nlohmann::json({1, 0, 0}));
  auto nerve = parse_report(run_cli("homology --target nerve " + fixture("sysb.cox")));
  CHECK(nerve["betti"] == nlohmann::json({1, 1}));
  CHECK(nerve["chi"] == "0");
  auto pair = parse_report(
      run_cli("homology --target pair --gen t --pair s --radius 5 " + fixture("sysb.cox")));
  CHECK(pair["betti"].size() == 3);
  CHECK(pair["betti"][0] == 0);
}

TEST_CASE("euler characteristics come out as exact rationals") {
  auto orb = parse_report(run_cli("euler --orbihedral " + fixture("sysb.cox")));
  CHECK(orb["chi"] == "-1/4");
  auto orb_d = parse_report(run_cli("euler --orbihedral " + fixture("sysd.cox")));
  CHECK(orb_d["chi"] == "1/16");
  auto plain = parse_report(run_cli("euler " + fixture("sysb.cox")));
  CHECK(plain["chi"] == "0");
}

TEST_CASE("verify runs a single battery and aggregates over generators") {
  RunResult r = run_cli("verify --lemma 3.5 --radius 5 " + fixture("sysb.cox"));
  CHECK(r.exit_code == 0);
  auto j = parse_report(r);
  REQUIRE(j["verdicts"].size() == 1);
  auto v = j["verdicts"][0];
  CHECK(v["lemma"] == "3.5");
  CHECK(v["instances_checked"].get<long long>() > 0);
  CHECK(v["failures"].empty());

  RunResult one = run_cli("verify --lemma 3.5 --gen t --radius 5 " + fixture("sysb.cox"));
  auto vo = parse_report(one)["verdicts"][0];
  CHECK(vo["instances_checked"].get<long long>() < v["instances_checked"].get<long long>());
}

TEST_CASE("verification failures exit one but still report") {
  RunResult r = run_cli("verify --lemma 3.6 --gen t1 --pair s1 --radius 6 " + fixture("sysd.cox"));
  CHECK(r.exit_code == 1);
  auto j = parse_report(r);
  CHECK(j["pass"] == false);
  CHECK_FALSE(j["verdicts"][0]["failures"].empty());
}

TEST_CASE("the full battery passes on the reference fixtures") {
  RunResult b = run_cli("all --radius 5 " + fixture("sysb.cox"));
  CHECK(b.exit_code == 0);
  auto jb = parse_report(b);
  CHECK(jb["pass"] == true);
  CHECK(jb["verdicts"].size() == 10);

  RunResult d = run_cli("all " + fixture("sysd.cox"));
  CHECK(d.exit_code == 0);
  CHECK(parse_report(d)["pass"] == true);
}

TEST_CASE("input errors exit two") {
  CHECK(run_cli("validate no_such_file.cox").exit_code == 2);
  CHECK(run_cli("validate --bogus " + fixture("sysb.cox")).exit_code == 2);
  CHECK(run_cli("ruin --gen zz " + fixture("sysb.cox")).exit_code == 2);
  CHECK(run_cli("verify --lemma 9.9 " + fixture("sysb.cox")).exit_code == 2);
  CHECK(run_cli("homology --target ruin " + fixture("sysb.cox")).exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs once timing is stripped") {
  std::string cmd = "all --radius 5 " + fixture("sysb.cox");
  std::string a = strip_timing(run_cli(cmd).out);
  std::string b = strip_timing(run_cli(cmd).out);
  CHECK(a == b);
  CHECK(a.find("\"timing_ms\"") == std::string::npos);
}

TEST_CASE("json reports can be routed to a file") {
  std::string path = "cli_report_test.json";
  RunResult r = run_cli("validate --json " + path + " " + fixture("sysa.cox"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  auto j = nlohmann::json::parse(in);
  CHECK(j["rank"] == 2);
  std::remove(path.c_str());
}
