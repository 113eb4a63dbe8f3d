#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

// Exercises the installed command-line surface end to end: argument parsing,
// output formats, exit codes, and determinism across worker counts.

#ifndef ARITHPLUS_CLI_PATH
#error "ARITHPLUS_CLI_PATH must point at the CLI binary"
#endif
#ifndef ARITHPLUS_TEST_DATA_DIR
#error "ARITHPLUS_TEST_DATA_DIR must point at tests/data"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + (env_prefix.empty() ? "" : " ") + ARITHPLUS_CLI_PATH + " " +
      args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_file(const std::string& name) {
  return std::string(ARITHPLUS_TEST_DATA_DIR) + "/" + name;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

nlohmann::json parse_json(const RunResult& r) {
  return nlohmann::json::parse(r.output);
}

}  // namespace

TEST_CASE("help and version exit zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("eval --help").exit_code == 0);
  RunResult v = run_cli("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("0.1.0") != std::string::npos);
}

TEST_CASE("usage problems exit 2") {
  CHECK(run_cli("").exit_code == 2);               // a subcommand is required
  CHECK(run_cli("frobnicate").exit_code == 2);     // unknown subcommand
  CHECK(run_cli("eval").exit_code == 2);           // missing n
  CHECK(run_cli("eval 0").exit_code == 2);         // out of domain
  CHECK(run_cli("scan --condition bogus").exit_code == 2);
  CHECK(run_cli("scan --condition lehmer --min 1 --max 10").exit_code == 2);
  CHECK(run_cli("verify --theorem bogus").exit_code == 2);
  CHECK(run_cli("collisions --function sigma-plus").exit_code == 2);
  CHECK(run_cli("conjecture --q 4").exit_code == 2);
  CHECK(run_cli("collisions --function phi-plus --families k=2..5").exit_code == 2);
  CHECK(run_cli("collisions --function sigma-plus --families k=9..2").exit_code == 2);
}

TEST_CASE("eval prints the full profile") {
  RunResult text = run_cli("eval 20");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("sigma: 42") != std::string::npos);
  CHECK(text.output.find("phi: 8") != std::string::npos);
  CHECK(text.output.find("schemmel2: 0") != std::string::npos);
  CHECK(text.output.find("sigma_plus: 56") != std::string::npos);
  CHECK(text.output.find("phi_plus: 15") != std::string::npos);
  CHECK(text.output.find("abundancy: 21/10") != std::string::npos);
  CHECK(text.output.find("factorization: 2^2*5") != std::string::npos);

  // Global options are accepted after the subcommand as well.
  RunResult js = run_cli("eval 20 --format json");
  CHECK(js.exit_code == 0);
  const nlohmann::json j = parse_json(js);
  CHECK(j["profile"]["sigma"] == "42");
  CHECK(j["profile"]["phi"] == 8);
  CHECK(j["profile"]["sigma_plus"] == "56");
  CHECK(j["profile"]["abundancy"] == "21/10");
  CHECK(j["profile"]["omega"] == 2);

  RunResult csv = run_cli("--format csv eval 20");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("n,factorization,sigma,") == 0);
  CHECK(csv.output.find("20,2^2*5,42,8,0,56,15,21/10,2") != std::string::npos);
}

TEST_CASE("scan reports the frozen composite witnesses") {
  RunResult r = run_cli(
      "--format json scan --condition sigma-shift --min 2 --max 100000 "
      "--composite-only");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = parse_json(r);
  std::vector<uint64_t> ns;
  for (const auto& w : j["witnesses"]) ns.push_back(w["n"].get<uint64_t>());
  CHECK(ns == std::vector<uint64_t>{20, 104, 464, 650, 1952});
  CHECK(j["params"]["condition"] == "sigma-shift");
  CHECK(j["params"]["composite_only"] == "true");
  // Worker count must not appear: reports are configuration-independent.
  CHECK(!j["params"].contains("workers"));
}

TEST_CASE("scan output is byte-identical across worker counts") {
  const std::string base =
      "--format json scan --condition phi-plus-shift --min 2 --max 50000";
  nlohmann::json a = parse_json(run_cli(base + " --workers 1"));
  nlohmann::json b = parse_json(run_cli(base + " --workers 8"));
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("verify exits 0 on expected outcomes") {
  CHECK(run_cli("verify --theorem pq-sigma --max 2000").exit_code == 0);
  CHECK(run_cli("verify --theorem p2q-sigma --max 2000").exit_code == 0);
  CHECK(run_cli("verify --theorem phi-plus-bounds --max 2000").exit_code == 0);

  RunResult r = run_cli("--format json verify --theorem p2q-sigma --max 2000");
  const nlohmann::json j = parse_json(r);
  REQUIRE(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["n"] == 20);
  CHECK(j["command"] == "verify");
}

TEST_CASE("collisions and aps expose scans plus families") {
  RunResult col = run_cli(
      "--format json collisions --function sigma-plus --max 20 --families k=2..4");
  CHECK(col.exit_code == 0);
  const nlohmann::json jc = parse_json(col);
  bool found = false;
  for (const auto& g : jc["groups"]) {
    if (g["value"] == "56") {
      CHECK(g["members"] == nlohmann::json::array({18, 20}));
      found = true;
    }
  }
  CHECK(found);
  REQUIRE(jc["families"].size() == 3);
  CHECK(jc["families"][0]["members"] == nlohmann::json::array({18, 20}));

  RunResult aps = run_cli(
      "--format json aps --function sigma-plus --max 10 --families k=1..5");
  CHECK(aps.exit_code == 0);
  const nlohmann::json ja = parse_json(aps);
  REQUIRE(ja["triples"].size() == 5);
  CHECK(ja["triples"][0] ==
        nlohmann::json({{"a", 1}, {"b", 2}, {"c", 5},
                        {"fa", "1"}, {"fb", "4"}, {"fc", "7"}}));
  CHECK(ja["families"].size() == 5);
  // The closed form's printed c differs from the proof text; the note says so.
  bool noted = false;
  for (const auto& note : ja["notes"]) {
    if (note.get<std::string>().find("5*2^k") != std::string::npos) noted = true;
  }
  CHECK(noted);
}

TEST_CASE("conjecture evidence in csv form") {
  RunResult r = run_cli(
      "--format csv conjecture --function sigma-plus --q 3 --max 20");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "n,p,q,value\n"
        "1,2,3,1\n"
        "5,5,3,7\n"
        "15,19,3,35\n"
        "17,11,3,19\n");
}

TEST_CASE("oeis cross-check against the fixture") {
  RunResult ok = run_cli("oeis --max-p 3000 --bfile " + data_file("b005382.txt"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("b-file cross-check passed (68 entries)") != std::string::npos);

  CHECK(run_cli("oeis --bfile /nonexistent/file.txt").exit_code == 3);

  const auto malformed = temp_file("arithplus_malformed_bfile.txt");
  std::ofstream(malformed) << "1 2\nnot a data line\n";
  CHECK(run_cli("oeis --bfile " + malformed.string()).exit_code == 3);

  const auto wrong = temp_file("arithplus_wrong_bfile.txt");
  std::ofstream(wrong) << "1 2\n2 3\n3 5\n";  // 5 is not in the sequence
  RunResult bad = run_cli("oeis --max-p 100 --bfile " + wrong.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("mismatch") != std::string::npos);
  std::filesystem::remove(malformed);
  std::filesystem::remove(wrong);
}

TEST_CASE("sieve cap from the environment stops oversized scans") {
  // The default sieve floor is 10^6; a 1000-entry cap forces a resource error.
  RunResult capped =
      run_cli("scan --condition sigma-shift --max 100", "NT_SIEVE_CAP=1000");
  CHECK(capped.exit_code == 3);
  // An explicit smaller sieve limit fits under the same cap.
  RunResult fits = run_cli(
      "--sieve-limit 500 scan --condition sigma-shift --max 100",
      "NT_SIEVE_CAP=1000");
  CHECK(fits.exit_code == 0);
}

TEST_CASE("--out writes the report to a file") {
  const auto out_path = temp_file("arithplus_out_test.json");
  std::filesystem::remove(out_path);
  RunResult r = run_cli("--format json --out " + out_path.string() +
                        " scan --condition phi-plus-shift --max 100");
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(out_path);
  REQUIRE(in.good());
  const nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["n"] == 4);
  std::filesystem::remove(out_path);

  CHECK(run_cli("--out /nonexistent_dir/x.json eval 6").exit_code == 3);
}
