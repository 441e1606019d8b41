#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "cg_cli_test";

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome cli(const std::string& args) {
  fs::create_directories(kWork);
  const auto out = kWork / "stdout.txt";
  const auto err = kWork / "stderr.txt";
  const std::string command = std::string("\"") + CG_CLI + "\" " + args + " >\"" +
                              out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(command.c_str());
  Outcome outcome;
  outcome.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  outcome.out = slurp(out);
  outcome.err = slurp(err);
  return outcome;
}

std::string error_kind(const Outcome& outcome) {
  const auto object = nlohmann::json::parse(outcome.err);
  return object.at("error").at("kind").get<std::string>();
}

}  // namespace

TEST_CASE("generate prints the aggregate and writes the run directory") {
  const auto dir = kWork / "er";
  fs::remove_all(dir);
  const auto r = cli("generate --model er --nodes 60 --links 300 --realizations 2 "
                     "--seed 4 --out " + dir.string());
  REQUIRE(r.code == 0);
  const auto aggregate = nlohmann::json::parse(r.out);
  CHECK(aggregate["realizations"] == 2);
  CHECK(aggregate["metrics"]["L"]["mean"] == 300.0);
  CHECK(fs::exists(dir / "aggregate.json"));
  CHECK(fs::exists(dir / "report_1.csv"));
}

TEST_CASE("blocks model from flags and from a run file agree") {
  const auto file = kWork / "run.toml";
  fs::create_directories(kWork);
  std::ofstream(file) << "model = blocks\nselection = usp\nnu = 0.05\n"
                         "blocks = fixed:6\narticles = 200\nseed = 9\n";
  const auto from_file = cli("generate --config " + file.string());
  const auto from_flags = cli("generate --model blocks --selection usp --nu 0.05 "
                              "--blocks fixed:6 --articles 200 --seed 9");
  REQUIRE(from_file.code == 0);
  CHECK(from_file.out == from_flags.out);
  const auto overridden = cli("generate --config " + file.string() + " --seed 10");
  CHECK(overridden.out != from_file.out);
}

TEST_CASE("replay through the CLI is byte-identical") {
  const auto logged = kWork / "logged";
  const auto replay = kWork / "replay";
  fs::remove_all(logged);
  fs::remove_all(replay);
  const auto first = cli("generate --model ba --m0 4 --m 2 --steps 150 "
                         "--realizations 3 --seed 2 --save-graph --out " +
                         logged.string());
  REQUIRE(first.code == 0);
  const auto seed =
      nlohmann::json::parse(first.out)["seeds"][1].get<std::uint64_t>();
  const auto second = cli("generate --model ba --m0 4 --m 2 --steps 150 "
                          "--save-graph --replay-seed " + std::to_string(seed) +
                          " --out " + replay.string());
  REQUIRE(second.code == 0);
  CHECK(slurp(replay / "graph_0.tsv") == slurp(logged / "graph_1.tsv"));
  CHECK(slurp(replay / "report_0.csv") == slurp(logged / "report_1.csv"));
}

TEST_CASE("ingest, report and compare") {
  const auto dir = kWork / "toy";
  fs::remove_all(dir);
  const auto ingest =
      cli("ingest " + std::string(CG_FIXTURES) + "/toy.jsonl --save-graph --out " +
          dir.string());
  REQUIRE(ingest.code == 0);
  const auto report = nlohmann::json::parse(ingest.out);
  CHECK(report["N"] == 6);
  CHECK(report["L"] == 9);

  const auto measured = cli("report " + (dir / "graph.tsv").string() + " --format csv");
  REQUIRE(measured.code == 0);
  CHECK(measured.out == slurp(dir / "report.csv"));

  const auto er = kWork / "er";
  const auto table = cli("compare --format csv " + (dir / "report.json").string() +
                         " " + (er / "aggregate.json").string());
  REQUIRE(table.code == 0);
  CHECK(table.out.find("empirical,6,9,") != std::string::npos);
}

TEST_CASE("sweep prints a table") {
  const auto r = cli("sweep --grid 1.0 --blocks fixed:37 --articles 10 "
                     "--realizations 2");
  REQUIRE(r.code == 0);
  CHECK(r.out == "nu\trealizations\tmean_N\tstd_N\n1\t2\t370\t0\n# monotone=true\n");
}

TEST_CASE("errors are JSON on stderr with a nonzero exit") {
  const auto config = cli("generate --model er --nodes 3 --links 9");
  CHECK(config.code != 0);
  CHECK(error_kind(config) == "config_error");

  const auto usage = cli("generate --model nope");
  CHECK(usage.code != 0);
  CHECK(error_kind(usage) == "usage_error");

  const auto missing = cli("ingest /nonexistent/corpus.jsonl");
  CHECK(missing.code != 0);
  CHECK(error_kind(missing) == "io_error");

  const auto single = cli("compare " + (kWork / "er" / "aggregate.json").string());
  CHECK(single.code != 0);
  CHECK(error_kind(single) == "input_error");

  fs::create_directories(kWork);
  std::ofstream(kWork / "bad.jsonl") << "{\"id\":\"A\",\"concepts\":[\"x\"]}\nnope\n";
  const auto parse = cli("ingest " + (kWork / "bad.jsonl").string());
  CHECK(parse.code != 0);
  CHECK(error_kind(parse) == "parse_error");
  CHECK(parse.err.find("line 2") != std::string::npos);
}
