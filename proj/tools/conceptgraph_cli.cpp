// conceptgraph: build, generate and measure concept co-occurrence networks.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conceptgraph/edge_list.hpp"
#include "conceptgraph/error.hpp"
#include "conceptgraph/harness.hpp"
#include "conceptgraph/metrics.hpp"
#include "conceptgraph/run_config.hpp"

namespace cg = conceptgraph;

namespace {

int exit_code(cg::ErrorKind kind) {
  switch (kind) {
    case cg::ErrorKind::input:
      return 3;
    case cg::ErrorKind::parse:
      return 4;
    case cg::ErrorKind::config:
      return 5;
    case cg::ErrorKind::undefined_metric:
      return 6;
    case cg::ErrorKind::io:
      return 7;
  }
  return 1;
}

int report_error(std::string_view kind, const std::string& message, int code) {
  nlohmann::json error;
  error["error"] = {{"kind", kind}, {"message", message}};
  std::cerr << error.dump() << '\n';
  return code;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cg::IoError("cannot open for writing", path);
  out << text;
  if (!out) throw cg::IoError("write failed", path);
}

// Options shared by `generate` and `sweep`. Flags given on the command line
// override the run file.
struct ModelOptions {
  std::string config;
  std::string model;
  std::string selection;
  double nu = 0.0;
  std::string blocks;
  std::size_t articles = 0;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string out;
  CLI::Option* nu_opt = nullptr;
  CLI::Option* articles_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;

  void add_to(CLI::App& app, bool with_model) {
    app.add_option("--config", config, "run file (key = value)");
    if (with_model) {
      app.add_option("--model", model, "er | ba | blocks")
          ->check(CLI::IsMember({"er", "ba", "blocks"}));
    }
    app.add_option("--selection", selection, "usp | psp")
        ->check(CLI::IsMember({"usp", "psp", "uniform", "preferential"}));
    nu_opt = app.add_option("--nu", nu, "novel-concept probability");
    app.add_option("--blocks", blocks,
                   "fixed:<n> | empirical:<csv> | lognormal:<mean>,<sigma>");
    articles_opt = app.add_option("--articles", articles, "articles to grow");
    seed_opt = app.add_option("--seed", seed, "master seed");
    jobs_opt = app.add_option("--jobs", jobs, "concurrent realizations")
                   ->check(CLI::PositiveNumber);
    app.add_option("--out", out, "output directory");
  }

  void apply(cg::RunSpec& spec) const {
    if (!config.empty()) cg::apply_run_file(config, spec);
    if (!model.empty()) spec.model = cg::parse_model_kind(model);
    if (!selection.empty()) spec.blocks.selection = cg::parse_selection(selection);
    if (nu_opt->count() > 0) spec.blocks.nu = nu;
    if (!blocks.empty()) {
      spec.blocks.block_sizes = cg::BlockSizeDistribution::parse(blocks);
    }
    if (articles_opt->count() > 0) spec.blocks.articles = articles;
    if (seed_opt->count() > 0) spec.master_seed = seed;
    if (jobs_opt->count() > 0) spec.jobs = jobs;
    if (!out.empty()) spec.output_dir = out;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept co-occurrence network toolkit"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "corpus -> network -> metrics");
  std::string ingest_corpus;
  std::string ingest_out;
  bool exclude_generic = false;
  bool ingest_save_graph = false;
  ingest->add_option("corpus", ingest_corpus, "JSON-lines corpus")->required();
  ingest->add_flag("--exclude-generic", exclude_generic,
                   "drop concepts flagged generic");
  ingest->add_option("--out", ingest_out, "output directory");
  ingest->add_flag("--save-graph", ingest_save_graph, "also write graph.tsv");

  // generate
  auto* generate = app.add_subcommand("generate", "generate and measure R realizations");
  ModelOptions gen;
  gen.add_to(*generate, true);
  std::size_t realizations = 1;
  std::size_t nodes = 0, links = 0, m0 = 0, m = 0, steps = 0;
  std::uint64_t replay_seed = 0;
  std::string label;
  bool save_graph = false;
  bool export_corpus = false;
  bool verbose = false;
  auto* realizations_opt =
      generate->add_option("--realizations", realizations, "R")
          ->check(CLI::PositiveNumber);
  auto* nodes_opt = generate->add_option("--nodes", nodes, "ER: N");
  auto* links_opt = generate->add_option("--links", links, "ER: L");
  auto* m0_opt = generate->add_option("--m0", m0, "BA: initial nodes");
  auto* m_opt = generate->add_option("--m", m, "BA: links per step");
  auto* steps_opt = generate->add_option("--steps", steps, "BA: arrivals");
  auto* replay_opt = generate->add_option(
      "--replay-seed", replay_seed, "run one realization with this stream seed");
  generate->add_option("--label", label, "name used in comparison tables");
  generate->add_flag("--save-graph", save_graph, "write graph_{i}.tsv");
  generate->add_flag("--export-corpus", export_corpus,
                     "write corpus_{i}.jsonl (blocks model)");
  generate->add_flag("--verbose", verbose, "log each realization to stderr");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "number of concepts against nu");
  ModelOptions swp;
  swp.add_to(*sweep, false);
  std::vector<double> grid;
  std::vector<std::size_t> schedule;
  sweep->add_option("--grid", grid, "comma-separated nu values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--realizations", schedule,
                    "realizations per point: one value or one per grid point")
      ->delimiter(',');

  // compare
  auto* compare = app.add_subcommand("compare", "side-by-side table of reports");
  std::vector<std::string> compare_inputs;
  std::string compare_format = "markdown";
  std::string compare_out;
  compare->add_option("reports", compare_inputs,
                      "aggregate.json or report.json files")
      ->required();
  compare->add_option("--format", compare_format, "csv | markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  compare->add_option("--out", compare_out, "output file (default stdout)");

  // report
  auto* report = app.add_subcommand("report", "metrics of an edge list");
  std::string report_input;
  std::string report_format = "json";
  std::string report_degdist;
  report->add_option("graph", report_input, "edge-list file")->required();
  report->add_option("--format", report_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  report->add_option("--degdist", report_degdist,
                     "also write the degree distribution here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage_error", e.what(), 2);
  }

  try {
    if (*ingest) {
      const auto result = cg::ingest_and_report(ingest_corpus, exclude_generic,
                                                ingest_out, ingest_save_graph);
      auto object = nlohmann::json::parse(cg::report_to_json(result.report));
      object["articles"] = result.article_count;
      object["duplicate_mentions"] = result.duplicate_mentions;
      if (result.duplicate_mentions > 0) {
        object["warning"] = std::to_string(result.duplicate_mentions) +
                            " repeated concept mentions were collapsed";
      }
      std::cout << object.dump(2) << '\n';
    } else if (*generate) {
      cg::RunSpec spec;
      gen.apply(spec);
      if (realizations_opt->count() > 0) {
        spec.realizations = realizations;
        spec.blocks.realizations = realizations;
      }
      if (nodes_opt->count() > 0) spec.er.nodes = nodes;
      if (links_opt->count() > 0) spec.er.links = links;
      if (m0_opt->count() > 0) spec.ba.initial_nodes = m0;
      if (m_opt->count() > 0) spec.ba.links_per_step = m;
      if (steps_opt->count() > 0) spec.ba.steps = steps;
      if (replay_opt->count() > 0) spec.replay_seed = replay_seed;
      if (!label.empty()) spec.label = label;
      spec.save_graphs = spec.save_graphs || save_graph;
      spec.export_corpora = spec.export_corpora || export_corpus;

      cg::RealizationCallback log;
      if (verbose) {
        log = [](std::size_t i, std::uint64_t seed, const cg::MetricsReport& r) {
          std::fprintf(stderr, "realization %zu seed %llu: N=%zu L=%zu\n", i,
                       static_cast<unsigned long long>(seed), r.node_count,
                       r.link_count);
        };
      }
      const auto result = cg::run(spec, log);
      std::cout << cg::aggregate_to_json(result);
    } else if (*sweep) {
      cg::SweepSpec spec;
      spec.base.model = cg::ModelKind::blocks;
      swp.apply(spec.base);
      spec.base.model = cg::ModelKind::blocks;
      spec.grid = grid;
      if (!schedule.empty()) spec.realizations_per_point = schedule;
      else spec.realizations_per_point = {spec.base.realizations};
      std::cout << cg::sweep_to_tsv(cg::sweep_nu(spec));
    } else if (*compare) {
      std::vector<cg::AggregateReport> reports;
      for (const auto& path : compare_inputs) {
        reports.push_back(cg::load_aggregate(path));
      }
      write_output(compare_out, compare_format == "csv"
                                    ? cg::compare_csv(reports)
                                    : cg::compare_markdown(reports));
    } else if (*report) {
      const auto graph = cg::read_edge_list(std::filesystem::path(report_input));
      const auto metrics = cg::full_report(graph);
      if (report_format == "csv") {
        std::cout << cg::report_csv_header() << '\n'
                  << cg::report_csv_row(metrics) << '\n';
      } else {
        std::cout << nlohmann::json::parse(cg::report_to_json(metrics)).dump(2)
                  << '\n';
      }
      if (!report_degdist.empty()) {
        std::ofstream out(report_degdist, std::ios::binary);
        if (!out) throw cg::IoError("cannot open for writing", report_degdist);
        cg::write_degree_distribution(out, cg::degree_distribution(graph));
      }
    }
  } catch (const cg::Error& e) {
    return report_error(cg::to_string(e.kind()), e.what(), exit_code(e.kind()));
  } catch (const std::exception& e) {
    return report_error("internal_error", e.what(), 1);
  }
  return 0;
}
