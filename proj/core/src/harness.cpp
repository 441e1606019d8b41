#include "conceptgraph/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "conceptgraph/baselines.hpp"
#include "conceptgraph/corpus.hpp"
#include "conceptgraph/edge_list.hpp"
#include "conceptgraph/error.hpp"
#include "conceptgraph/rng.hpp"
#include "json_io.hpp"

namespace conceptgraph {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void ensure_directory(const fs::path& dir) {
  std::error_code error;
  fs::create_directories(dir, error);
  if (error || !fs::is_directory(dir)) {
    throw IoError("cannot create directory", dir.string());
  }
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing", path.string());
  writer(out);
  out.flush();
  if (!out) throw IoError("write failed", path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  write_file(path, [&](std::ostream& out) { out << text; });
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path indexed(const fs::path& dir, const char* stem, std::size_t index,
                 const char* extension) {
  return dir / (std::string(stem) + "_" + std::to_string(index) + extension);
}

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Returns the
/// exception of each failed index; after a failure no new index starts.
template <typename Body>
std::vector<std::exception_ptr> parallel_for(std::size_t count,
                                             std::size_t jobs, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        failed.store(true);
      }
    }
  };
  const std::size_t threads = std::min(jobs, count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return errors;
}

[[noreturn]] void rethrow_with_context(const std::exception_ptr& error,
                                       const std::string& context) {
  try {
    std::rethrow_exception(error);
  } catch (const Error& e) {
    throw Error(e.kind(), context + ": " + e.what());
  }
}

json stat_to_json(const MetricStat& stat) {
  json object;
  object["mean"] = stat.mean ? json(*stat.mean) : json(nullptr);
  object["std"] = stat.std ? json(*stat.std) : json(nullptr);
  object["undefined"] = stat.undefined;
  return object;
}

std::string format(const char* pattern, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, pattern, value);
  return buffer;
}

std::string csv_cell(const std::optional<double>& value) {
  return value ? format("%.10g", *value) : "undef";
}

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string md_cell(const std::optional<double>& value, const char* pattern,
                    double scale = 1.0) {
  return value ? format(pattern, *value * scale) : "undef";
}

void require_two(const std::vector<AggregateReport>& reports) {
  if (reports.size() < 2) {
    throw InputError("compare needs at least two reports");
  }
}

}  // namespace

MetricStat summarize(const std::vector<std::optional<double>>& values) {
  MetricStat stat;
  for (const auto& value : values) {
    if (!value) ++stat.undefined;
  }
  if (values.empty() || stat.undefined > 0) return stat;
  double sum = 0.0;
  for (const auto& value : values) sum += *value;
  const double mean = sum / static_cast<double>(values.size());
  stat.mean = mean;
  if (values.size() >= 2) {
    double squares = 0.0;
    for (const auto& value : values) squares += (*value - mean) * (*value - mean);
    stat.std = std::sqrt(squares / static_cast<double>(values.size() - 1));
  }
  return stat;
}

AggregateReport aggregate(std::string label, std::string model,
                          std::uint64_t master_seed,
                          std::vector<std::uint64_t> seeds,
                          std::vector<MetricsReport> reports) {
  AggregateReport result;
  result.label = std::move(label);
  result.model = std::move(model);
  result.master_seed = master_seed;
  result.seeds = std::move(seeds);
  result.reports = std::move(reports);

  auto collect = [&](auto field) {
    std::vector<std::optional<double>> values;
    values.reserve(result.reports.size());
    for (const auto& report : result.reports) values.push_back(field(report));
    return summarize(values);
  };
  using R = const MetricsReport&;
  result.node_count = collect([](R r) -> std::optional<double> {
    return static_cast<double>(r.node_count);
  });
  result.link_count = collect([](R r) -> std::optional<double> {
    return static_cast<double>(r.link_count);
  });
  result.density = collect([](R r) -> std::optional<double> {
    return r.density;
  });
  result.mean_degree = collect([](R r) -> std::optional<double> {
    return r.mean_degree;
  });
  result.degree_std = collect([](R r) -> std::optional<double> {
    return r.degree_std;
  });
  result.max_degree = collect([](R r) -> std::optional<double> {
    return static_cast<double>(r.max_degree);
  });
  result.assortativity = collect([](R r) { return r.assortativity; });
  result.avg_clustering = collect([](R r) -> std::optional<double> {
    return r.avg_clustering;
  });
  result.transitivity = collect([](R r) { return r.transitivity; });
  return result;
}

std::string aggregate_to_json(const AggregateReport& report) {
  json object;
  object["label"] = report.label;
  object["model"] = report.model;
  object["master_seed"] = report.master_seed;
  object["realizations"] = report.realizations();
  object["seeds"] = report.seeds;
  object["metrics"] = {
      {"N", stat_to_json(report.node_count)},
      {"L", stat_to_json(report.link_count)},
      {"rho", stat_to_json(report.density)},
      {"mean_k", stat_to_json(report.mean_degree)},
      {"sigma", stat_to_json(report.degree_std)},
      {"k_max", stat_to_json(report.max_degree)},
      {"r", stat_to_json(report.assortativity)},
      {"avg_c", stat_to_json(report.avg_clustering)},
      {"T", stat_to_json(report.transitivity)},
  };
  json reports = json::array();
  for (const auto& r : report.reports) {
    reports.push_back(report_to_json_value(r));
  }
  object["reports"] = std::move(reports);
  return object.dump(2) + "\n";
}

AggregateReport aggregate_from_json(const std::string& text) {
  json object;
  try {
    object = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ParseError(std::string("aggregate: ") + error.what());
  }
  if (!object.is_object() || !object.contains("reports") ||
      !object["reports"].is_array()) {
    throw ParseError("aggregate: missing 'reports' array");
  }
  try {
    std::vector<MetricsReport> reports;
    for (const auto& r : object["reports"]) {
      reports.push_back(report_from_json_value(r));
    }
    return aggregate(object.value("label", std::string()),
                     object.value("model", std::string()),
                     object.value("master_seed", std::uint64_t{0}),
                     object.value("seeds", std::vector<std::uint64_t>{}),
                     std::move(reports));
  } catch (const json::exception& error) {
    throw ParseError(std::string("aggregate: ") + error.what());
  }
}

AggregateReport load_aggregate(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  json object;
  try {
    object = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ParseError(path.string() + ": " + error.what());
  }
  if (object.is_object() && object.contains("reports")) {
    return aggregate_from_json(text);
  }
  MetricsReport report = report_from_json_value(object);
  std::string label = "empirical";
  if (object.is_object() && object.contains("label") &&
      object["label"].is_string()) {
    label = object["label"].get<std::string>();
  }
  return aggregate(std::move(label), "ingest", 0, {}, {std::move(report)});
}

std::uint64_t realization_seed(const RunSpec& spec, std::size_t index) {
  if (spec.replay_seed) return *spec.replay_seed;
  return derive_seed(spec.master_seed, index);
}

Realization realize(const RunSpec& spec, std::uint64_t seed) {
  switch (spec.model) {
    case ModelKind::er: {
      ErConfig config = spec.er;
      config.seed = seed;
      return {erdos_renyi(config), std::nullopt};
    }
    case ModelKind::ba: {
      BaConfig config = spec.ba;
      config.seed = seed;
      return {barabasi_albert(config), std::nullopt};
    }
    case ModelKind::blocks: {
      ModelConfig config = spec.blocks;
      config.seed = seed;
      GrowthResult grown = generate_network(config);
      return {std::move(grown.graph), std::move(grown.corpus)};
    }
    case ModelKind::empirical_ingest: {
      const Corpus corpus =
          filter_generic(parse_corpus(spec.corpus).corpus, spec.exclude_generic);
      return {project_concepts(build_bipartite(corpus)), std::nullopt};
    }
  }
  throw ConfigError("unknown model");
}

AggregateReport run(const RunSpec& spec,
                    const RealizationCallback& on_realization) {
  spec.validate();
  const std::size_t count = spec.replay_seed ? 1 : spec.realizations;
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = realization_seed(spec, i);

  const fs::path& dir = spec.output_dir;
  const bool writing = !dir.empty();
  if (writing) {
    ensure_directory(dir);
    std::string blocks_text;
    if (spec.model == ModelKind::blocks &&
        spec.blocks.block_sizes.kind() == BlockSizeDistribution::Kind::empirical) {
      const fs::path csv = dir / "blocksizes.csv";
      spec.blocks.block_sizes.write_csv(csv);
      blocks_text = "empirical:" + fs::absolute(csv).string();
    }
    write_file(dir / "config.toml", [&](std::ostream& out) {
      write_run_file(out, spec, blocks_text);
    });
  }

  std::vector<MetricsReport> reports(count);
  std::mutex callback_mutex;
  const auto errors = parallel_for(count, spec.jobs, [&](std::size_t i) {
    Realization realization = realize(spec, seeds[i]);
    MetricsReport report = full_report(realization.graph);
    if (writing) {
      write_text(indexed(dir, "report", i, ".csv"),
                 report_csv_header() + "\n" + report_csv_row(report) + "\n");
      write_file(indexed(dir, "degdist", i, ".tsv"), [&](std::ostream& out) {
        write_degree_distribution(out, degree_distribution(realization.graph));
      });
      if (spec.save_graphs) {
        write_edge_list(indexed(dir, "graph", i, ".tsv"), realization.graph);
      }
      if (spec.export_corpora && realization.corpus) {
        write_file(indexed(dir, "corpus", i, ".jsonl"), [&](std::ostream& out) {
          write_generated_corpus(out, *realization.corpus);
        });
      }
    }
    if (on_realization) {
      std::lock_guard lock(callback_mutex);
      on_realization(i, seeds[i], report);
    }
    reports[i] = std::move(report);
  });
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) {
      rethrow_with_context(errors[i], "realization " + std::to_string(i) +
                                          " (seed " +
                                          std::to_string(seeds[i]) + ")");
    }
  }

  AggregateReport result =
      aggregate(spec.display_label(), std::string(to_string(spec.model)),
                spec.master_seed, std::move(seeds), std::move(reports));
  if (writing) write_text(dir / "aggregate.json", aggregate_to_json(result));
  return result;
}

void SweepSpec::validate() const {
  if (grid.empty()) throw ConfigError("sweep grid is empty");
  for (double nu : grid) {
    if (!(nu > 0.0 && nu <= 1.0)) {
      throw ConfigError("sweep grid values must lie in (0, 1]");
    }
  }
  if (base.model != ModelKind::blocks) {
    throw ConfigError("sweep requires the blocks model");
  }
  if (realizations_per_point.size() != 1 &&
      realizations_per_point.size() != grid.size()) {
    throw ConfigError(
        "realizations schedule needs one entry or one per grid point");
  }
  for (std::size_t r : realizations_per_point) {
    if (r == 0) throw ConfigError("realizations per point must be >= 1");
  }
  base.blocks.validate();
}

SweepResult sweep_nu(const SweepSpec& spec) {
  spec.validate();
  const std::size_t points = spec.grid.size();
  auto realizations_at = [&](std::size_t p) {
    return spec.realizations_per_point.size() == 1
               ? spec.realizations_per_point.front()
               : spec.realizations_per_point[p];
  };

  struct Task {
    std::size_t point;
    std::size_t realization;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<std::optional<double>>> nodes(points);
  for (std::size_t p = 0; p < points; ++p) {
    nodes[p].resize(realizations_at(p));
    for (std::size_t r = 0; r < realizations_at(p); ++r) tasks.push_back({p, r});
  }

  const auto errors =
      parallel_for(tasks.size(), spec.base.jobs, [&](std::size_t i) {
        const Task task = tasks[i];
        ModelConfig config = spec.base.blocks;
        config.nu = spec.grid[task.point];
        config.seed = derive_seed(spec.base.master_seed, task.realization);
        nodes[task.point][task.realization] =
            static_cast<double>(generate_corpus(config).concept_count);
      });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) {
      rethrow_with_context(
          errors[i],
          "nu " + format("%g", spec.grid[tasks[i].point]) + " realization " +
              std::to_string(tasks[i].realization) + " (seed " +
              std::to_string(derive_seed(spec.base.master_seed,
                                         tasks[i].realization)) +
              ")");
    }
  }

  SweepResult result;
  for (std::size_t p = 0; p < points; ++p) {
    const MetricStat stat = summarize(nodes[p]);
    result.rows.push_back({spec.grid[p], nodes[p].size(), *stat.mean, stat.std});
  }
  std::vector<SweepRow> sorted = result.rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepRow& a, const SweepRow& b) {
                     return a.nu < b.nu;
                   });
  for (std::size_t p = 1; p < sorted.size(); ++p) {
    if (sorted[p].mean_nodes < sorted[p - 1].mean_nodes) {
      result.monotone = false;
    }
  }

  if (!spec.base.output_dir.empty()) {
    ensure_directory(spec.base.output_dir);
    write_file(spec.base.output_dir / "config.toml", [&](std::ostream& out) {
      write_run_file(out, spec.base);
    });
    write_text(spec.base.output_dir / "sweep.tsv", sweep_to_tsv(result));
  }
  return result;
}

std::string sweep_to_tsv(const SweepResult& result) {
  std::string text = "nu\trealizations\tmean_N\tstd_N\n";
  for (const auto& row : result.rows) {
    text += format("%.10g", row.nu) + "\t" + std::to_string(row.realizations) +
            "\t" + format("%.10g", row.mean_nodes) + "\t" +
            csv_cell(row.std_nodes) + "\n";
  }
  text += std::string("# monotone=") + (result.monotone ? "true" : "false") +
          "\n";
  return text;
}

std::string compare_csv(const std::vector<AggregateReport>& reports) {
  require_two(reports);
  std::string text =
      "model,N,L,rho_percent,mean_k,sigma,k_max,k_max_std,r,avg_c,T,"
      "realizations\n";
  for (const auto& report : reports) {
    std::optional<double> rho_percent;
    if (report.density.mean) rho_percent = *report.density.mean * 100.0;
    text += csv_quote(report.label) + "," + csv_cell(report.node_count.mean) +
            "," + csv_cell(report.link_count.mean) + "," +
            csv_cell(rho_percent) + "," + csv_cell(report.mean_degree.mean) +
            "," + csv_cell(report.degree_std.mean) + "," +
            csv_cell(report.max_degree.mean) + "," +
            csv_cell(report.max_degree.std) + "," +
            csv_cell(report.assortativity.mean) + "," +
            csv_cell(report.avg_clustering.mean) + "," +
            csv_cell(report.transitivity.mean) + "," +
            std::to_string(report.realizations()) + "\n";
  }
  return text;
}

std::string compare_markdown(const std::vector<AggregateReport>& reports) {
  require_two(reports);
  std::string text =
      "| Model | N | L | rho, % | <k> | sigma | k_max | r | <c> | T |\n"
      "|---|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& report : reports) {
    std::string k_max = md_cell(report.max_degree.mean, "%.0f");
    if (report.max_degree.mean && report.max_degree.std) {
      k_max += " +/- " + format("%.0f", *report.max_degree.std);
    }
    text += "| " + report.label + " | " +
            md_cell(report.node_count.mean, "%.0f") + " | " +
            md_cell(report.link_count.mean, "%.0f") + " | " +
            md_cell(report.density.mean, "%.2f", 100.0) + " | " +
            md_cell(report.mean_degree.mean, "%.0f") + " | " +
            md_cell(report.degree_std.mean, "%.0f") + " | " + k_max + " | " +
            md_cell(report.assortativity.mean, "%.2f") + " | " +
            md_cell(report.avg_clustering.mean, "%.2f") + " | " +
            md_cell(report.transitivity.mean, "%.2f") + " |\n";
  }
  return text;
}

IngestResult ingest_and_report(const std::filesystem::path& corpus_path,
                               bool exclude_generic,
                               const std::filesystem::path& output_dir,
                               bool save_graph) {
  ParsedCorpus parsed = parse_corpus(corpus_path);
  if (parsed.corpus.article_count() == 0) {
    throw InputError("corpus has no articles: " + corpus_path.string());
  }
  const Corpus corpus = filter_generic(parsed.corpus, exclude_generic);
  BlockSizeDistribution block_sizes = block_size_histogram(corpus);
  const UndirectedGraph graph = project_concepts(build_bipartite(corpus));
  if (graph.node_count() < 2) {
    throw InputError("corpus yields fewer than two concepts");
  }
  IngestResult result{corpus.article_count(), parsed.duplicate_warnings,
                      full_report(graph), degree_distribution(graph),
                      std::move(block_sizes)};

  if (!output_dir.empty()) {
    ensure_directory(output_dir);
    write_text(output_dir / "report.json",
               report_to_json_value(result.report).dump(2) + "\n");
    write_text(output_dir / "report.csv", report_csv_header() + "\n" +
                                              report_csv_row(result.report) +
                                              "\n");
    write_file(output_dir / "degdist.tsv", [&](std::ostream& out) {
      write_degree_distribution(out, result.degrees);
    });
    result.block_sizes.write_csv(output_dir / "blocksizes.csv");
    if (save_graph) write_edge_list(output_dir / "graph.tsv", graph);
  }
  return result;
}

}  // namespace conceptgraph
