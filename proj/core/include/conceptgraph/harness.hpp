#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conceptgraph/block_growth.hpp"
#include "conceptgraph/block_sizes.hpp"
#include "conceptgraph/graph.hpp"
#include "conceptgraph/metrics.hpp"
#include "conceptgraph/run_config.hpp"

namespace conceptgraph {

/// Mean and sample standard deviation of one metric over R realizations.
/// If any realization left the metric undefined, the mean is undefined too
/// and `undefined` says how many did. std is undefined for R < 2.
struct MetricStat {
  std::optional<double> mean;
  std::optional<double> std;
  std::size_t undefined = 0;

  bool operator==(const MetricStat&) const = default;
};

MetricStat summarize(const std::vector<std::optional<double>>& values);

struct AggregateReport {
  std::string label;
  std::string model;
  std::uint64_t master_seed = 0;
  std::vector<std::uint64_t> seeds;  // one per realization, for replay
  std::vector<MetricsReport> reports;

  MetricStat node_count;
  MetricStat link_count;
  MetricStat density;  // fraction
  MetricStat mean_degree;
  MetricStat degree_std;
  MetricStat max_degree;
  MetricStat assortativity;
  MetricStat avg_clustering;
  MetricStat transitivity;

  std::size_t realizations() const noexcept { return reports.size(); }
};

/// Folds reports in the given order.
AggregateReport aggregate(std::string label, std::string model,
                          std::uint64_t master_seed,
                          std::vector<std::uint64_t> seeds,
                          std::vector<MetricsReport> reports);

std::string aggregate_to_json(const AggregateReport& report);
AggregateReport aggregate_from_json(const std::string& text);

/// Reads aggregate.json, or a single-report report.json (treated as R = 1,
/// labelled "empirical" unless it has a label).
AggregateReport load_aggregate(const std::filesystem::path& path);

/// Stream seed of realization `index`: derive_seed(master, index), or the
/// replay seed when one is set.
std::uint64_t realization_seed(const RunSpec& spec, std::size_t index);

struct Realization {
  UndirectedGraph graph;
  std::optional<GeneratedCorpus> corpus;  // blocks model only
};

/// Builds one network of the spec's model with the given stream seed.
Realization realize(const RunSpec& spec, std::uint64_t seed);

using RealizationCallback =
    std::function<void(std::size_t index, std::uint64_t seed,
                       const MetricsReport& report)>;

/// Generates and measures R realizations, `jobs` at a time, and folds them
/// in index order. With an output directory, writes config.toml,
/// aggregate.json, report_{i}.csv and degdist_{i}.tsv (plus graph_{i}.tsv
/// and corpus_{i}.jsonl on request). The callback runs on worker threads,
/// serialized.
///
/// A failing realization aborts the run with an error naming its index and
/// seed. The thrown error keeps the original ErrorKind.
AggregateReport run(const RunSpec& spec,
                    const RealizationCallback& on_realization = {});

/// Novelty-probability sweep over the blocks model. Only the number of
/// concepts is measured, so no graph is built.
struct SweepSpec {
  std::vector<double> grid;  // each in (0, 1]
  RunSpec base;              // model must be blocks
  /// One entry per grid point, or a single entry used for all points.
  std::vector<std::size_t> realizations_per_point{1};

  void validate() const;
};

struct SweepRow {
  double nu = 0.0;
  std::size_t realizations = 0;
  double mean_nodes = 0.0;
  std::optional<double> std_nodes;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // grid order
  /// Mean N is non-decreasing when rows are sorted by nu.
  bool monotone = true;
};

/// Realization r of every grid point uses derive_seed(master, r), so points
/// share their seed sequence. With an output directory, writes sweep.tsv.
SweepResult sweep_nu(const SweepSpec& spec);

/// "nu<TAB>realizations<TAB>mean_N<TAB>std_N" rows plus a trailing
/// "# monotone=true|false" line.
std::string sweep_to_tsv(const SweepResult& result);

/// Side-by-side table in the column order
/// model, N, L, rho(%), <k>, sigma, k_max (with its std), r, <c>, T.
/// Throws InputError for fewer than two reports.
std::string compare_csv(const std::vector<AggregateReport>& reports);
std::string compare_markdown(const std::vector<AggregateReport>& reports);

struct IngestResult {
  std::size_t article_count = 0;
  std::size_t duplicate_mentions = 0;
  MetricsReport report;
  DegreeDistribution degrees;
  BlockSizeDistribution block_sizes;
};

/// corpus -> (optional generic filter) -> projection -> metrics.
/// With an output directory, writes report.json, report.csv, degdist.tsv,
/// blocksizes.csv and, when `save_graph` is set, graph.tsv.
IngestResult ingest_and_report(const std::filesystem::path& corpus,
                               bool exclude_generic,
                               const std::filesystem::path& output_dir = {},
                               bool save_graph = false);

}  // namespace conceptgraph
