#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conceptgraph/graph.hpp"

namespace conceptgraph {

/// One row of the structural summary table. Metrics that have no value for
/// the graph (zero-variance assortativity, no triplets) are nullopt, never 0.
struct MetricsReport {
  std::size_t node_count = 0;
  std::size_t link_count = 0;
  double density = 0.0;  // fraction, not percent
  double mean_degree = 0.0;
  double degree_std = 0.0;  // population standard deviation
  std::size_t max_degree = 0;
  std::optional<double> assortativity;
  double avg_clustering = 0.0;
  std::optional<double> transitivity;
  std::vector<std::size_t> component_sizes;  // descending

  bool operator==(const MetricsReport&) const = default;
};

struct DegreeStats {
  double mean = 0.0;
  double std = 0.0;
  std::size_t max = 0;
};

/// Exact, unbinned degree distribution over observed degrees (ascending).
/// cumulative[i] = P(k >= degrees[i]).
struct DegreeDistribution {
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> counts;
  std::vector<double> probability;
  std::vector<double> cumulative;
};

/// 2L / (N(N-1)). Throws UndefinedMetricError for N < 2.
double density(const UndirectedGraph& graph);

/// Throws UndefinedMetricError for an empty graph.
DegreeStats degree_stats(const UndirectedGraph& graph);

DegreeDistribution degree_distribution(const UndirectedGraph& graph);

/// Pearson correlation of the degrees at the two ends of every link, taken
/// over both orientations. Computed from exact integer moments.
/// Throws UndefinedMetricError without links or with zero degree variance.
double assortativity(const UndirectedGraph& graph);
std::optional<double> try_assortativity(const UndirectedGraph& graph);

/// 2 m_i / (k_i (k_i - 1)); nodes with k_i <= 1 get 0.
double local_clustering(const UndirectedGraph& graph, NodeId node);

/// Mean of local_clustering over all N nodes, summed in node order.
double average_clustering(const UndirectedGraph& graph);

/// 3 * triangles / sum_i k_i (k_i - 1) / 2.
/// Throws UndefinedMetricError when no node has degree >= 2.
double transitivity(const UndirectedGraph& graph);
std::optional<double> try_transitivity(const UndirectedGraph& graph);

/// Every metric above from one triangle-counting pass. Requires N >= 2.
MetricsReport full_report(const UndirectedGraph& graph);

/// Least-squares slope of log10 P(k) against log10 k over the top `decades`
/// of observed degrees, after logarithmic binning (`bins_per_decade` bins
/// anchored at k_max, density = P(bin) / number of integers in the bin).
/// Only bins above the densest one enter the fit, so the rising part below
/// a minimum-degree cutoff is ignored. A visual-guide check, not an
/// estimator. Throws UndefinedMetricError with fewer than two usable bins.
double log_binned_tail_slope(const DegreeDistribution& distribution,
                             double decades = 1.0,
                             std::size_t bins_per_decade = 10);

// Serialization.

/// Flat JSON object; undefined metrics are null.
std::string report_to_json(const MetricsReport& report);
MetricsReport report_from_json(const std::string& text);

/// "N,L,rho_percent,mean_k,sigma,k_max,r,avg_c,T"
std::string report_csv_header();
/// Undefined metrics render as "undef".
std::string report_csv_row(const MetricsReport& report);

/// "k<TAB>P(k)<TAB>P_cum(k)" lines, ascending k, after a '#' header line.
void write_degree_distribution(std::ostream& out,
                               const DegreeDistribution& distribution);

}  // namespace conceptgraph
