#include "conceptgraph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

#include "conceptgraph/error.hpp"
#include "json_io.hpp"

namespace conceptgraph {

namespace {

__extension__ using Wide = __int128;

struct TriangleCounts {
  std::vector<std::uint64_t> neighbor_links;  // m_i
  std::uint64_t triangles = 0;
};

// One pass over links u < v: the common-neighbor count of a link is the
// number of triangles through it. Each node accumulates the counts of its
// incident links, which is 2 m_i. Integer-only, so the result does not
// depend on traversal order.
TriangleCounts count_triangles(const UndirectedGraph& graph) {
  const std::size_t n = graph.node_count();
  TriangleCounts result;
  std::vector<std::uint64_t> twice(n, 0);
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const auto node_u = static_cast<NodeId>(u);
    for (NodeId v : graph.neighbors(node_u)) {
      if (v <= u) continue;
      const std::uint64_t shared = graph.common_neighbor_count(node_u, v);
      twice[u] += shared;
      twice[v] += shared;
      total += shared;
    }
  }
  result.neighbor_links.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.neighbor_links[i] = twice[i] / 2;
  result.triangles = total / 3;
  return result;
}

double clustering_of(std::uint64_t neighbor_links, std::size_t degree) {
  if (degree <= 1) return 0.0;
  return 2.0 * static_cast<double>(neighbor_links) /
         (static_cast<double>(degree) * static_cast<double>(degree - 1));
}

double mean_clustering(const UndirectedGraph& graph,
                       const std::vector<std::uint64_t>& neighbor_links) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw UndefinedMetricError("average clustering of empty graph");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += clustering_of(neighbor_links[i],
                         graph.degree(static_cast<NodeId>(i)));
  }
  return sum / static_cast<double>(n);
}

std::optional<double> transitivity_of(const UndirectedGraph& graph,
                                      std::uint64_t triangles) {
  std::uint64_t triplets = 0;
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const std::uint64_t k = graph.degree(static_cast<NodeId>(i));
    if (k >= 2) triplets += k * (k - 1) / 2;
  }
  if (triplets == 0) return std::nullopt;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triplets);
}

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string format_optional(const std::optional<double>& value) {
  return value ? format_number(*value) : "undef";
}

}  // namespace

double density(const UndirectedGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 2) throw UndefinedMetricError("density needs at least two nodes");
  return 2.0 * static_cast<double>(graph.link_count()) /
         (static_cast<double>(n) * static_cast<double>(n - 1));
}

DegreeStats degree_stats(const UndirectedGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw UndefinedMetricError("degree statistics of empty graph");
  std::uint64_t sum = 0;
  Wide sum_squares = 0;
  DegreeStats stats;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t k = graph.degree(static_cast<NodeId>(i));
    sum += k;
    sum_squares += static_cast<Wide>(k) * k;
    stats.max = std::max<std::size_t>(stats.max, k);
  }
  const Wide scaled_variance = static_cast<Wide>(n) * sum_squares -
                               static_cast<Wide>(sum) * sum;  // N^2 * var
  stats.mean = static_cast<double>(sum) / static_cast<double>(n);
  stats.std = std::sqrt(static_cast<double>(scaled_variance)) /
              static_cast<double>(n);
  return stats;
}

DegreeDistribution degree_distribution(const UndirectedGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw UndefinedMetricError("degree distribution of empty graph");
  std::size_t max_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    max_degree = std::max(max_degree, graph.degree(static_cast<NodeId>(i)));
  }
  std::vector<std::size_t> histogram(max_degree + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++histogram[graph.degree(static_cast<NodeId>(i))];
  }
  DegreeDistribution result;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (histogram[k] == 0) continue;
    result.degrees.push_back(k);
    result.counts.push_back(histogram[k]);
  }
  const double total = static_cast<double>(n);
  result.probability.resize(result.degrees.size());
  result.cumulative.resize(result.degrees.size());
  std::size_t at_least = 0;
  for (std::size_t i = result.degrees.size(); i-- > 0;) {
    at_least += result.counts[i];
    result.probability[i] = static_cast<double>(result.counts[i]) / total;
    result.cumulative[i] = static_cast<double>(at_least) / total;
  }
  return result;
}

std::optional<double> try_assortativity(const UndirectedGraph& graph) {
  // Over the 2L ordered endpoint pairs: sum x = sum y = S1,
  // sum x^2 = sum y^2 = S2, sum xy = 2P.
  const std::size_t n = graph.node_count();
  const Wide pairs = 2 * static_cast<Wide>(graph.link_count());
  if (pairs == 0) return std::nullopt;
  Wide s1 = 0;
  Wide s2 = 0;
  Wide cross = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const auto node_u = static_cast<NodeId>(u);
    const Wide ku = static_cast<Wide>(graph.degree(node_u));
    // Node u appears as an endpoint k_u times.
    s1 += ku * ku;
    s2 += ku * ku * ku;
    for (NodeId v : graph.neighbors(node_u)) {
      if (v > u) cross += ku * static_cast<Wide>(graph.degree(v));
    }
  }
  const Wide numerator = pairs * 2 * cross - s1 * s1;
  const Wide denominator = pairs * s2 - s1 * s1;
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

double assortativity(const UndirectedGraph& graph) {
  const auto value = try_assortativity(graph);
  if (!value) {
    throw UndefinedMetricError(
        "assortativity undefined: no links or zero degree variance");
  }
  return *value;
}

double local_clustering(const UndirectedGraph& graph, NodeId node) {
  const std::size_t k = graph.degree(node);
  if (k <= 1) return 0.0;
  return clustering_of(graph.links_among_neighbors(node), k);
}

double average_clustering(const UndirectedGraph& graph) {
  return mean_clustering(graph, count_triangles(graph).neighbor_links);
}

std::optional<double> try_transitivity(const UndirectedGraph& graph) {
  return transitivity_of(graph, count_triangles(graph).triangles);
}

double transitivity(const UndirectedGraph& graph) {
  const auto value = try_transitivity(graph);
  if (!value) throw UndefinedMetricError("transitivity undefined: no triplets");
  return *value;
}

MetricsReport full_report(const UndirectedGraph& graph) {
  MetricsReport report;
  report.node_count = graph.node_count();
  report.link_count = graph.link_count();
  report.density = density(graph);
  const DegreeStats stats = degree_stats(graph);
  report.mean_degree = stats.mean;
  report.degree_std = stats.std;
  report.max_degree = stats.max;
  report.assortativity = try_assortativity(graph);
  const TriangleCounts triangles = count_triangles(graph);
  report.avg_clustering = mean_clustering(graph, triangles.neighbor_links);
  report.transitivity = transitivity_of(graph, triangles.triangles);
  for (const auto& component : graph.connected_components()) {
    report.component_sizes.push_back(component.size());
  }
  std::sort(report.component_sizes.begin(), report.component_sizes.end(),
            std::greater<>());
  return report;
}

double log_binned_tail_slope(const DegreeDistribution& distribution,
                             double decades, std::size_t bins_per_decade) {
  if (distribution.degrees.empty() || bins_per_decade == 0 || !(decades > 0)) {
    throw UndefinedMetricError("tail slope: empty distribution or bad bins");
  }
  const double top = static_cast<double>(distribution.degrees.back());
  const auto bins = static_cast<std::size_t>(
      std::ceil(decades * static_cast<double>(bins_per_decade)));
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t b = 0; b < bins; ++b) {
    // Bin b covers (lo, hi], counted downward from the maximum degree.
    const double hi = top * std::pow(10.0, -static_cast<double>(b) /
                                               bins_per_decade);
    const double lo = top * std::pow(10.0, -static_cast<double>(b + 1) /
                                               bins_per_decade);
    const double width = std::floor(hi) - std::floor(lo);
    if (width <= 0) continue;
    double mass = 0.0;
    for (std::size_t i = 0; i < distribution.degrees.size(); ++i) {
      const auto k = static_cast<double>(distribution.degrees[i]);
      if (k > lo && k <= hi) mass += distribution.probability[i];
    }
    if (mass <= 0.0) continue;
    xs.push_back(std::log10(std::sqrt(lo * hi)));
    ys.push_back(std::log10(mass / width));
  }
  // Bins were collected from the top down; keep only those above the
  // density peak so a lower degree cutoff inside the window is not fitted.
  const auto peak = static_cast<std::size_t>(
      std::max_element(ys.begin(), ys.end()) - ys.begin());
  xs.resize(peak);
  ys.resize(peak);
  if (xs.size() < 2) {
    throw UndefinedMetricError("tail slope needs at least two non-empty bins");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(xs.size());
  mean_y /= static_cast<double>(xs.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
  }
  return sxy / sxx;
}

nlohmann::json report_to_json_value(const MetricsReport& report) {
  auto optional = [](const std::optional<double>& value) -> nlohmann::json {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
  };
  nlohmann::json object;
  object["N"] = report.node_count;
  object["L"] = report.link_count;
  object["rho"] = report.density;
  object["rho_percent"] = 100.0 * report.density;
  object["mean_k"] = report.mean_degree;
  object["sigma"] = report.degree_std;
  object["k_max"] = report.max_degree;
  object["r"] = optional(report.assortativity);
  object["avg_c"] = report.avg_clustering;
  object["T"] = optional(report.transitivity);
  object["component_sizes"] = report.component_sizes;
  return object;
}

MetricsReport report_from_json_value(const nlohmann::json& object) {
  auto optional = [](const nlohmann::json& value) -> std::optional<double> {
    if (value.is_null()) return std::nullopt;
    return value.get<double>();
  };
  try {
    MetricsReport report;
    report.node_count = object.at("N").get<std::size_t>();
    report.link_count = object.at("L").get<std::size_t>();
    report.density = object.at("rho").get<double>();
    report.mean_degree = object.at("mean_k").get<double>();
    report.degree_std = object.at("sigma").get<double>();
    report.max_degree = object.at("k_max").get<std::size_t>();
    report.assortativity = optional(object.at("r"));
    report.avg_clustering = object.at("avg_c").get<double>();
    report.transitivity = optional(object.at("T"));
    report.component_sizes =
        object.value("component_sizes", std::vector<std::size_t>{});
    return report;
  } catch (const nlohmann::json::exception& error) {
    throw ParseError(std::string("metrics report: ") + error.what());
  }
}

std::string report_to_json(const MetricsReport& report) {
  return report_to_json_value(report).dump();
}

MetricsReport report_from_json(const std::string& text) {
  nlohmann::json object;
  try {
    object = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw ParseError(std::string("metrics report: ") + error.what());
  }
  return report_from_json_value(object);
}

std::string report_csv_header() {
  return "N,L,rho_percent,mean_k,sigma,k_max,r,avg_c,T";
}

std::string report_csv_row(const MetricsReport& report) {
  std::string row;
  row += std::to_string(report.node_count) + ',';
  row += std::to_string(report.link_count) + ',';
  row += format_number(100.0 * report.density) + ',';
  row += format_number(report.mean_degree) + ',';
  row += format_number(report.degree_std) + ',';
  row += std::to_string(report.max_degree) + ',';
  row += format_optional(report.assortativity) + ',';
  row += format_number(report.avg_clustering) + ',';
  row += format_optional(report.transitivity);
  return row;
}

void write_degree_distribution(std::ostream& out,
                               const DegreeDistribution& distribution) {
  out << "# k\tP(k)\tP_cum(k)\n";
  char buffer[96];
  for (std::size_t i = 0; i < distribution.degrees.size(); ++i) {
    std::snprintf(buffer, sizeof buffer, "%zu\t%.17g\t%.17g\n",
                  distribution.degrees[i], distribution.probability[i],
                  distribution.cumulative[i]);
    out << buffer;
  }
}

}  // namespace conceptgraph
