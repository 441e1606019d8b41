#include "conceptgraph/block_sizes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

#include "conceptgraph/error.hpp"

namespace conceptgraph {

namespace {

constexpr double kSumTolerance = 1e-9;
constexpr std::size_t kMaxLognormalSupport = 10'000'000;

// Shortest text that parses back to the same double.
std::string format_number(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

bool parse_double(std::string_view text, double& value) {
  const std::string owned = trim(text);
  if (owned.empty()) return false;
  char* end = nullptr;
  value = std::strtod(owned.c_str(), &end);
  return end == owned.c_str() + owned.size();
}

bool parse_size(std::string_view text, std::size_t& value) {
  const std::string owned = trim(text);
  const auto* last = owned.data() + owned.size();
  const auto [ptr, ec] = std::from_chars(owned.data(), last, value);
  return !owned.empty() && ec == std::errc{} && ptr == last;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }
double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

// Mass of a discretized log-normal with location `mu` on 1..support.
std::vector<double> lognormal_masses(double mu, double sigma) {
  const double upper = std::exp(mu + 8.0 * sigma);
  if (!(upper < static_cast<double>(kMaxLognormalSupport))) {
    throw ConfigError("log-normal block sizes: support too wide, reduce sigma");
  }
  const auto support = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(upper)));
  std::vector<double> masses(support);
  for (std::size_t n = 1; n <= support; ++n) {
    const double hi = (std::log(static_cast<double>(n) + 0.5) - mu) / sigma;
    if (n == 1) {
      masses[0] = normal_cdf(hi);
      continue;
    }
    const double lo = (std::log(static_cast<double>(n) - 0.5) - mu) / sigma;
    masses[n - 1] = lo > 0.0 ? normal_sf(lo) - normal_sf(hi)
                             : normal_cdf(hi) - normal_cdf(lo);
  }
  const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  for (double& mass : masses) mass /= total;
  return masses;
}

double discrete_mean(const std::vector<double>& masses) {
  double mean = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    mean += static_cast<double>(i + 1) * masses[i];
  }
  return mean;
}

}  // namespace

void BlockSizeDistribution::finish(std::string label) {
  if (sizes_.empty()) {
    throw ConfigError("block-size distribution has empty support");
  }
  if (sizes_.front() == 0) {
    throw ConfigError("block sizes must be positive integers");
  }
  cumulative_.resize(probabilities_.size());
  std::partial_sum(probabilities_.begin(), probabilities_.end(),
                   cumulative_.begin());
  mean_ = 0.0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    mean_ += static_cast<double>(sizes_[i]) * probabilities_[i];
  }
  label_ = std::move(label);
}

BlockSizeDistribution BlockSizeDistribution::fixed(std::size_t size) {
  if (size == 0) throw ConfigError("fixed block size must be positive");
  BlockSizeDistribution result;
  result.kind_ = Kind::fixed;
  result.sizes_ = {size};
  result.probabilities_ = {1.0};
  result.finish("fixed:" + std::to_string(size));
  return result;
}

BlockSizeDistribution BlockSizeDistribution::from_counts(
    const std::map<std::size_t, std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (const auto& [size, count] : counts) total += count;
  if (total == 0) throw InputError("block-size histogram is empty");
  BlockSizeDistribution result;
  result.kind_ = Kind::empirical;
  for (const auto& [size, count] : counts) {
    if (count == 0) continue;
    result.sizes_.push_back(size);
    result.probabilities_.push_back(static_cast<double>(count) /
                                    static_cast<double>(total));
  }
  result.finish("empirical");
  return result;
}

BlockSizeDistribution BlockSizeDistribution::from_probabilities(
    const std::map<std::size_t, double>& probabilities) {
  BlockSizeDistribution result;
  result.kind_ = Kind::empirical;
  double sum = 0.0;
  for (const auto& [size, p] : probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ConfigError("block-size probability must be finite and >= 0");
    }
    sum += p;
    if (p == 0.0) continue;
    result.sizes_.push_back(size);
    result.probabilities_.push_back(p);
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ConfigError("block-size probabilities sum to " + format_number(sum) +
                      ", expected 1");
  }
  result.finish("empirical");
  return result;
}

BlockSizeDistribution BlockSizeDistribution::lognormal(double mean,
                                                       double sigma) {
  if (!(mean >= 1.0) || !std::isfinite(mean)) {
    throw ConfigError("log-normal mean must be >= 1");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ConfigError("log-normal sigma must be > 0");
  }
  // The discrete mean grows monotonically with the location parameter.
  double lo = std::log(mean) - 4.0 * sigma * sigma - 10.0;
  double hi = std::log(mean) + 1.0;
  std::vector<double> masses;
  for (int iteration = 0; iteration < 200; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    masses = lognormal_masses(mid, sigma);
    const double current = discrete_mean(masses);
    if (std::abs(current - mean) <= 1e-10 * mean) break;
    (current < mean ? lo : hi) = mid;
  }
  BlockSizeDistribution result;
  result.kind_ = Kind::parametric;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i] <= 0.0) continue;
    result.sizes_.push_back(i + 1);
    result.probabilities_.push_back(masses[i]);
  }
  result.finish("lognormal:" + format_number(mean) + "," +
                format_number(sigma));
  return result;
}

BlockSizeDistribution BlockSizeDistribution::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("block sizes must look like fixed:<n>, "
                      "empirical:<csv> or lognormal:<mean>,<sigma>; got '" +
                      std::string(spec) + "'");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view argument = spec.substr(colon + 1);
  if (kind == "fixed") {
    std::size_t size = 0;
    if (!parse_size(argument, size)) {
      throw ConfigError("fixed block size must be a positive integer");
    }
    return fixed(size);
  }
  if (kind == "empirical") {
    auto result = read_csv(std::filesystem::path(std::string(argument)));
    result.label_ = "empirical:" + std::string(argument);
    return result;
  }
  if (kind == "lognormal") {
    const auto comma = argument.find(',');
    double mean = 0.0;
    double sigma = 0.0;
    if (comma == std::string_view::npos ||
        !parse_double(argument.substr(0, comma), mean) ||
        !parse_double(argument.substr(comma + 1), sigma)) {
      throw ConfigError("expected lognormal:<mean>,<sigma>");
    }
    return lognormal(mean, sigma);
  }
  throw ConfigError("unknown block-size kind '" + std::string(kind) + "'");
}

BlockSizeDistribution BlockSizeDistribution::read_csv(std::istream& in) {
  std::map<std::size_t, double> probabilities;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto comma = text.find(',');
    std::size_t size = 0;
    double probability = 0.0;
    const bool ok = comma != std::string::npos &&
                    parse_size(std::string_view(text).substr(0, comma), size) &&
                    parse_double(std::string_view(text).substr(comma + 1),
                                 probability);
    if (!ok) {
      if (line_number == 1 && probabilities.empty()) continue;  // header
      throw ParseError("expected 'n,probability'", line_number);
    }
    if (size == 0) throw ParseError("block size must be positive", line_number);
    if (!probabilities.emplace(size, probability).second) {
      throw ParseError("block size listed twice", line_number);
    }
  }
  return from_probabilities(probabilities);
}

BlockSizeDistribution BlockSizeDistribution::read_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading", path.string());
  return read_csv(in);
}

void BlockSizeDistribution::write_csv(std::ostream& out) const {
  out << "n,probability\n";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    out << sizes_[i] << ',' << format_number(probabilities_[i]) << '\n';
  }
}

void BlockSizeDistribution::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing", path.string());
  write_csv(out);
}

double BlockSizeDistribution::probability(std::size_t size) const {
  const auto it = std::lower_bound(sizes_.begin(), sizes_.end(), size);
  if (it == sizes_.end() || *it != size) return 0.0;
  return probabilities_[static_cast<std::size_t>(it - sizes_.begin())];
}

std::size_t BlockSizeDistribution::draw(Rng& rng) const {
  if (sizes_.size() == 1) return sizes_.front();
  const double target = rng.uniform01() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  if (it == cumulative_.end()) --it;
  return sizes_[static_cast<std::size_t>(it - cumulative_.begin())];
}

}  // namespace conceptgraph
