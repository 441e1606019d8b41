#include "conceptgraph/run_config.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "conceptgraph/error.hpp"

namespace conceptgraph {

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::string unquote(std::string_view value) {
  if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
      value.back() == value.front()) {
    return std::string(value.substr(1, value.size() - 2));
  }
  return std::string(value);
}

template <typename Integer>
Integer to_integer(std::string_view key, const std::string& value) {
  Integer result{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, result);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("'" + std::string(key) + "' expects a non-negative "
                      "integer, got '" + value + "'");
  }
  return result;
}

double to_double(std::string_view key, const std::string& value) {
  char* end = nullptr;
  const double result = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) {
    throw ConfigError("'" + std::string(key) + "' expects a number, got '" +
                      value + "'");
  }
  return result;
}

bool to_bool(std::string_view key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("'" + std::string(key) + "' expects true/false");
}

// Shortest text that parses back to the same double.
std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

void apply_setting(RunSpec& spec, std::string_view key,
                   const std::string& value) {
  if (key == "model") {
    spec.model = parse_model_kind(value);
  } else if (key == "label") {
    spec.label = value;
  } else if (key == "realizations") {
    spec.realizations = to_integer<std::size_t>(key, value);
    spec.blocks.realizations = spec.realizations;
  } else if (key == "seed") {
    spec.master_seed = to_integer<std::uint64_t>(key, value);
  } else if (key == "jobs") {
    spec.jobs = to_integer<std::size_t>(key, value);
  } else if (key == "out") {
    spec.output_dir = value;
  } else if (key == "save_graphs") {
    spec.save_graphs = to_bool(key, value);
  } else if (key == "export_corpora") {
    spec.export_corpora = to_bool(key, value);
  } else if (key == "nodes") {
    spec.er.nodes = to_integer<std::size_t>(key, value);
  } else if (key == "links") {
    spec.er.links = to_integer<std::size_t>(key, value);
  } else if (key == "m0") {
    spec.ba.initial_nodes = to_integer<std::size_t>(key, value);
  } else if (key == "m") {
    spec.ba.links_per_step = to_integer<std::size_t>(key, value);
  } else if (key == "steps") {
    spec.ba.steps = to_integer<std::size_t>(key, value);
  } else if (key == "selection") {
    spec.blocks.selection = parse_selection(value);
  } else if (key == "nu") {
    spec.blocks.nu = to_double(key, value);
  } else if (key == "blocks") {
    spec.blocks.block_sizes = BlockSizeDistribution::parse(value);
  } else if (key == "articles") {
    spec.blocks.articles = to_integer<std::size_t>(key, value);
  } else if (key == "corpus") {
    spec.corpus = value;
  } else if (key == "exclude_generic") {
    spec.exclude_generic = to_bool(key, value);
  } else {
    throw ConfigError("unknown run-file key '" + std::string(key) + "'");
  }
}

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::empirical_ingest:
      return "ingest";
    case ModelKind::er:
      return "er";
    case ModelKind::ba:
      return "ba";
    case ModelKind::blocks:
      return "blocks";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "ingest" || text == "empirical-ingest") {
    return ModelKind::empirical_ingest;
  }
  if (text == "er") return ModelKind::er;
  if (text == "ba") return ModelKind::ba;
  if (text == "blocks" || text == "block-growth") return ModelKind::blocks;
  throw ConfigError("model must be er, ba, blocks or ingest; got '" +
                    std::string(text) + "'");
}

void RunSpec::validate() const {
  if (realizations == 0) throw ConfigError("realizations must be >= 1");
  if (jobs == 0) throw ConfigError("jobs must be >= 1");
  switch (model) {
    case ModelKind::er: {
      const std::size_t n = er.nodes;
      const std::size_t max_links = n < 2 ? 0 : n * (n - 1) / 2;
      if (n < 2) throw ConfigError("er: nodes must be >= 2");
      if (er.links > max_links) {
        throw ConfigError("er: links exceed N(N-1)/2");
      }
      break;
    }
    case ModelKind::ba:
      if (ba.links_per_step == 0 || ba.links_per_step > ba.initial_nodes) {
        throw ConfigError("ba: need 1 <= m <= m0");
      }
      if (ba.steps == 0) throw ConfigError("ba: steps must be >= 1");
      break;
    case ModelKind::blocks:
      blocks.validate();
      break;
    case ModelKind::empirical_ingest:
      if (corpus.empty()) throw ConfigError("ingest: corpus path required");
      if (realizations != 1) {
        throw ConfigError("ingest is deterministic; realizations must be 1");
      }
      break;
  }
}

std::string RunSpec::display_label() const {
  if (!label.empty()) return label;
  switch (model) {
    case ModelKind::er:
      return "Erdos-Renyi";
    case ModelKind::ba:
      return "Barabasi-Albert";
    case ModelKind::blocks:
      return std::string(blocks.selection == Selection::uniform ? "USP"
                                                                : "PSP") +
             ", " + blocks.block_sizes.describe();
    case ModelKind::empirical_ingest:
      return "empirical";
  }
  return "run";
}

void apply_run_file(std::istream& in, RunSpec& spec) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view text = trim(line);
    if (text.empty() || text.front() == '#' || text.front() == '[') continue;
    const auto equals = text.find('=');
    if (equals == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_number);
    }
    const std::string_view key = trim(text.substr(0, equals));
    std::string_view raw = trim(text.substr(equals + 1));
    if (!raw.empty() && raw.front() != '"' && raw.front() != '\'') {
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = trim(raw.substr(0, hash));
      }
    }
    if (key.empty()) throw ParseError("empty key", line_number);
    try {
      apply_setting(spec, key, unquote(raw));
    } catch (const ConfigError& error) {
      throw ConfigError("line " + std::to_string(line_number) + ": " +
                        error.what());
    }
  }
}

void apply_run_file(const std::filesystem::path& path, RunSpec& spec) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading", path.string());
  apply_run_file(in, spec);
}

void write_run_file(std::ostream& out, const RunSpec& spec,
                    std::string_view blocks_text) {
  out << "model = \"" << to_string(spec.model) << "\"\n";
  if (!spec.label.empty()) out << "label = \"" << spec.label << "\"\n";
  out << "realizations = " << spec.realizations << '\n';
  out << "seed = " << spec.master_seed << '\n';
  switch (spec.model) {
    case ModelKind::er:
      out << "nodes = " << spec.er.nodes << '\n';
      out << "links = " << spec.er.links << '\n';
      break;
    case ModelKind::ba:
      out << "m0 = " << spec.ba.initial_nodes << '\n';
      out << "m = " << spec.ba.links_per_step << '\n';
      out << "steps = " << spec.ba.steps << '\n';
      break;
    case ModelKind::blocks:
      out << "selection = \"" << to_string(spec.blocks.selection) << "\"\n";
      out << "nu = " << format_double(spec.blocks.nu) << '\n';
      out << "blocks = \""
          << (blocks_text.empty() ? spec.blocks.block_sizes.describe()
                                  : std::string(blocks_text))
          << "\"\n";
      out << "articles = " << spec.blocks.articles << '\n';
      break;
    case ModelKind::empirical_ingest:
      out << "corpus = \"" << spec.corpus.string() << "\"\n";
      out << "exclude_generic = "
          << (spec.exclude_generic ? "true" : "false") << '\n';
      break;
  }
}

}  // namespace conceptgraph
