#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "conceptgraph/baselines.hpp"
#include "conceptgraph/block_growth.hpp"

namespace conceptgraph {

enum class ModelKind { empirical_ingest, er, ba, blocks };

std::string_view to_string(ModelKind kind) noexcept;
/// Accepts "ingest"/"empirical-ingest", "er", "ba", "blocks"/"block-growth".
ModelKind parse_model_kind(std::string_view text);

/// Everything needed to reproduce one experiment.
///
/// Run files use `key = value` lines ('#' comments, optional quotes,
/// [section] headers ignored). Keys:
///   model, label, realizations, seed, jobs, out, save_graphs,
///   export_corpora,
///   nodes, links                     (er)
///   m0, m, steps                     (ba)
///   selection, nu, blocks, articles  (blocks)
///   corpus, exclude_generic          (ingest)
struct RunSpec {
  ModelKind model = ModelKind::blocks;
  std::string label;

  ErConfig er;
  BaConfig ba;
  ModelConfig blocks;
  std::filesystem::path corpus;
  bool exclude_generic = false;

  std::size_t realizations = 1;
  std::uint64_t master_seed = 0;
  std::size_t jobs = 1;
  std::filesystem::path output_dir;  // empty: nothing is written
  bool save_graphs = false;
  bool export_corpora = false;  // blocks model only

  /// Runs exactly one realization with this stream seed instead of deriving
  /// seeds from master_seed.
  std::optional<std::uint64_t> replay_seed;

  /// Throws ConfigError on inconsistent settings.
  void validate() const;

  /// Label used in comparison tables when `label` is empty.
  std::string display_label() const;
};

/// Applies `key = value` settings onto `spec`. Unknown keys are a
/// ConfigError; ParseError carries the line number.
void apply_run_file(std::istream& in, RunSpec& spec);
void apply_run_file(const std::filesystem::path& path, RunSpec& spec);

/// Writes the settings relevant to spec.model in run-file syntax.
/// `blocks_text` replaces the block-size description, which is needed for
/// empirical distributions (they describe themselves without a path).
void write_run_file(std::ostream& out, const RunSpec& spec,
                    std::string_view blocks_text = {});

}  // namespace conceptgraph
