#include <doctest.h>

#include <sstream>

#include "conceptgraph/error.hpp"
#include "conceptgraph/run_config.hpp"

using namespace conceptgraph;

namespace {

RunSpec apply(const std::string& text) {
  RunSpec spec;
  std::istringstream in(text);
  apply_run_file(in, spec);
  return spec;
}

}  // namespace

TEST_CASE("run file with comments, quotes and sections") {
  const auto spec = apply(
      "# calibration run\n"
      "[run]\n"
      "model = \"blocks\"\n"
      "selection = psp   # preferential\n"
      "nu = 8.8e-3\n"
      "blocks = 'lognormal:37,0.6'\n"
      "articles = 36386\n"
      "realizations = 3\n"
      "seed = 1\n"
      "jobs = 2\n"
      "label = \"PSP # lognormal\"\n");
  CHECK(spec.model == ModelKind::blocks);
  CHECK(spec.blocks.selection == Selection::preferential);
  CHECK(spec.blocks.nu == 8.8e-3);
  CHECK(spec.blocks.block_sizes.describe() == "lognormal:37,0.6");
  CHECK(spec.blocks.articles == 36386);
  CHECK(spec.realizations == 3);
  CHECK(spec.master_seed == 1);
  CHECK(spec.jobs == 2);
  CHECK(spec.label == "PSP # lognormal");
  CHECK_NOTHROW(spec.validate());
}

TEST_CASE("bad run files") {
  CHECK_THROWS_AS(apply("colour = blue\n"), ConfigError);
  CHECK_THROWS_AS(apply("nu = lots\n"), ConfigError);
  CHECK_THROWS_AS(apply("articles = -3\n"), ConfigError);
  CHECK_THROWS_AS(apply("model = ws\n"), ConfigError);
  try {
    apply("model = er\njust words\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    apply("\n\nsave_graphs = maybe\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("written run files read back to the same settings") {
  RunSpec er;
  er.model = ModelKind::er;
  er.er = {11853, 5382448, 0};
  er.realizations = 5;
  er.master_seed = 77;
  std::ostringstream out;
  write_run_file(out, er);
  const auto back = apply(out.str());
  CHECK(back.model == ModelKind::er);
  CHECK(back.er.nodes == 11853);
  CHECK(back.er.links == 5382448);
  CHECK(back.realizations == 5);
  CHECK(back.master_seed == 77);

  RunSpec blocks;
  blocks.blocks.nu = 0.1 + 0.2;  // not exactly representable in short form
  blocks.blocks.selection = Selection::uniform;
  std::ostringstream text;
  write_run_file(text, blocks);
  const auto again = apply(text.str());
  CHECK(again.blocks.nu == blocks.blocks.nu);
  CHECK(again.blocks.selection == Selection::uniform);
}

TEST_CASE("validation") {
  RunSpec spec;
  spec.realizations = 0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.realizations = 1;
  spec.model = ModelKind::er;
  spec.er = {5, 11, 0};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.model = ModelKind::ba;
  spec.ba = {3, 4, 10, 0};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.model = ModelKind::empirical_ingest;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
}
