#include <filesystem>

#include "doctest.h"
#include "hscs/core/errors.hpp"
#include "hscs/pipeline/pipeline.hpp"
#include "support/synthetic.hpp"
#include "support/tempdir.hpp"

using namespace hscs;
using namespace hscs::testsupport;

namespace {

PipelineConfig fast_config() {
  PipelineConfig cfg;
  cfg.n_superpixels = 100;
  cfg.k_seeds = 12;
  cfg.top_fg = 8;
  cfg.jobs = 2;
  return cfg;
}

}  // namespace

TEST_CASE("end-to-end on a synthetic group produces maps and a report") {
  TempDir dir("pipeline");
  const SyntheticScene scene = synthetic_scene(96, 96, 3);
  write_scene(scene, dir.path() / "group");

  const PipelineConfig cfg = fast_config();
  const GroupResult result =
      process_group(dir.path() / "group", dir.path() / "out", cfg);
  CHECK(result.ok);
  CHECK(result.n_images == 3);
  REQUIRE(result.metrics.has_value());

  for (int i = 0; i < 3; ++i) {
    const auto map_path =
        dir.path() / "out" / ("img" + std::to_string(i) + ".png");
    REQUIRE(std::filesystem::exists(map_path));
    const GrayRaster map = read_saliency_map(map_path);
    CHECK(map.width() == 96);
    CHECK(map.height() == 96);
  }
  CHECK(std::filesystem::exists(dir.path() / "out" / "report.csv"));
  CHECK(std::filesystem::exists(dir.path() / "out" / "report.pr.csv"));

  // The common square should outscore the background on average.
  const GrayRaster map0 = read_saliency_map(dir.path() / "out" / "img0.png");
  const double inside = mean_over_mask(map0, scene.square_mask[0], true);
  const double outside = mean_over_mask(map0, scene.square_mask[0], false);
  CHECK(inside > outside);
}

TEST_CASE("require-intra fails a group without intra maps") {
  TempDir dir("require_intra");
  const SyntheticScene scene = synthetic_scene(96, 96, 2);
  write_scene(scene, dir.path() / "group");

  PipelineConfig cfg = fast_config();
  cfg.require_intra = true;
  try {
    process_group(dir.path() / "group", dir.path() / "out", cfg);
    FAIL("expected MissingIntra");
  } catch (const PipelineError& e) {
    CHECK(e.code() == ErrorCode::MissingIntra);
  }
  CHECK(run_pipeline(dir.path() / "group", dir.path() / "out", cfg) == 1);
}

TEST_CASE("dump flags write the debug artifacts") {
  TempDir dir("dumps");
  const SyntheticScene scene = synthetic_scene(96, 96, 2);
  write_scene(scene, dir.path() / "group");

  PipelineConfig cfg = fast_config();
  cfg.dump_superpixels = true;
  cfg.dump_seeds = true;
  cfg.dump_inter = true;
  cfg.dump_features = true;
  process_group(dir.path() / "group", dir.path() / "out", cfg);

  for (const char* suffix :
       {"_superpixels.png", "_seeds.png", "_inter_global.png",
        "_inter_pairwise.png", "_inter_fused.png", "_features.csv"})
    CHECK(std::filesystem::exists(dir.path() / "out" / ("img0" + std::string(suffix))));
}

TEST_CASE("group discovery: single group vs dataset of groups") {
  TempDir dir("discover");
  const SyntheticScene scene = synthetic_scene(96, 96, 2);
  write_scene(scene, dir.path() / "data" / "g1");
  write_scene(scene, dir.path() / "data" / "g2");

  const auto groups = discover_groups(dir.path() / "data");
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].filename() == "g1");
  CHECK(groups[1].filename() == "g2");

  const auto single = discover_groups(dir.path() / "data" / "g1");
  REQUIRE(single.size() == 1);

  CHECK(discover_groups(dir.path() / "nothing").empty());
}

TEST_CASE("failures are isolated per group") {
  TempDir dir("isolate");
  const SyntheticScene scene = synthetic_scene(96, 96, 2);
  write_scene(scene, dir.path() / "data" / "good");
  // Broken group: one rgb without depth partner.
  std::filesystem::create_directories(dir.path() / "data" / "bad" / "rgb");
  std::filesystem::create_directories(dir.path() / "data" / "bad" / "depth");
  write_rgb_image(RgbRaster(32, 32, Rgb8{5, 5, 5}),
                  dir.path() / "data" / "bad" / "rgb" / "x.png");

  PipelineConfig cfg = fast_config();
  const int status = run_pipeline(dir.path() / "data", dir.path() / "out", cfg);
  CHECK(status == 1);  // bad group failed...
  CHECK(std::filesystem::exists(dir.path() / "out" / "good" / "img0.png"));
}
