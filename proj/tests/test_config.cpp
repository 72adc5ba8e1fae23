#include "doctest.h"
#include "hscs/core/config.hpp"
#include "hscs/core/errors.hpp"
#include "support/tempdir.hpp"

using namespace hscs;
using testsupport::TempDir;

TEST_CASE("defaults match the reference parameterization") {
  PipelineConfig cfg;
  CHECK(cfg.n_superpixels == 400);
  CHECK(cfg.k_seeds == 40);
  CHECK(cfg.keep_ratio == 0.8);
  CHECK(cfg.clusters == 5);
  CHECK(cfg.xi == 0.01);
  CHECK(cfg.sigma2 == 0.1);
  CHECK(cfg.sigma2_recon == 0.1);
  CHECK(cfg.beta2 == 0.3);
  CHECK(cfg.top_fg == 20);
  CHECK(cfg.rng_seed == 0);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("validation rejects out-of-range fields") {
  PipelineConfig cfg;
  cfg.keep_ratio = 0.0;
  CHECK_THROWS_AS(cfg.validate(), PipelineError);
  cfg.keep_ratio = 1.5;
  CHECK_THROWS_AS(cfg.validate(), PipelineError);
  cfg = PipelineConfig{};
  cfg.sigma2 = 0.0;
  CHECK_THROWS_AS(cfg.validate(), PipelineError);
  cfg = PipelineConfig{};
  cfg.xi = -0.1;
  CHECK_THROWS_AS(cfg.validate(), PipelineError);
}

TEST_CASE("config round-trips through a file") {
  TempDir dir("config");
  PipelineConfig cfg;
  cfg.k_seeds = 25;
  cfg.sigma2_recon = 0.05;
  cfg.dump_inter = true;
  cfg.rng_seed = 1234567;
  save_config_file(cfg, dir.path() / "cfg.json");

  PipelineConfig loaded;
  ConfigOrigin origin;
  load_config_file(loaded, dir.path() / "cfg.json", origin);
  CHECK(loaded == cfg);
  CHECK(origin.at("k_seeds") == "config");
}

TEST_CASE("print_config reports values and provenance") {
  PipelineConfig cfg;
  cfg.k_seeds = 20;
  ConfigOrigin origin{{"k_seeds", "flag"}};
  const std::string dump = print_config(cfg, origin);
  CHECK(dump.find("k_seeds = 20  [flag]") != std::string::npos);
  CHECK(dump.find("n_superpixels = 400  [default]") != std::string::npos);
  CHECK(dump.find("beta2 = 0.3  [default]") != std::string::npos);
}
