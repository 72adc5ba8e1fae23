#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "hscs/core/config.hpp"
#include "hscs/core/errors.hpp"
#include "hscs/core/log.hpp"
#include "hscs/pipeline/pipeline.hpp"

namespace {

// Precedence: defaults < --config-file < explicit flags. The first pass
// only grabs the config file path; the second parses everything else on
// top of the file-loaded values.
int run(int argc, char** argv) {
  std::string config_file;
  {
    CLI::App pre{"hscs"};
    pre.allow_extras();
    pre.set_help_flag();
    pre.add_option("--config-file", config_file);
    try {
      pre.parse(argc, argv);
    } catch (const CLI::ParseError&) {
      // Full parser below reports errors with complete help text.
    }
  }

  hscs::PipelineConfig cfg;
  hscs::ConfigOrigin origin;
  if (!config_file.empty())
    hscs::load_config_file(cfg, config_file, origin);

  CLI::App app{
      "RGBD co-saliency detection via hierarchical sparsity reconstruction "
      "and energy-function refinement"};
  app.get_formatter()->column_width(34);

  std::string input, output;
  bool print_only = false;
  std::string config_file_dup;

  app.add_option("--input", input, "Dataset or group directory (rgb/ depth/ [gt/] [intra/])");
  app.add_option("--output", output, "Output directory for maps and reports");
  app.add_option("--config-file", config_file_dup, "JSON config file (flags override it)");
  app.add_option("--n-superpixels", cfg.n_superpixels, "Superpixels per image")->capture_default_str();
  app.add_option("--k-seeds", cfg.k_seeds, "Initial foreground seeds per image")->capture_default_str();
  app.add_option("--keep-ratio", cfg.keep_ratio, "Fraction of seeds kept by the ranking filter")->capture_default_str();
  app.add_option("--clusters", cfg.clusters, "Seed cluster count")->capture_default_str();
  app.add_option("--xi", cfg.xi, "L1 weight of the sparse reconstruction")->capture_default_str();
  app.add_option("--sigma2", cfg.sigma2, "Affinity bandwidth")->capture_default_str();
  app.add_option("--sigma2-recon", cfg.sigma2_recon, "Reconstruction-error bandwidth")->capture_default_str();
  app.add_option("--beta2", cfg.beta2, "F-measure beta^2")->capture_default_str();
  app.add_option("--top-fg", cfg.top_fg, "Foreground samples per image for the holistic term")->capture_default_str();
  app.add_option("--rng-seed", cfg.rng_seed, "Seed for K-means++ stages")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = auto)")->capture_default_str();
  app.add_flag("--require-intra", cfg.require_intra, "Fail groups without intra/ maps");
  app.add_flag("--invert-depth", cfg.invert_depth, "Flip the depth convention (1 - d)");
  app.add_flag("--dump-superpixels", cfg.dump_superpixels, "Write label rasters (16-bit PNG)");
  app.add_flag("--dump-seeds", cfg.dump_seeds, "Write seed overlays (initial red, final yellow)");
  app.add_flag("--dump-inter", cfg.dump_inter, "Write global/pairwise/fused inter maps");
  app.add_flag("--dump-energy", cfg.dump_energy, "Log energy terms before/after refinement");
  app.add_flag("--dump-features", cfg.dump_features, "Write per-superpixel feature CSVs");
  app.add_flag("--print-config", print_only, "Print the effective config and exit");

  CLI11_PARSE(app, argc, argv);

  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() == 0) continue;
    std::string name = opt->get_name();
    if (name.rfind("--", 0) == 0) name = name.substr(2);
    std::replace(name.begin(), name.end(), '-', '_');
    origin[name] = "flag";
  }

  try {
    cfg.validate();
  } catch (const hscs::PipelineError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  if (print_only) {
    std::fputs(hscs::print_config(cfg, origin).c_str(), stdout);
    return 0;
  }
  if (input.empty() || output.empty()) {
    std::fprintf(stderr, "%s\n", app.help().c_str());
    std::fprintf(stderr, "error: --input and --output are required\n");
    return 2;
  }

  HSCS_INFO("configuration:\n%s", hscs::print_config(cfg, origin).c_str());
  return hscs::run_pipeline(input, output, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fatal: %s\n", e.what());
    return 2;
  }
}
