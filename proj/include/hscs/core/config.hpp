#ifndef HSCS_CORE_CONFIG_HPP
#define HSCS_CORE_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace hscs {

// Knobs of the co-saliency pipeline. Defaults follow the reference
// parameterization: 400 superpixels, K=40 seeds, 80% seed retention,
// 5 clusters, xi=0.01, sigma^2=0.1, beta^2=0.3, 20 foreground samples.
struct PipelineConfig {
  int n_superpixels = 400;
  int k_seeds = 40;
  double keep_ratio = 0.8;
  int clusters = 5;
  double xi = 0.01;
  double sigma2 = 0.1;        // affinity bandwidth (Lab chi-square + depth)
  double sigma2_recon = 0.1;  // reconstruction-error bandwidth
  double beta2 = 0.3;
  int top_fg = 20;
  std::uint64_t rng_seed = 0;
  int jobs = 0;  // 0 = auto (hardware concurrency)

  bool require_intra = false;
  bool invert_depth = false;
  bool dump_superpixels = false;
  bool dump_seeds = false;
  bool dump_inter = false;
  bool dump_energy = false;
  bool dump_features = false;

  // Throws PipelineError(InvalidConfig) when a field is out of range.
  void validate() const;

  bool operator==(const PipelineConfig&) const = default;
};

// Provenance of each field: "default", "config", or "flag".
using ConfigOrigin = std::map<std::string, std::string>;

// Merge values from a JSON config file; keys present in the file are
// marked with origin "config".
void load_config_file(PipelineConfig& cfg, const std::filesystem::path& path,
                      ConfigOrigin& origin);

void save_config_file(const PipelineConfig& cfg,
                      const std::filesystem::path& path);

// Canonical textual dump: one "name = value  [origin]" line per field.
std::string print_config(const PipelineConfig& cfg,
                         const ConfigOrigin& origin = {});

}  // namespace hscs

#endif
