#ifndef HSCS_PIPELINE_PIPELINE_HPP
#define HSCS_PIPELINE_PIPELINE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hscs/core/config.hpp"
#include "hscs/eval/metrics.hpp"

namespace hscs {

struct GroupResult {
  std::string name;
  bool ok = false;
  std::string error;
  int n_images = 0;
  double seconds = 0.0;
  std::optional<MetricReport> metrics;
};

// Full pipeline over one group directory: load, segment, features, intra,
// seeds, hierarchical reconstruction, refinement, map/report output.
// Throws PipelineError on any stage failure.
GroupResult process_group(const std::filesystem::path& group_dir,
                          const std::filesystem::path& out_dir,
                          const PipelineConfig& cfg);

// `input` is either one group (contains rgb/) or a directory of groups.
std::vector<std::filesystem::path> discover_groups(
    const std::filesystem::path& input);

// Runs every discovered group; failures are isolated per group. Returns 0
// when all groups succeeded, 1 otherwise.
int run_pipeline(const std::filesystem::path& input,
                 const std::filesystem::path& output,
                 const PipelineConfig& cfg);

}  // namespace hscs

#endif
