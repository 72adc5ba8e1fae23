#ifndef HSCS_FEATURE_TEXTON_HPP
#define HSCS_FEATURE_TEXTON_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "hscs/core/raster.hpp"
#include "hscs/io/dataset.hpp"

namespace hscs {

inline constexpr int kTextonCount = 15;
inline constexpr int kFilterCount = 17;

using FilterResponses = Raster<std::array<float, kFilterCount>>;

// 17-filter bank on luminance (Lab L / 100): Gaussians at sigma {1,2,4},
// LoG at sigma {2,4}, and first-derivative filters at 6 orientations and
// 2 scales (steered from the x/y derivative pair).
FilterResponses filter_bank_responses(const RgbRaster& rgb);

struct TextonModel {
  Eigen::MatrixXd codebook;            // kTextonCount x kFilterCount
  std::vector<LabelRaster> labels;     // per image, values in [0, kTextonCount)
  bool degenerate = false;             // codebook padded after collapse
};

// Learns a K-means codebook over filter responses pooled from every image
// of the group (pixels subsampled x4 per axis) and assigns each pixel its
// nearest texton. The codebook is shared by the whole group.
TextonModel compute_texton_map(const ImageGroup& group, std::uint64_t rng_seed);

}  // namespace hscs

#endif
