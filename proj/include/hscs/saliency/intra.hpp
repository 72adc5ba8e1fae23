#ifndef HSCS_SALIENCY_INTRA_HPP
#define HSCS_SALIENCY_INTRA_HPP

#include <vector>

#include "hscs/io/dataset.hpp"
#include "hscs/saliency/context.hpp"

namespace hscs {

// Mean of the pixel map over each region (no normalization).
std::vector<double> region_means(const GrayRaster& pixel_map,
                                 const SuperpixelSegmentation& seg);

// Pools precomputed intra maps to superpixel granularity and min-max
// normalizes per image. Throws PipelineError(MissingIntra) when the group
// carries no intra maps.
std::vector<std::vector<double>> ingest_intra(const ImageGroup& group,
                                              const GroupContext& ctx);

// Built-in substitute when no precomputed maps exist: center-weighted
// global contrast with depth modulation, min-max normalized.
std::vector<double> fallback_intra(const SuperpixelSegmentation& seg,
                                   const DepthConfidence& depth);

}  // namespace hscs

#endif
