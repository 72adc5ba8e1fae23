#ifndef HSCS_SALIENCY_CONTEXT_HPP
#define HSCS_SALIENCY_CONTEXT_HPP

#include <vector>

#include "hscs/feature/descriptor.hpp"
#include "hscs/segment/slic.hpp"

namespace hscs {

// Per-image state assembled once by the pipeline and consumed read-only by
// the saliency stages.
struct ImageContext {
  SuperpixelSegmentation seg;
  Adjacency adjacency;
  std::vector<FeatureVector> features;    // per superpixel
  std::vector<LabHistogram> histograms;   // per superpixel
  DepthConfidence depth;
  std::vector<double> intra;              // S_a, in [0,1]
};

using GroupContext = std::vector<ImageContext>;

}  // namespace hscs

#endif
