#include "hscs/saliency/intra.hpp"

#include <cmath>

#include "hscs/core/errors.hpp"
#include "hscs/core/math.hpp"

namespace hscs {

std::vector<double> region_means(const GrayRaster& pixel_map,
                                 const SuperpixelSegmentation& seg) {
  std::vector<double> sums(seg.n_regions(), 0.0);
  for (int y = 0; y < pixel_map.height(); ++y)
    for (int x = 0; x < pixel_map.width(); ++x)
      sums[seg.labels.at(x, y)] += pixel_map.at(x, y);
  for (int m = 0; m < seg.n_regions(); ++m)
    sums[m] /= seg.regions[m].pixel_count;
  return sums;
}

std::vector<std::vector<double>> ingest_intra(const ImageGroup& group,
                                              const GroupContext& ctx) {
  if (!group.has_intra())
    throw PipelineError(ErrorCode::MissingIntra, group.name);

  std::vector<std::vector<double>> out;
  out.reserve(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    std::vector<double> values = region_means(group.intra_maps[i], ctx[i].seg);
    normalize_min_max(values);
    out.push_back(std::move(values));
  }
  return out;
}

std::vector<double> fallback_intra(const SuperpixelSegmentation& seg,
                                   const DepthConfidence& depth) {
  const int n = seg.n_regions();
  std::vector<double> out(n, 0.0);
  for (int m = 0; m < n; ++m) {
    const Superpixel& a = seg.regions[m];
    double contrast = 0.0;
    for (int k = 0; k < n; ++k) {
      const Superpixel& b = seg.regions[k];
      double color = 0.0, dist = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double dl = a.mean_lab[c] - b.mean_lab[c];
        color += dl * dl;
      }
      for (int c = 0; c < 2; ++c) {
        const double dp = a.centroid[c] - b.centroid[c];
        dist += dp * dp;
      }
      contrast += b.pixel_count * std::sqrt(color) *
                  std::exp(-std::sqrt(dist) / 0.4);
    }
    out[m] = contrast *
             (1.0 + depth.lambda * std::abs(a.mean_depth - depth.mean));
  }
  normalize_min_max(out);
  return out;
}

}  // namespace hscs
