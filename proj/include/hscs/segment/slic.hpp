#ifndef HSCS_SEGMENT_SLIC_HPP
#define HSCS_SEGMENT_SLIC_HPP

#include <array>
#include <utility>
#include <vector>

#include "hscs/core/raster.hpp"
#include "hscs/io/dataset.hpp"

namespace hscs {

inline constexpr double kSlicCompactness = 10.0;
inline constexpr int kSlicIterations = 10;
inline constexpr int kMinRegionPixels = 16;

struct Superpixel {
  int index = 0;
  int pixel_count = 0;
  std::array<double, 2> centroid{};  // normalized to [0,1] per axis
  std::array<double, 3> mean_rgb{};  // each channel in [0,1]
  std::array<double, 3> mean_lab{};  // L/100, (a+128)/255, (b+128)/255
  std::array<double, 3> mean_hsv{};  // h/360, s, v
  double mean_depth = 0.0;
};

struct SuperpixelSegmentation {
  LabelRaster labels;
  std::vector<Superpixel> regions;

  int n_regions() const { return static_cast<int>(regions.size()); }
};

// Within-image adjacency: (m,n) are neighbors iff their regions share a
// 4-connected pixel boundary. Symmetric and irreflexive.
struct Adjacency {
  std::vector<std::vector<int>> neighbors;  // sorted, per region

  bool contains(int m, int n) const;
  std::vector<std::pair<int, int>> pairs() const;  // each unordered pair once, m<n
};

// SLIC on Lab + xy with the given compactness, 10 iterations, followed by
// connectivity enforcement that merges fragments below kMinRegionPixels
// into the most similar adjacent region. Deterministic. Throws
// PipelineError(ImageTooSmall) unless 4 <= n_target <= W*H/16.
SuperpixelSegmentation slic_segment(const RgbdImage& img, int n_target,
                                    double compactness = kSlicCompactness);

Adjacency build_adjacency(const SuperpixelSegmentation& seg);

}  // namespace hscs

#endif
