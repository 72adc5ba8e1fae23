#ifndef HSCS_IO_DATASET_HPP
#define HSCS_IO_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hscs/core/config.hpp"
#include "hscs/core/raster.hpp"

namespace hscs {

struct RgbdImage {
  std::string id;      // file stem
  RgbRaster rgb;
  GrayRaster depth;    // normalized to [0,1]

  int width() const { return rgb.width(); }
  int height() const { return rgb.height(); }
};

struct ImageGroup {
  std::string name;
  std::vector<RgbdImage> images;
  std::vector<GrayRaster> ground_truth;  // empty, or one {0,1} mask per image
  std::vector<GrayRaster> intra_maps;    // empty, or one [0,1] raster per image

  int size() const { return static_cast<int>(images.size()); }
  bool has_ground_truth() const { return !ground_truth.empty(); }
  bool has_intra() const { return !intra_maps.empty(); }
};

// Loads a group from root/{rgb,depth[,gt][,intra]} with files matched by
// stem. Images are ordered by lexicographic stem. Throws MissingDepth,
// DimensionMismatch, ImageTooSmall, EmptyGroup (N<2), NoGroundTruth or
// MissingIntra when an optional folder covers only part of the group.
ImageGroup load_group(const std::filesystem::path& root,
                      const PipelineConfig& cfg);

// raw / max value of the source bit depth (255 or 65535).
GrayRaster normalize_depth(const Raster<std::uint16_t>& raw, int bit_depth);

// Stores round(255*v) per pixel as an 8-bit grayscale PNG.
void write_saliency_map(const GrayRaster& map,
                        const std::filesystem::path& path);

// Reads an 8/16-bit grayscale image back to [0,1].
GrayRaster read_saliency_map(const std::filesystem::path& path);

void write_rgb_image(const RgbRaster& img, const std::filesystem::path& path);
void write_label_raster(const LabelRaster& labels,
                        const std::filesystem::path& path);  // 16-bit PNG

}  // namespace hscs

#endif
