#include <map>

#include "doctest.h"
#include "hscs/feature/texton.hpp"

using namespace hscs;

namespace {

RgbdImage gray_image(int w, int h, std::uint8_t v) {
  RgbdImage img;
  img.rgb = RgbRaster(w, h, Rgb8{v, v, v});
  img.depth = GrayRaster(w, h, 0.5f);
  return img;
}

}  // namespace

TEST_CASE("constant-gray group collapses to a single texton") {
  ImageGroup group;
  group.name = "flat";
  group.images.push_back(gray_image(48, 48, 100));
  group.images.push_back(gray_image(48, 48, 100));

  TextonModel model = compute_texton_map(group, 0);
  CHECK(model.degenerate);
  CHECK(model.codebook.rows() == kTextonCount);
  CHECK(model.codebook.cols() == kFilterCount);
  REQUIRE(model.labels.size() == 2);
  for (const LabelRaster& labels : model.labels)
    for (std::size_t i = 0; i < labels.size(); ++i) CHECK(labels[i] == 0);
}

TEST_CASE("codebook always has 15 entries and labels stay in range") {
  ImageGroup group;
  group.name = "textures";
  RgbdImage img = gray_image(64, 64, 0);
  for (int y = 0; y < 64; ++y)
    for (int x = 0; x < 64; ++x) {
      const auto v = static_cast<std::uint8_t>(((x * 13 + y * 7) % 3) * 90);
      img.rgb.at(x, y) = Rgb8{v, v, v};
    }
  group.images.push_back(img);
  group.images.push_back(gray_image(64, 64, 128));

  TextonModel model = compute_texton_map(group, 0);
  CHECK(model.codebook.rows() == kTextonCount);
  for (const LabelRaster& labels : model.labels)
    for (std::size_t i = 0; i < labels.size(); ++i) {
      CHECK(labels[i] >= 0);
      CHECK(labels[i] < kTextonCount);
    }
}

TEST_CASE("stripes and checkerboard separate with high purity") {
  const int w = 96, h = 96;
  RgbdImage img = gray_image(w, h, 0);
  // Left half: horizontal stripes (period 8); right half: 8x8 checkerboard.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool bright;
      if (x < w / 2)
        bright = (y / 4) % 2 == 0;
      else
        bright = ((x / 4) % 2) ^ ((y / 4) % 2);
      const std::uint8_t v = bright ? 220 : 40;
      img.rgb.at(x, y) = Rgb8{v, v, v};
    }
  }
  ImageGroup group;
  group.name = "twotex";
  group.images.push_back(img);
  group.images.push_back(img);

  TextonModel model = compute_texton_map(group, 0);
  const LabelRaster& labels = model.labels[0];

  // Majority-texture vote per texton, excluding a margin around the seam
  // and borders where filter support mixes the two textures.
  std::map<int, std::array<int, 2>> votes;
  const int margin = 12;
  for (int y = margin; y < h - margin; ++y) {
    for (int x = margin; x < w - margin; ++x) {
      if (std::abs(x - w / 2) < margin) continue;
      votes[labels.at(x, y)][x < w / 2 ? 0 : 1]++;
    }
  }
  long long pure = 0, total = 0;
  for (const auto& [texton, counts] : votes) {
    pure += std::max(counts[0], counts[1]);
    total += counts[0] + counts[1];
  }
  REQUIRE(total > 0);
  CHECK(static_cast<double>(pure) / total >= 0.95);
}
