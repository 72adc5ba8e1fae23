#include <random>

#include "doctest.h"
#include "hscs/core/errors.hpp"
#include "hscs/saliency/intra.hpp"
#include "hscs/segment/slic.hpp"

using namespace hscs;

namespace {

GroupContext two_image_context(int w, int h) {
  GroupContext ctx(2);
  for (ImageContext& c : ctx) {
    RgbdImage img;
    img.rgb = RgbRaster(w, h, Rgb8{120, 120, 120});
    img.depth = GrayRaster(w, h, 0.5f);
    c.seg = slic_segment(img, 4);
  }
  return ctx;
}

}  // namespace

TEST_CASE("constant intra map degenerates to 0.5 everywhere") {
  GroupContext ctx = two_image_context(32, 32);
  ImageGroup group;
  group.name = "g";
  group.images.resize(2);
  group.intra_maps.assign(2, GrayRaster(32, 32, 0.7f));

  auto maps = ingest_intra(group, ctx);
  REQUIRE(maps.size() == 2);
  for (const auto& values : maps)
    for (double v : values) CHECK(v == doctest::Approx(0.5));
}

TEST_CASE("indicator map pools to 1 inside the region, 0 elsewhere") {
  GroupContext ctx = two_image_context(32, 32);
  const SuperpixelSegmentation& seg = ctx[0].seg;
  REQUIRE(seg.n_regions() >= 2);

  GrayRaster map(32, 32, 0.0f);
  for (int y = 0; y < 32; ++y)
    for (int x = 0; x < 32; ++x)
      if (seg.labels.at(x, y) == 0) map.at(x, y) = 1.0f;

  ImageGroup group;
  group.images.resize(2);
  group.intra_maps = {map, map};
  auto values = ingest_intra(group, ctx)[0];
  CHECK(values[0] == doctest::Approx(1.0));
  for (int m = 1; m < seg.n_regions(); ++m)
    CHECK(values[m] == doctest::Approx(0.0));
}

TEST_CASE("region means match a direct averaging oracle") {
  GroupContext ctx = two_image_context(32, 32);
  const SuperpixelSegmentation& seg = ctx[0].seg;

  std::mt19937 rng(9);
  std::uniform_real_distribution<float> uni(0.0f, 1.0f);
  GrayRaster map(32, 32);
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = uni(rng);

  const auto means = region_means(map, seg);
  for (int m = 0; m < seg.n_regions(); ++m) {
    double acc = 0.0;
    int count = 0;
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 32; ++x)
        if (seg.labels.at(x, y) == m) {
          acc += map.at(x, y);
          ++count;
        }
    CHECK(means[m] == doctest::Approx(acc / count).epsilon(1e-9));
  }
}

TEST_CASE("missing intra maps raise MissingIntra") {
  GroupContext ctx = two_image_context(32, 32);
  ImageGroup group;
  group.images.resize(2);
  try {
    ingest_intra(group, ctx);
    FAIL("expected MissingIntra");
  } catch (const PipelineError& e) {
    CHECK(e.code() == ErrorCode::MissingIntra);
  }
}

TEST_CASE("fallback ranks a high-contrast centered blob in the top decile") {
  RgbdImage img;
  img.rgb = RgbRaster(96, 96, Rgb8{110, 110, 110});
  img.depth = GrayRaster(96, 96, 0.3f);
  for (int y = 36; y < 60; ++y)
    for (int x = 36; x < 60; ++x) {
      img.rgb.at(x, y) = Rgb8{230, 40, 40};
      img.depth.at(x, y) = 0.8f;
    }
  SuperpixelSegmentation seg = slic_segment(img, 64);
  const DepthConfidence dc = depth_confidence(img.depth);
  const auto saliency = fallback_intra(seg, dc);

  std::vector<double> sorted = saliency;
  std::sort(sorted.begin(), sorted.end());
  const double decile = sorted[sorted.size() * 9 / 10];

  for (int m = 0; m < seg.n_regions(); ++m) {
    const Superpixel& sp = seg.regions[m];
    const bool inside = sp.centroid[0] > 0.40 && sp.centroid[0] < 0.60 &&
                        sp.centroid[1] > 0.40 && sp.centroid[1] < 0.60 &&
                        sp.mean_rgb[0] > 0.7;
    if (inside) CHECK(saliency[m] >= decile);
  }
}

TEST_CASE("fallback on a constant image degenerates to 0.5") {
  RgbdImage img;
  img.rgb = RgbRaster(32, 32, Rgb8{77, 77, 77});
  img.depth = GrayRaster(32, 32, 0.5f);
  SuperpixelSegmentation seg = slic_segment(img, 4);
  const auto saliency = fallback_intra(seg, depth_confidence(img.depth));
  for (double v : saliency) CHECK(v == doctest::Approx(0.5));
}

TEST_CASE("flat depth (lambda=0) makes fallback depth-independent") {
  RgbdImage img;
  img.rgb = RgbRaster(64, 64, Rgb8{100, 100, 100});
  for (int y = 16; y < 32; ++y)
    for (int x = 16; x < 32; ++x) img.rgb.at(x, y) = Rgb8{220, 220, 40};

  img.depth = GrayRaster(64, 64, 0.2f);
  SuperpixelSegmentation seg = slic_segment(img, 16);
  const auto low = fallback_intra(seg, depth_confidence(img.depth));

  GrayRaster other_depth(64, 64, 0.9f);
  SuperpixelSegmentation seg2 = seg;
  // Same segmentation, different constant depth raster.
  for (Superpixel& sp : seg2.regions) sp.mean_depth = 0.9;
  const auto high = fallback_intra(seg2, depth_confidence(other_depth));

  REQUIRE(low.size() == high.size());
  for (std::size_t m = 0; m < low.size(); ++m)
    CHECK(low[m] == doctest::Approx(high[m]).epsilon(1e-12));
}
