#include <random>

#include "doctest.h"
#include "hscs/feature/color.hpp"
#include "hscs/feature/descriptor.hpp"
#include "hscs/feature/texton.hpp"
#include "hscs/segment/slic.hpp"

using namespace hscs;

namespace {

LabHistogram random_histogram(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  LabHistogram h = LabHistogram::Zero(kLabHistBins);
  for (int i = 0; i < kLabHistBins; ++i) h[i] = uni(rng);
  h /= h.sum();
  return h;
}

LabHistogram one_hot(int bin) {
  LabHistogram h = LabHistogram::Zero(kLabHistBins);
  h[bin] = 1.0;
  return h;
}

}  // namespace

TEST_CASE("white maps to L=100, a=b=0 and HSV (0,0,1)") {
  const Lab lab = rgb_to_lab(Rgb8{255, 255, 255});
  CHECK(lab.L == doctest::Approx(100.0).epsilon(1e-6));
  CHECK(lab.a == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(lab.b == doctest::Approx(0.0).epsilon(1e-6));

  const Hsv hsv = rgb_to_hsv(Rgb8{255, 255, 255});
  CHECK(hsv.h == 0.0);
  CHECK(hsv.s == 0.0);
  CHECK(hsv.v == 1.0);

  const Vec3f unit = lab_to_unit(lab);
  CHECK(unit[0] == doctest::Approx(1.0));
  CHECK(unit[1] == doctest::Approx(128.0 / 255.0).epsilon(1e-6));
  CHECK(unit[2] == doctest::Approx(128.0 / 255.0).epsilon(1e-6));
}

TEST_CASE("primary hues land on the HSV wheel") {
  CHECK(rgb_to_hsv(Rgb8{255, 0, 0}).h == doctest::Approx(0.0));
  CHECK(rgb_to_hsv(Rgb8{0, 255, 0}).h == doctest::Approx(120.0));
  CHECK(rgb_to_hsv(Rgb8{0, 0, 255}).h == doctest::Approx(240.0));
  CHECK(rgb_to_hsv(Rgb8{255, 0, 0}).s == doctest::Approx(1.0));
}

TEST_CASE("chi-square distance: identity, disjoint, symmetry") {
  std::mt19937 rng(3);
  const LabHistogram h = random_histogram(rng);
  CHECK(chi_square(h, h) == doctest::Approx(0.0));

  CHECK(chi_square(one_hot(0), one_hot(1)) == doctest::Approx(1.0).epsilon(1e-8));

  for (int trial = 0; trial < 10; ++trial) {
    const LabHistogram a = random_histogram(rng);
    const LabHistogram b = random_histogram(rng);
    CHECK(chi_square(a, b) == doctest::Approx(chi_square(b, a)));
    CHECK(chi_square(a, b) >= 0.0);
  }
}

TEST_CASE("affinity follows exp(-(chi2 + lambda*|dd|)/sigma2)") {
  CHECK(affinity(0.0, 0.3, 0.3, 1.0, 0.1) == doctest::Approx(1.0));
  // lambda_min = 0 removes the depth term.
  CHECK(affinity(0.2, 0.1, 0.9, 0.0, 0.1) ==
        doctest::Approx(std::exp(-2.0)));
  // chi2=0.1, lambda=0.5, |dd|=0.2, sigma2=0.1 -> exp(-2).
  CHECK(affinity(0.1, 0.5, 0.3, 0.5, 0.1) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

  // Monotone non-increasing in chi2 and |dd|.
  CHECK(affinity(0.2, 0.0, 0.0, 1.0, 0.1) < affinity(0.1, 0.0, 0.0, 1.0, 0.1));
  CHECK(affinity(0.1, 0.0, 0.3, 1.0, 0.1) < affinity(0.1, 0.0, 0.2, 1.0, 0.1));
}

TEST_CASE("depth confidence of a constant map is zero") {
  GrayRaster depth(32, 32, 0.37f);
  const DepthConfidence dc = depth_confidence(depth);
  CHECK(dc.cv == doctest::Approx(0.0));
  CHECK(dc.lambda == doctest::Approx(0.0));
}

TEST_CASE("confidence lambda matches its closed form and stays nonnegative") {
  CHECK(confidence_lambda(0.5, 0.4, 0.8) ==
        doctest::Approx(std::exp(0.16) - 1.0).epsilon(1e-12));

  std::mt19937 rng(5);
  std::uniform_real_distribution<float> uni(0.0f, 1.0f);
  for (int trial = 0; trial < 5; ++trial) {
    GrayRaster depth(16, 16);
    for (std::size_t i = 0; i < depth.size(); ++i) depth[i] = uni(rng);
    const DepthConfidence dc = depth_confidence(depth);
    CHECK(dc.lambda >= 0.0);
    CHECK(dc.entropy >= 0.0);
    CHECK(dc.entropy <= 1.0);
    CHECK(dc.lambda ==
          doctest::Approx(confidence_lambda(dc.mean, dc.cv, dc.entropy)));
  }
}

TEST_CASE("feature vector layout: white center superpixel") {
  RgbdImage img;
  img.id = "white";
  img.rgb = RgbRaster(33, 33, Rgb8{255, 255, 255});
  img.depth = GrayRaster(33, 33, 0.0f);

  SuperpixelSegmentation seg = slic_segment(img, 4);
  LabelRaster textons(33, 33, 0);

  // All regions of the constant image share identical statistics.
  const auto features = compute_features(seg, textons);
  for (const FeatureVector& f : features) {
    CHECK(f.size() == kFeatureDim);
    CHECK(f[0] == doctest::Approx(1.0));  // r
    CHECK(f[1] == doctest::Approx(1.0));  // g
    CHECK(f[2] == doctest::Approx(1.0));  // b
    CHECK(f[3] == doctest::Approx(1.0));  // L scaled
    CHECK(f[4] == doctest::Approx(128.0 / 255.0).epsilon(1e-6));
    CHECK(f[5] == doctest::Approx(128.0 / 255.0).epsilon(1e-6));
    CHECK(f[6] == doctest::Approx(0.0));  // h
    CHECK(f[7] == doctest::Approx(0.0));  // s
    CHECK(f[8] == doctest::Approx(1.0));  // v
    CHECK(f[9] == doctest::Approx(0.0));  // depth
    CHECK(f[12] == doctest::Approx(1.0));  // all pixels in texton 0
    for (int t = 1; t < kTextonCount; ++t) CHECK(f[12 + t] == 0.0);
    for (int d = 0; d < kFeatureDim; ++d) {
      CHECK(f[d] >= 0.0);
      CHECK(f[d] <= 1.0);
    }
  }

  // Aggregate centroid of all regions is the exact image center.
  double cx = 0.0, weight = 0.0;
  for (const Superpixel& sp : seg.regions) {
    cx += sp.centroid[0] * sp.pixel_count;
    weight += sp.pixel_count;
  }
  CHECK(cx / weight == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("texton histogram equals direct per-pixel counts") {
  RgbdImage img;
  img.rgb = RgbRaster(32, 32, Rgb8{60, 60, 60});
  img.depth = GrayRaster(32, 32, 0.5f);
  SuperpixelSegmentation seg = slic_segment(img, 4);

  std::mt19937 rng(17);
  LabelRaster textons(32, 32);
  for (std::size_t i = 0; i < textons.size(); ++i)
    textons[i] = static_cast<int>(rng() % kTextonCount);

  const auto features = compute_features(seg, textons);
  for (int m = 0; m < seg.n_regions(); ++m) {
    std::array<int, kTextonCount> counts{};
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 32; ++x)
        if (seg.labels.at(x, y) == m) counts[textons.at(x, y)]++;
    double sum = 0.0;
    for (int t = 0; t < kTextonCount; ++t) {
      CHECK(features[m][12 + t] ==
            doctest::Approx(static_cast<double>(counts[t]) /
                            seg.regions[m].pixel_count));
      sum += features[m][12 + t];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("lab histograms: single color, even split, normalization") {
  RgbdImage img;
  img.rgb = RgbRaster(16, 16, Rgb8{200, 30, 30});
  img.depth = GrayRaster(16, 16, 0.5f);
  SuperpixelSegmentation seg;
  seg.labels = LabelRaster(16, 16, 0);
  Superpixel sp;
  sp.index = 0;
  sp.pixel_count = 256;
  seg.regions = {sp};

  auto hists = lab_histograms(seg, img.rgb);
  REQUIRE(hists.size() == 1);
  CHECK(hists[0].maxCoeff() == doctest::Approx(1.0));
  CHECK(hists[0].sum() == doctest::Approx(1.0));

  // Even split between two colors in different quantization cells.
  for (int y = 0; y < 16; ++y)
    for (int x = 8; x < 16; ++x) img.rgb.at(x, y) = Rgb8{20, 20, 230};
  auto split = lab_histograms(seg, img.rgb);
  double half_bins = 0;
  for (int b = 0; b < kLabHistBins; ++b) {
    if (split[0][b] > 0.0) {
      CHECK(split[0][b] == doctest::Approx(0.5));
      half_bins += 1;
    }
  }
  CHECK(half_bins == 2);

  // Random region: sums to 1.
  std::mt19937 rng(23);
  for (std::size_t i = 0; i < img.rgb.size(); ++i)
    img.rgb[i] = Rgb8{static_cast<std::uint8_t>(rng() % 256),
                      static_cast<std::uint8_t>(rng() % 256),
                      static_cast<std::uint8_t>(rng() % 256)};
  auto rand_h = lab_histograms(seg, img.rgb);
  CHECK(rand_h[0].sum() == doctest::Approx(1.0).epsilon(1e-9));
}
