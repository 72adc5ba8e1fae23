#include "hscs/feature/descriptor.hpp"

#include <algorithm>
#include <cmath>

#include "hscs/core/math.hpp"
#include "hscs/feature/color.hpp"

namespace hscs {

namespace {

inline int lab_bin(const Vec3f& unit) {
  auto q = [](float v) {
    int b = static_cast<int>(v * 8.0f);
    return std::clamp(b, 0, 7);
  };
  return (q(unit[0]) * 8 + q(unit[1])) * 8 + q(unit[2]);
}

}  // namespace

std::vector<FeatureVector> compute_features(const SuperpixelSegmentation& seg,
                                            const LabelRaster& textons) {
  const int n = seg.n_regions();
  std::vector<FeatureVector> out(n, FeatureVector::Zero());

  // Texton histograms by direct count over each region.
  std::vector<std::array<double, kTextonCount>> counts(
      n, std::array<double, kTextonCount>{});
  for (int y = 0; y < seg.labels.height(); ++y)
    for (int x = 0; x < seg.labels.width(); ++x)
      counts[seg.labels.at(x, y)][textons.at(x, y)] += 1.0;

  for (int m = 0; m < n; ++m) {
    const Superpixel& sp = seg.regions[m];
    FeatureVector& f = out[m];
    f[0] = sp.mean_rgb[0];
    f[1] = sp.mean_rgb[1];
    f[2] = sp.mean_rgb[2];
    f[3] = sp.mean_lab[0];
    f[4] = sp.mean_lab[1];
    f[5] = sp.mean_lab[2];
    f[6] = sp.mean_hsv[0];
    f[7] = sp.mean_hsv[1];
    f[8] = sp.mean_hsv[2];
    f[9] = sp.mean_depth;
    f[10] = sp.centroid[0];
    f[11] = sp.centroid[1];
    for (int t = 0; t < kTextonCount; ++t)
      f[12 + t] = counts[m][t] / sp.pixel_count;
  }
  return out;
}

FeatureVector compute_feature(const Superpixel& sp,
                              const SuperpixelSegmentation& seg,
                              const LabelRaster& textons) {
  return compute_features(seg, textons)[sp.index];
}

std::vector<LabHistogram> lab_histograms(const SuperpixelSegmentation& seg,
                                         const RgbRaster& rgb) {
  const int n = seg.n_regions();
  std::vector<LabHistogram> out(n, LabHistogram::Zero(kLabHistBins));
  for (int y = 0; y < rgb.height(); ++y) {
    for (int x = 0; x < rgb.width(); ++x) {
      const Vec3f unit = lab_to_unit(rgb_to_lab(rgb.at(x, y)));
      out[seg.labels.at(x, y)][lab_bin(unit)] += 1.0;
    }
  }
  for (int m = 0; m < n; ++m) out[m] /= seg.regions[m].pixel_count;
  return out;
}

LabHistogram lab_histogram(const Superpixel& sp,
                           const SuperpixelSegmentation& seg,
                           const RgbRaster& rgb) {
  return lab_histograms(seg, rgb)[sp.index];
}

double chi_square(const LabHistogram& a, const LabHistogram& b) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff / (a[i] + b[i] + kDivEps);
  }
  return 0.5 * acc;
}

double affinity(double chi2, double depth_m, double depth_n, double lambda_min,
                double sigma2) {
  return std::exp(-(chi2 + lambda_min * std::abs(depth_m - depth_n)) / sigma2);
}

double confidence_lambda(double mean, double cv, double entropy) {
  return std::exp((1.0 - mean) * cv * entropy) - 1.0;
}

DepthConfidence depth_confidence(const GrayRaster& depth) {
  DepthConfidence out;
  const std::size_t n = depth.size();
  if (n == 0) return out;

  double sum = 0.0, sum2 = 0.0;
  std::array<double, 256> hist{};
  for (std::size_t i = 0; i < n; ++i) {
    const double v = depth[i];
    sum += v;
    sum2 += v * v;
    hist[std::clamp(static_cast<int>(v * 256.0), 0, 255)] += 1.0;
  }
  out.mean = sum / n;
  const double var = std::max(0.0, sum2 / n - out.mean * out.mean);
  out.cv = std::sqrt(var) / std::max(out.mean, kDivEps);

  double h = 0.0;
  for (double c : hist) {
    if (c <= 0.0) continue;
    const double p = c / n;
    h -= p * std::log(p);
  }
  out.entropy = h / std::log(256.0);
  out.lambda = confidence_lambda(out.mean, out.cv, out.entropy);
  return out;
}

}  // namespace hscs
