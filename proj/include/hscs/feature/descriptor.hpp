#ifndef HSCS_FEATURE_DESCRIPTOR_HPP
#define HSCS_FEATURE_DESCRIPTOR_HPP

#include <Eigen/Core>
#include <vector>

#include "hscs/core/raster.hpp"
#include "hscs/feature/texton.hpp"
#include "hscs/segment/slic.hpp"

namespace hscs {

inline constexpr int kFeatureDim = 27;  // 9 color + 1 depth + 2 position + 15 texton

// f = [l d p t]: mean RGB/Lab/HSV, mean depth, normalized centroid, and the
// region's texton histogram. Every component lies in [0,1].
using FeatureVector = Eigen::Matrix<double, kFeatureDim, 1>;

// Normalized 8x8x8 histogram over quantized Lab space.
constexpr int kLabHistBins = 512;
using LabHistogram = Eigen::VectorXd;

FeatureVector compute_feature(const Superpixel& sp,
                              const SuperpixelSegmentation& seg,
                              const LabelRaster& textons);

std::vector<FeatureVector> compute_features(const SuperpixelSegmentation& seg,
                                            const LabelRaster& textons);

LabHistogram lab_histogram(const Superpixel& sp,
                           const SuperpixelSegmentation& seg,
                           const RgbRaster& rgb);

std::vector<LabHistogram> lab_histograms(const SuperpixelSegmentation& seg,
                                         const RgbRaster& rgb);

// 0.5 * sum_b (a_b - b_b)^2 / (a_b + b_b + eps); symmetric, 0 iff equal.
double chi_square(const LabHistogram& a, const LabHistogram& b);

// exp(-(chi2 + lambda_min*|dm - dn|) / sigma2).
double affinity(double chi2, double depth_m, double depth_n, double lambda_min,
                double sigma2);

struct DepthConfidence {
  double mean = 0.0;     // mean of the whole depth map
  double cv = 0.0;       // coefficient of variation
  double entropy = 0.0;  // 256-bin frequency entropy, normalized by log(256)
  double lambda = 0.0;   // exp((1-mean)*cv*entropy) - 1
};

double confidence_lambda(double mean, double cv, double entropy);
DepthConfidence depth_confidence(const GrayRaster& depth);

}  // namespace hscs

#endif
