#ifndef HSCS_EVAL_METRICS_HPP
#define HSCS_EVAL_METRICS_HPP

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "hscs/core/raster.hpp"

namespace hscs {

// One (precision, recall) point per threshold t in {0,...,255}, averaged
// over the images of a group.
struct PrCurve {
  std::array<double, 256> precision{};
  std::array<double, 256> recall{};
};

// Maps are quantized to 8 bits (round half up) and binarized at map >= t.
// Precision is defined as 1 when nothing is predicted. Throws
// NoGroundTruth / DimensionMismatch.
PrCurve pr_curve(const std::vector<GrayRaster>& maps,
                 const std::vector<GrayRaster>& gts);

// (1 + beta2) P R / (beta2 P + R); 0 when the denominator is 0.
double f_beta_score(double precision, double recall, double beta2);

// Adaptive-threshold F-measure: binarize at map > min(2*mean(map), 0.98).
double f_measure(const GrayRaster& map, const GrayRaster& gt, double beta2);

// Best F over the 256 fixed thresholds of the PR sweep.
double max_f_measure(const GrayRaster& map, const GrayRaster& gt, double beta2);

// Mean absolute pixel difference. Throws DimensionMismatch.
double mae(const GrayRaster& map, const GrayRaster& gt);

struct MetricReport {
  std::vector<std::string> ids;
  std::vector<double> f_beta;
  std::vector<double> f_max;
  std::vector<double> mae_values;
  PrCurve pr;

  double mean_f_beta() const;
  double mean_f_max() const;
  double mean_mae() const;
};

// Writes a CSV with one row per image plus a MEAN row (columns id, F_beta,
// MAE, F_max) and a neighbouring <path>.pr.csv with the 256 threshold rows.
void emit_report(const MetricReport& report,
                 const std::filesystem::path& csv_path);

}  // namespace hscs

#endif
