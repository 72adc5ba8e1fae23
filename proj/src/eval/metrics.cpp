#include "hscs/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "hscs/core/errors.hpp"

namespace hscs {

namespace {

struct ThresholdCounts {
  // Cumulative counts for "quantized value >= t".
  std::array<double, 256> tp{};
  std::array<double, 256> fp{};
  double total_positive = 0.0;
};

ThresholdCounts count_thresholds(const GrayRaster& map, const GrayRaster& gt) {
  if (!map.same_size(gt))
    throw PipelineError(ErrorCode::DimensionMismatch, "map vs ground truth");
  std::array<double, 256> pos_hist{}, neg_hist{};
  for (std::size_t i = 0; i < map.size(); ++i) {
    const int q = std::clamp(
        static_cast<int>(std::lround(255.0 * map[i])), 0, 255);
    if (gt[i] > 0.5f)
      pos_hist[q] += 1.0;
    else
      neg_hist[q] += 1.0;
  }
  ThresholdCounts counts;
  double tp = 0.0, fp = 0.0;
  for (int t = 255; t >= 0; --t) {
    tp += pos_hist[t];
    fp += neg_hist[t];
    counts.tp[t] = tp;
    counts.fp[t] = fp;
  }
  counts.total_positive = tp;
  return counts;
}

double precision_at(const ThresholdCounts& c, int t) {
  const double predicted = c.tp[t] + c.fp[t];
  return predicted > 0.0 ? c.tp[t] / predicted : 1.0;
}

double recall_at(const ThresholdCounts& c, int t) {
  return c.total_positive > 0.0 ? c.tp[t] / c.total_positive : 1.0;
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0
                   : std::accumulate(v.begin(), v.end(), 0.0) /
                         static_cast<double>(v.size());
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PrCurve pr_curve(const std::vector<GrayRaster>& maps,
                 const std::vector<GrayRaster>& gts) {
  if (gts.empty() || gts.size() != maps.size())
    throw PipelineError(ErrorCode::NoGroundTruth,
                        "need one ground-truth mask per map");
  PrCurve curve;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const ThresholdCounts counts = count_thresholds(maps[i], gts[i]);
    for (int t = 0; t < 256; ++t) {
      curve.precision[t] += precision_at(counts, t);
      curve.recall[t] += recall_at(counts, t);
    }
  }
  for (int t = 0; t < 256; ++t) {
    curve.precision[t] /= static_cast<double>(maps.size());
    curve.recall[t] /= static_cast<double>(maps.size());
  }
  return curve;
}

double f_beta_score(double precision, double recall, double beta2) {
  const double denom = beta2 * precision + recall;
  if (denom <= 0.0) return 0.0;
  return (1.0 + beta2) * precision * recall / denom;
}

double f_measure(const GrayRaster& map, const GrayRaster& gt, double beta2) {
  if (!map.same_size(gt))
    throw PipelineError(ErrorCode::DimensionMismatch, "map vs ground truth");
  double mean = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i) mean += map[i];
  mean /= static_cast<double>(map.size());
  const double tau = std::min(2.0 * mean, 0.98);

  double tp = 0.0, fp = 0.0, fn = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const bool predicted = map[i] > tau;
    const bool positive = gt[i] > 0.5f;
    if (predicted && positive) tp += 1.0;
    if (predicted && !positive) fp += 1.0;
    if (!predicted && positive) fn += 1.0;
  }
  const double precision = tp + fp > 0.0 ? tp / (tp + fp) : 1.0;
  const double recall = tp + fn > 0.0 ? tp / (tp + fn) : 1.0;
  return f_beta_score(precision, recall, beta2);
}

double max_f_measure(const GrayRaster& map, const GrayRaster& gt,
                     double beta2) {
  const ThresholdCounts counts = count_thresholds(map, gt);
  double best = 0.0;
  for (int t = 0; t < 256; ++t)
    best = std::max(best,
                    f_beta_score(precision_at(counts, t), recall_at(counts, t),
                                 beta2));
  return best;
}

double mae(const GrayRaster& map, const GrayRaster& gt) {
  if (!map.same_size(gt))
    throw PipelineError(ErrorCode::DimensionMismatch, "map vs ground truth");
  double acc = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i)
    acc += std::abs(static_cast<double>(map[i]) - static_cast<double>(gt[i]));
  return acc / static_cast<double>(map.size());
}

double MetricReport::mean_f_beta() const { return mean_of(f_beta); }
double MetricReport::mean_f_max() const { return mean_of(f_max); }
double MetricReport::mean_mae() const { return mean_of(mae_values); }

void emit_report(const MetricReport& report,
                 const std::filesystem::path& csv_path) {
  std::ofstream out(csv_path);
  if (!out)
    throw PipelineError(ErrorCode::IoError, "cannot write " + csv_path.string());
  out << "id,F_beta,MAE,F_max\n";
  for (std::size_t i = 0; i < report.ids.size(); ++i) {
    out << report.ids[i] << ',' << format_value(report.f_beta[i]) << ','
        << format_value(report.mae_values[i]) << ','
        << format_value(report.f_max[i]) << '\n';
  }
  out << "MEAN," << format_value(report.mean_f_beta()) << ','
      << format_value(report.mean_mae()) << ','
      << format_value(report.mean_f_max()) << '\n';

  std::filesystem::path pr_path = csv_path;
  pr_path.replace_extension();
  pr_path += ".pr.csv";
  std::ofstream pr(pr_path);
  if (!pr)
    throw PipelineError(ErrorCode::IoError, "cannot write " + pr_path.string());
  pr << "threshold,precision,recall\n";
  for (int t = 0; t < 256; ++t)
    pr << t << ',' << format_value(report.pr.precision[t]) << ','
       << format_value(report.pr.recall[t]) << '\n';
}

}  // namespace hscs
