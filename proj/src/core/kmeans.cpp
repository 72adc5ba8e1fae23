#include "hscs/core/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hscs/core/errors.hpp"

namespace hscs {

namespace {

double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int nearest_center(const Eigen::MatrixXd& centers, int k,
                   const Eigen::VectorXd& x, double* dist2_out = nullptr) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int c = 0; c < k; ++c) {
    const double d = (centers.row(c).transpose() - x).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  if (dist2_out) *dist2_out = best_d;
  return best;
}

// Distinct rows in first-occurrence order; stops once `limit` are found.
std::vector<int> distinct_rows(const Eigen::MatrixXd& points, int limit) {
  std::vector<int> keep;
  for (int i = 0; i < points.rows(); ++i) {
    bool seen = false;
    for (int j : keep) {
      if (points.row(i) == points.row(j)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      keep.push_back(i);
      if (static_cast<int>(keep.size()) >= limit) break;
    }
  }
  return keep;
}

}  // namespace

KMeansResult kmeans_pp(const Eigen::MatrixXd& points, int k,
                       std::uint64_t rng_seed) {
  const int n = static_cast<int>(points.rows());
  const int dim = static_cast<int>(points.cols());
  if (n < k)
    throw PipelineError(ErrorCode::TooFewSeeds,
                        std::to_string(n) + " points for k=" + std::to_string(k));

  KMeansResult result;
  result.centers.resize(k, dim);
  result.assignment.assign(n, 0);

  const std::vector<int> distinct = distinct_rows(points, k);
  if (static_cast<int>(distinct.size()) < k) {
    // Collapsed input: use the distinct values and pad by repeating the
    // first one so the codebook keeps its contracted size.
    for (int c = 0; c < k; ++c) {
      const int src = c < static_cast<int>(distinct.size()) ? distinct[c] : distinct[0];
      result.centers.row(c) = points.row(src);
    }
    result.degenerate = true;
    double distortion = 0.0;
    for (int i = 0; i < n; ++i) {
      double d2 = 0.0;
      result.assignment[i] = nearest_center(result.centers, k, points.row(i).transpose(), &d2);
      distortion += d2;
    }
    result.distortion = distortion;
    return result;
  }

  std::mt19937_64 rng(rng_seed);

  // K-means++ seeding: first center uniform, then proportional to squared
  // distance from the nearest chosen center.
  Eigen::VectorXd dist2 = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  int first = std::min(n - 1, static_cast<int>(canonical(rng) * n));
  result.centers.row(0) = points.row(first);
  for (int c = 1; c < k; ++c) {
    for (int i = 0; i < n; ++i) {
      const double d = (points.row(i) - result.centers.row(c - 1)).squaredNorm();
      dist2[i] = std::min(dist2[i], d);
    }
    const double total = dist2.sum();
    int pick = 0;
    if (total > 0.0) {
      const double target = canonical(rng) * total;
      double acc = 0.0;
      pick = n - 1;
      for (int i = 0; i < n; ++i) {
        acc += dist2[i];
        if (acc > target) {
          pick = i;
          break;
        }
      }
    }
    result.centers.row(c) = points.row(pick);
  }

  // Lloyd iterations.
  double prev_distortion = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 100; ++iter) {
    double distortion = 0.0;
    for (int i = 0; i < n; ++i) {
      double d2 = 0.0;
      result.assignment[i] = nearest_center(result.centers, k, points.row(i).transpose(), &d2);
      distortion += d2;
    }

    std::vector<int> counts(k, 0);
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, dim);
    for (int i = 0; i < n; ++i) {
      counts[result.assignment[i]]++;
      sums.row(result.assignment[i]) += points.row(i);
    }
    // Re-seed empty clusters at the point farthest from its center.
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      int far = -1;
      double far_d = -1.0;
      for (int i = 0; i < n; ++i) {
        if (counts[result.assignment[i]] <= 1) continue;
        const double d = (points.row(i) - result.centers.row(result.assignment[i])).squaredNorm();
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      if (far < 0) continue;
      counts[result.assignment[far]]--;
      sums.row(result.assignment[far]) -= points.row(far);
      result.assignment[far] = c;
      counts[c] = 1;
      sums.row(c) = points.row(far);
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) result.centers.row(c) = sums.row(c) / counts[c];
    }

    result.iterations = iter + 1;
    if (std::abs(prev_distortion - distortion) < 1e-8) {
      result.distortion = distortion;
      break;
    }
    prev_distortion = distortion;
    result.distortion = distortion;
  }

  // Final pass so assignments and distortion match the returned centers.
  double distortion = 0.0;
  for (int i = 0; i < n; ++i) {
    double d2 = 0.0;
    result.assignment[i] = nearest_center(result.centers, k, points.row(i).transpose(), &d2);
    distortion += d2;
  }
  result.distortion = distortion;
  return result;
}

}  // namespace hscs
