#include "hscs/saliency/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hscs/core/errors.hpp"
#include "hscs/core/kmeans.hpp"
#include "hscs/core/math.hpp"

namespace hscs {

SeedSet select_initial_seeds(const GroupContext& group, int K) {
  SeedSet set;
  set.stage = SeedSet::Stage::Initial;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const ImageContext& ctx = group[i];
    const int n = ctx.seg.n_regions();
    if (K > n)
      throw PipelineError(ErrorCode::KTooLarge,
                          "K=" + std::to_string(K) + " > " + std::to_string(n) +
                              " superpixels in image " + std::to_string(i));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return ctx.intra[a] != ctx.intra[b] ? ctx.intra[a] > ctx.intra[b]
                                          : a < b;
    });
    order.resize(K);
    std::sort(order.begin(), order.end());  // store by superpixel index
    for (int m : order) {
      Seed seed;
      seed.image = static_cast<int>(i);
      seed.superpixel = m;
      seed.feature = ctx.features[m];
      seed.histogram = ctx.histograms[m];
      seed.depth = ctx.seg.regions[m].mean_depth;
      seed.lambda = ctx.depth.lambda;
      seed.intra = ctx.intra[m];
      set.seeds.push_back(std::move(seed));
    }
  }
  return set;
}

void cluster_seeds(SeedSet& seeds, int k, std::uint64_t rng_seed) {
  const int n = seeds.size();
  const double scale = 1.0 / std::sqrt(static_cast<double>(kFeatureDim));
  Eigen::MatrixXd points(n, kFeatureDim);
  for (int i = 0; i < n; ++i)
    points.row(i) = seeds.seeds[i].feature.transpose() * scale;

  KMeansResult km = kmeans_pp(points, k, rng_seed);
  seeds.centers = km.centers;
  for (int i = 0; i < n; ++i) seeds.seeds[i].cluster = km.assignment[i];
}

void compute_consistency(SeedSet& seeds, double sigma2) {
  const int n = seeds.size();
  const int k = static_cast<int>(seeds.centers.rows());

  // Center distances are bounded by 1 thanks to the 1/sqrt(27) scaling.
  Eigen::MatrixXd center_dist = Eigen::MatrixXd::Zero(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      center_dist(a, b) = (seeds.centers.row(a) - seeds.centers.row(b)).norm();

  for (int m = 0; m < n; ++m) {
    Seed& sm = seeds.seeds[m];
    double acc = 0.0;
    for (int nn = 0; nn < n; ++nn) {
      if (nn == m) continue;
      const Seed& sn = seeds.seeds[nn];
      const double lambda_min = std::min(sm.lambda, sn.lambda);
      const double w = affinity(chi_square(sm.histogram, sn.histogram),
                                sm.depth, sn.depth, lambda_min, sigma2);
      acc += (1.0 - center_dist(sm.cluster, sn.cluster)) * w;
    }
    sm.mc = acc * sm.intra;
  }
}

SeedSet filter_seeds(const SeedSet& initial, double keep_ratio) {
  const std::size_t keep = ceil_fraction(keep_ratio, initial.seeds.size());
  std::vector<int> order(initial.seeds.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Seed& sa = initial.seeds[a];
    const Seed& sb = initial.seeds[b];
    if (sa.mc != sb.mc) return sa.mc > sb.mc;
    if (sa.image != sb.image) return sa.image < sb.image;
    return sa.superpixel < sb.superpixel;
  });
  order.resize(std::min(keep, order.size()));
  std::sort(order.begin(), order.end());  // back to (image, superpixel) order

  SeedSet final_set;
  final_set.stage = SeedSet::Stage::Final;
  final_set.centers = initial.centers;
  for (int idx : order) final_set.seeds.push_back(initial.seeds[idx]);
  return final_set;
}

}  // namespace hscs
