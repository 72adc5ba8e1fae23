#ifndef HSCS_CORE_KMEANS_HPP
#define HSCS_CORE_KMEANS_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace hscs {

struct KMeansResult {
  Eigen::MatrixXd centers;      // k x dim
  std::vector<int> assignment;  // per point, in [0,k)
  double distortion = 0.0;      // sum of squared distances to assigned center
  int iterations = 0;
  bool degenerate = false;      // fewer distinct points than k; centers padded
};

// K-means++ seeding followed by Lloyd iterations on the rows of `points`.
// Stops when the distortion improves by less than 1e-8 or after 100
// iterations. Deterministic for a fixed rng_seed; ties in assignment go to
// the lowest center index. Throws PipelineError(TooFewSeeds) if there are
// fewer points than clusters.
KMeansResult kmeans_pp(const Eigen::MatrixXd& points, int k,
                       std::uint64_t rng_seed);

}  // namespace hscs

#endif
