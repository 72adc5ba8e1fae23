#ifndef HSCS_SALIENCY_SEEDS_HPP
#define HSCS_SALIENCY_SEEDS_HPP

#include <cstdint>
#include <vector>

#include "hscs/saliency/context.hpp"

namespace hscs {

struct Seed {
  int image = 0;
  int superpixel = 0;
  FeatureVector feature = FeatureVector::Zero();
  LabHistogram histogram;
  double depth = 0.0;
  double lambda = 0.0;  // depth confidence of the seed's image
  double intra = 0.0;   // S_a
  int cluster = -1;
  double mc = 0.0;
};

struct SeedSet {
  enum class Stage { Initial, Final };
  Stage stage = Stage::Initial;
  std::vector<Seed> seeds;           // (image, superpixel) lexicographic
  Eigen::MatrixXd centers;           // clusters x 27, in 1/sqrt(27) scale

  int size() const { return static_cast<int>(seeds.size()); }
};

// Top-K superpixels per image by intra saliency (ties to the smaller
// superpixel index). Throws KTooLarge when K exceeds any image's region
// count.
SeedSet select_initial_seeds(const GroupContext& group, int K);

// K-means++ over the seeds' feature vectors, pre-scaled by 1/sqrt(27) so
// center distances stay within [0,1]. Sets each seed's cluster.
void cluster_seeds(SeedSet& seeds, int k, std::uint64_t rng_seed);

// mc(r_m) = [sum_{n != m} (1 - ||c_m - c_n||) * w_mn] * S_a(r_m), with
// lambda_min = min of the two seeds' image depth confidences.
void compute_consistency(SeedSet& seeds, double sigma2);

// Keeps the ceil(keep_ratio * |initial|) seeds with largest mc, ties broken
// by (image, superpixel).
SeedSet filter_seeds(const SeedSet& initial, double keep_ratio);

}  // namespace hscs

#endif
