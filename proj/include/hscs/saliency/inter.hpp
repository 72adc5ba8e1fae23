#ifndef HSCS_SALIENCY_INTER_HPP
#define HSCS_SALIENCY_INTER_HPP

#include <vector>

#include "hscs/saliency/context.hpp"
#include "hscs/saliency/seeds.hpp"
#include "hscs/saliency/sparse.hpp"

namespace hscs {

// Columns are the final seeds' feature vectors in (image, superpixel)
// lexicographic order. Throws EmptySeedSet.
Dictionary build_global_dictionary(const SeedSet& final_seeds);

// One dictionary per image: features of its top-K intra-saliency
// superpixels (no ranking filter at this level). Throws KTooLarge.
std::vector<Dictionary> build_pairwise_dictionaries(const GroupContext& group,
                                                    int K);

// S_gr per image: exp(-||f - D_GF*alpha||^2 / sigma2) per superpixel.
std::vector<std::vector<double>> global_inter(const GroupContext& group,
                                              const Dictionary& global_dict,
                                              double xi, double sigma2,
                                              int jobs);

struct PairwiseInter {
  // fused[i][m] = mean over k != i of per_dictionary[i][k][m]
  std::vector<std::vector<double>> fused;
  // per_dictionary[i][k]: saliency of image i reconstructed from image k's
  // dictionary; the k == i slot stays empty. Kept for --dump-inter.
  std::vector<std::vector<std::vector<double>>> per_dictionary;
};

PairwiseInter pairwise_inter(const GroupContext& group,
                             const std::vector<Dictionary>& dicts, double xi,
                             double sigma2, int jobs);

// S_r = (S_gr + S_pr) / 2 elementwise. Throws LengthMismatch.
std::vector<double> fuse_hierarchical(const std::vector<double>& global_part,
                                      const std::vector<double>& pairwise_part);

}  // namespace hscs

#endif
