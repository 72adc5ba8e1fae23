#include "hscs/saliency/inter.hpp"

#include <algorithm>
#include <numeric>

#include "hscs/core/errors.hpp"
#include "hscs/core/parallel.hpp"

namespace hscs {

namespace {

// Reconstruction saliency for every superpixel of one image.
std::vector<double> reconstruct_image(const ImageContext& ctx,
                                      const Dictionary& dict, double xi,
                                      double sigma2, int jobs) {
  std::vector<double> out(ctx.features.size(), 0.0);
  parallel_for(ctx.features.size(), jobs, [&](std::size_t m) {
    const SparseCode code = lasso_solve(dict, ctx.features[m], xi);
    out[m] = error_to_saliency(code.error, sigma2);
  });
  return out;
}

}  // namespace

Dictionary build_global_dictionary(const SeedSet& final_seeds) {
  if (final_seeds.seeds.empty())
    throw PipelineError(ErrorCode::EmptySeedSet, "global dictionary");
  Dictionary dict;
  dict.provenance = Dictionary::Provenance::Global;
  dict.atoms.resize(kFeatureDim, final_seeds.size());
  for (int j = 0; j < final_seeds.size(); ++j)
    dict.atoms.col(j) = final_seeds.seeds[j].feature;
  return dict;
}

std::vector<Dictionary> build_pairwise_dictionaries(const GroupContext& group,
                                                    int K) {
  std::vector<Dictionary> dicts;
  dicts.reserve(group.size());
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
    std::sort(order.begin(), order.end());

    Dictionary dict;
    dict.provenance = Dictionary::Provenance::Pairwise;
    dict.source_image = static_cast<int>(i);
    dict.atoms.resize(kFeatureDim, K);
    for (int j = 0; j < K; ++j) dict.atoms.col(j) = ctx.features[order[j]];
    dicts.push_back(std::move(dict));
  }
  return dicts;
}

std::vector<std::vector<double>> global_inter(const GroupContext& group,
                                              const Dictionary& global_dict,
                                              double xi, double sigma2,
                                              int jobs) {
  std::vector<std::vector<double>> out;
  out.reserve(group.size());
  for (const ImageContext& ctx : group)
    out.push_back(reconstruct_image(ctx, global_dict, xi, sigma2, jobs));
  return out;
}

PairwiseInter pairwise_inter(const GroupContext& group,
                             const std::vector<Dictionary>& dicts, double xi,
                             double sigma2, int jobs) {
  const int n_images = static_cast<int>(group.size());
  if (n_images < 2)
    throw PipelineError(ErrorCode::SingleImageGroup,
                        "pairwise reconstruction needs N >= 2");

  PairwiseInter result;
  result.fused.resize(n_images);
  result.per_dictionary.resize(n_images);
  for (int i = 0; i < n_images; ++i) {
    const ImageContext& ctx = group[i];
    result.per_dictionary[i].resize(n_images);
    std::vector<double> fused(ctx.features.size(), 0.0);
    for (int k = 0; k < n_images; ++k) {
      if (k == i) continue;
      std::vector<double> map =
          reconstruct_image(ctx, dicts[k], xi, sigma2, jobs);
      for (std::size_t m = 0; m < map.size(); ++m) fused[m] += map[m];
      result.per_dictionary[i][k] = std::move(map);
    }
    for (double& v : fused) v /= (n_images - 1);
    result.fused[i] = std::move(fused);
  }
  return result;
}

std::vector<double> fuse_hierarchical(const std::vector<double>& global_part,
                                      const std::vector<double>& pairwise_part) {
  if (global_part.size() != pairwise_part.size())
    throw PipelineError(ErrorCode::LengthMismatch,
                        std::to_string(global_part.size()) + " vs " +
                            std::to_string(pairwise_part.size()));
  std::vector<double> out(global_part.size());
  for (std::size_t m = 0; m < out.size(); ++m)
    out[m] = 0.5 * (global_part[m] + pairwise_part[m]);
  return out;
}

}  // namespace hscs
