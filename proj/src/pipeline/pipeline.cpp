#include "hscs/pipeline/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "hscs/core/errors.hpp"
#include "hscs/core/log.hpp"
#include "hscs/core/math.hpp"
#include "hscs/core/parallel.hpp"
#include "hscs/feature/texton.hpp"
#include "hscs/io/dataset.hpp"
#include "hscs/saliency/inter.hpp"
#include "hscs/saliency/intra.hpp"
#include "hscs/saliency/refine.hpp"
#include "hscs/saliency/seeds.hpp"

namespace hscs {

namespace fs = std::filesystem;

namespace {

class StageTimer {
 public:
  explicit StageTimer(const std::string& group) : group_(group) {}

  template <typename Fn>
  auto run(const char* stage, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      log_elapsed(stage, start);
    } else {
      auto result = fn();
      log_elapsed(stage, start);
      return result;
    }
  }

 private:
  void log_elapsed(const char* stage,
                   std::chrono::steady_clock::time_point start) const {
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    HSCS_INFO("%s: %s %.1f ms", group_.c_str(), stage, ms);
  }

  std::string group_;
};

RgbRaster tint_regions(RgbRaster base, const SuperpixelSegmentation& seg,
                       const std::vector<int>& regions, Rgb8 color) {
  std::vector<char> marked(seg.n_regions(), 0);
  for (int m : regions) marked[m] = 1;
  for (int y = 0; y < base.height(); ++y) {
    for (int x = 0; x < base.width(); ++x) {
      if (!marked[seg.labels.at(x, y)]) continue;
      Rgb8& px = base.at(x, y);
      px.r = static_cast<std::uint8_t>((px.r + 2 * color.r) / 3);
      px.g = static_cast<std::uint8_t>((px.g + 2 * color.g) / 3);
      px.b = static_cast<std::uint8_t>((px.b + 2 * color.b) / 3);
    }
  }
  return base;
}

void dump_feature_csv(const fs::path& path, const ImageContext& ctx) {
  std::ofstream out(path);
  if (!out) throw PipelineError(ErrorCode::IoError, "cannot write " + path.string());
  out << "superpixel";
  for (int d = 0; d < kFeatureDim; ++d) out << ",f" << d;
  out << "\n";
  for (std::size_t m = 0; m < ctx.features.size(); ++m) {
    out << m;
    for (int d = 0; d < kFeatureDim; ++d) out << ',' << ctx.features[m][d];
    out << "\n";
  }
}

}  // namespace

GroupResult process_group(const fs::path& group_dir, const fs::path& out_dir,
                          const PipelineConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();

  GroupResult result;
  result.name = group_dir.filename().string();
  StageTimer timer(result.name);

  const ImageGroup group =
      timer.run("load", [&] { return load_group(group_dir, cfg); });
  const int n_images = group.size();
  result.n_images = n_images;

  GroupContext ctx(n_images);
  timer.run("segment", [&] {
    parallel_for(n_images, cfg.jobs, [&](std::size_t i) {
      ctx[i].seg = slic_segment(group.images[i], cfg.n_superpixels);
      ctx[i].adjacency = build_adjacency(ctx[i].seg);
    });
  });

  const TextonModel textons = timer.run(
      "texton", [&] { return compute_texton_map(group, cfg.rng_seed); });

  timer.run("features", [&] {
    parallel_for(n_images, cfg.jobs, [&](std::size_t i) {
      ctx[i].features = compute_features(ctx[i].seg, textons.labels[i]);
      ctx[i].histograms = lab_histograms(ctx[i].seg, group.images[i].rgb);
      ctx[i].depth = depth_confidence(group.images[i].depth);
    });
  });

  timer.run("intra", [&] {
    if (group.has_intra()) {
      auto maps = ingest_intra(group, ctx);
      for (int i = 0; i < n_images; ++i) ctx[i].intra = std::move(maps[i]);
    } else {
      if (cfg.require_intra)
        throw PipelineError(ErrorCode::MissingIntra,
                            group.name + " (required via --require-intra)");
      parallel_for(n_images, cfg.jobs, [&](std::size_t i) {
        ctx[i].intra = fallback_intra(ctx[i].seg, ctx[i].depth);
      });
    }
  });

  SeedSet initial_seeds = timer.run("seeds", [&] {
    SeedSet seeds = select_initial_seeds(ctx, cfg.k_seeds);
    cluster_seeds(seeds, cfg.clusters, sub_seed(cfg.rng_seed, 2));
    compute_consistency(seeds, cfg.sigma2);
    return seeds;
  });
  const SeedSet final_seeds = filter_seeds(initial_seeds, cfg.keep_ratio);

  const auto global_maps = timer.run("global", [&] {
    const Dictionary global_dict = build_global_dictionary(final_seeds);
    return global_inter(ctx, global_dict, cfg.xi, cfg.sigma2_recon, cfg.jobs);
  });

  const PairwiseInter pairwise = timer.run("pairwise", [&] {
    const auto dicts = build_pairwise_dictionaries(ctx, cfg.k_seeds);
    return pairwise_inter(ctx, dicts, cfg.xi, cfg.sigma2_recon, cfg.jobs);
  });

  std::vector<std::vector<double>> inter(n_images);
  std::vector<std::vector<double>> initial(n_images);
  for (int i = 0; i < n_images; ++i) {
    inter[i] = fuse_hierarchical(global_maps[i], pairwise.fused[i]);
    initial[i] = initial_saliency(ctx[i].intra, inter[i]);
  }

  std::vector<std::vector<double>> refined(n_images);
  timer.run("refine", [&] {
    const LabHistogram fg_model =
        global_foreground_model(ctx, initial, cfg.top_fg);
    const RefinementProblem problem =
        build_system(ctx, initial, fg_model, cfg.sigma2);
    if (cfg.dump_energy) {
      const EnergyTerms before = energy_terms(problem, problem.s);
      HSCS_INFO("%s: energy before Tu=%.6f Ts=%.6f Th=%.6f", result.name.c_str(),
                before.unary, before.smooth, before.holistic);
    }
    const Eigen::VectorXd solution = solve_refinement(problem);
    if (cfg.dump_energy) {
      const EnergyTerms after = energy_terms(problem, solution);
      HSCS_INFO("%s: energy after Tu=%.6f Ts=%.6f Th=%.6f", result.name.c_str(),
                after.unary, after.smooth, after.holistic);
    }
    Eigen::Index offset = 0;
    for (int i = 0; i < n_images; ++i) {
      const int n = problem.block_sizes[i];
      refined[i].assign(solution.data() + offset, solution.data() + offset + n);
      normalize_min_max(refined[i]);
      offset += n;
    }
  });

  std::vector<GrayRaster> pixel_maps(n_images);
  timer.run("write", [&] {
    fs::create_directories(out_dir);
    for (int i = 0; i < n_images; ++i) {
      pixel_maps[i] = superpixel_to_pixel(refined[i], ctx[i].seg);
      write_saliency_map(pixel_maps[i],
                         out_dir / (group.images[i].id + ".png"));
    }

    if (cfg.dump_superpixels)
      for (int i = 0; i < n_images; ++i)
        write_label_raster(ctx[i].seg.labels,
                           out_dir / (group.images[i].id + "_superpixels.png"));
    if (cfg.dump_seeds) {
      for (int i = 0; i < n_images; ++i) {
        std::vector<int> init_regions, final_regions;
        for (const Seed& s : initial_seeds.seeds)
          if (s.image == i) init_regions.push_back(s.superpixel);
        for (const Seed& s : final_seeds.seeds)
          if (s.image == i) final_regions.push_back(s.superpixel);
        RgbRaster overlay = tint_regions(group.images[i].rgb, ctx[i].seg,
                                         init_regions, Rgb8{255, 0, 0});
        overlay =
            tint_regions(overlay, ctx[i].seg, final_regions, Rgb8{255, 255, 0});
        write_rgb_image(overlay, out_dir / (group.images[i].id + "_seeds.png"));
      }
    }
    if (cfg.dump_inter) {
      for (int i = 0; i < n_images; ++i) {
        const std::string& id = group.images[i].id;
        write_saliency_map(superpixel_to_pixel(global_maps[i], ctx[i].seg),
                           out_dir / (id + "_inter_global.png"));
        write_saliency_map(superpixel_to_pixel(pairwise.fused[i], ctx[i].seg),
                           out_dir / (id + "_inter_pairwise.png"));
        write_saliency_map(superpixel_to_pixel(inter[i], ctx[i].seg),
                           out_dir / (id + "_inter_fused.png"));
      }
    }
    if (cfg.dump_features)
      for (int i = 0; i < n_images; ++i)
        dump_feature_csv(out_dir / (group.images[i].id + "_features.csv"),
                         ctx[i]);
  });

  if (group.has_ground_truth()) {
    timer.run("metrics", [&] {
      MetricReport report;
      for (int i = 0; i < n_images; ++i) {
        report.ids.push_back(group.images[i].id);
        report.f_beta.push_back(
            f_measure(pixel_maps[i], group.ground_truth[i], cfg.beta2));
        report.f_max.push_back(
            max_f_measure(pixel_maps[i], group.ground_truth[i], cfg.beta2));
        report.mae_values.push_back(mae(pixel_maps[i], group.ground_truth[i]));
      }
      report.pr = pr_curve(pixel_maps, group.ground_truth);
      emit_report(report, out_dir / "report.csv");
      result.metrics = std::move(report);
    });
  }

  result.ok = true;
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  HSCS_INFO("%s: %d images in %.2f s (%.2f s/image)", result.name.c_str(),
            n_images, result.seconds, result.seconds / n_images);
  return result;
}

std::vector<fs::path> discover_groups(const fs::path& input) {
  std::vector<fs::path> groups;
  if (fs::is_directory(input / "rgb")) {
    groups.push_back(input);
    return groups;
  }
  if (!fs::is_directory(input)) return groups;
  for (const auto& entry : fs::directory_iterator(input)) {
    if (!entry.is_directory()) continue;
    if (fs::is_directory(entry.path() / "rgb")) groups.push_back(entry.path());
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

int run_pipeline(const fs::path& input, const fs::path& output,
                 const PipelineConfig& cfg) {
  const std::vector<fs::path> groups = discover_groups(input);
  if (groups.empty()) {
    HSCS_ERROR("no groups found under %s (expected rgb/ subfolders)",
               input.string().c_str());
    return 1;
  }
  const bool single = groups.size() == 1 && groups.front() == input;

  int failures = 0;
  for (const fs::path& dir : groups) {
    const fs::path out_dir = single ? output : output / dir.filename();
    try {
      const GroupResult result = process_group(dir, out_dir, cfg);
      if (result.metrics)
        HSCS_INFO("%s: F_beta=%.4f MAE=%.4f", result.name.c_str(),
                  result.metrics->mean_f_beta(), result.metrics->mean_mae());
    } catch (const std::exception& e) {
      HSCS_ERROR("group %s failed: %s", dir.filename().string().c_str(),
                 e.what());
      ++failures;
    }
  }
  if (failures > 0)
    HSCS_ERROR("%d of %zu group(s) failed", failures, groups.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace hscs
