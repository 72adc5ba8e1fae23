#include "hscs/saliency/refine.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <numeric>

#include "hscs/core/errors.hpp"
#include "hscs/core/math.hpp"

namespace hscs {

std::vector<double> initial_saliency(const std::vector<double>& intra,
                                     const std::vector<double>& inter) {
  if (intra.size() != inter.size())
    throw PipelineError(ErrorCode::LengthMismatch,
                        std::to_string(intra.size()) + " vs " +
                            std::to_string(inter.size()));
  std::vector<double> out(intra.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = intra[m] * inter[m];
  normalize_min_max(out);
  return out;
}

LabHistogram global_foreground_model(
    const GroupContext& group,
    const std::vector<std::vector<double>>& initial, int top_fg) {
  LabHistogram model = LabHistogram::Zero(kLabHistBins);
  int samples = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const std::vector<double>& s = initial[i];
    const int n = static_cast<int>(s.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return s[a] != s[b] ? s[a] > s[b] : a < b;
    });
    const int take = std::min(top_fg, n);
    for (int r = 0; r < take; ++r) {
      model += group[i].histograms[order[r]];
      ++samples;
    }
  }
  if (samples > 0) model /= samples;
  return model;
}

double consistency_penalty(const LabHistogram& h_m, const LabHistogram& h_g) {
  return chi_square(h_m, h_g);
}

int RefinementProblem::block_offset(int image) const {
  int offset = 0;
  for (int i = 0; i < image; ++i) offset += block_sizes[i];
  return offset;
}

Eigen::SparseMatrix<double> RefinementProblem::joint_w() const {
  std::vector<Eigen::Triplet<double>> triplets;
  int offset = 0;
  for (std::size_t i = 0; i < blocks_w.size(); ++i) {
    const auto& w = blocks_w[i];
    for (int col = 0; col < w.outerSize(); ++col)
      for (Eigen::SparseMatrix<double>::InnerIterator it(w, col); it; ++it)
        triplets.emplace_back(offset + static_cast<int>(it.row()),
                              offset + static_cast<int>(it.col()), it.value());
    offset += block_sizes[i];
  }
  Eigen::SparseMatrix<double> joint(total(), total());
  joint.setFromTriplets(triplets.begin(), triplets.end());
  return joint;
}

RefinementProblem build_system(const GroupContext& group,
                               const std::vector<std::vector<double>>& initial,
                               const LabHistogram& foreground_model,
                               double sigma2) {
  RefinementProblem problem;
  Eigen::Index total = 0;
  for (const auto& s : initial) total += static_cast<Eigen::Index>(s.size());
  problem.s.resize(total);
  problem.g.resize(total);

  Eigen::Index offset = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const ImageContext& ctx = group[i];
    const int n = ctx.seg.n_regions();
    problem.block_sizes.push_back(n);

    for (int m = 0; m < n; ++m) {
      problem.s[offset + m] = initial[i][m];
      problem.g[offset + m] =
          consistency_penalty(ctx.histograms[m], foreground_model);
    }

    // Within one image both endpoints share a depth map, so lambda_min is
    // the image's own depth confidence.
    std::vector<Eigen::Triplet<double>> triplets;
    for (const auto& [m, nn] : ctx.adjacency.pairs()) {
      const double w = affinity(
          chi_square(ctx.histograms[m], ctx.histograms[nn]),
          ctx.seg.regions[m].mean_depth, ctx.seg.regions[nn].mean_depth,
          ctx.depth.lambda, sigma2);
      triplets.emplace_back(m, nn, w);
      triplets.emplace_back(nn, m, w);
    }
    Eigen::SparseMatrix<double> w_block(n, n);
    w_block.setFromTriplets(triplets.begin(), triplets.end());
    problem.blocks_w.push_back(std::move(w_block));
    offset += n;
  }
  return problem;
}

Eigen::VectorXd solve_refinement(const RefinementProblem& problem) {
  Eigen::VectorXd solution(problem.total());
  Eigen::Index offset = 0;
  for (std::size_t i = 0; i < problem.blocks_w.size(); ++i) {
    const int n = problem.block_sizes[i];
    const auto& w = problem.blocks_w[i];

    Eigen::VectorXd degree = Eigen::VectorXd::Zero(n);
    for (int col = 0; col < w.outerSize(); ++col)
      for (Eigen::SparseMatrix<double>::InnerIterator it(w, col); it; ++it)
        degree[it.row()] += it.value();

    Eigen::SparseMatrix<double> system = -w;
    std::vector<Eigen::Triplet<double>> diag;
    diag.reserve(n);
    for (int m = 0; m < n; ++m)
      diag.emplace_back(m, m,
                        1.0 + degree[m] + problem.g[offset + m]);
    Eigen::SparseMatrix<double> diag_mat(n, n);
    diag_mat.setFromTriplets(diag.begin(), diag.end());
    system += diag_mat;

    const Eigen::VectorXd rhs = problem.s.segment(offset, n);
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(system);
    Eigen::VectorXd x;
    if (llt.info() == Eigen::Success) {
      x = llt.solve(rhs);
    } else {
      Eigen::ConjugateGradient<Eigen::SparseMatrix<double>,
                               Eigen::Lower | Eigen::Upper>
          cg(system);
      cg.setTolerance(1e-14);
      x = cg.solve(rhs);
      if (cg.info() != Eigen::Success)
        throw PipelineError(ErrorCode::SolverFailure,
                            "refinement block " + std::to_string(i));
    }

    const double rhs_norm = rhs.norm();
    const double residual = (system * x - rhs).norm();
    if (rhs_norm > 0.0 && residual / rhs_norm > 1e-10)
      throw PipelineError(ErrorCode::SolverFailure,
                          "refinement residual " + std::to_string(residual));
    solution.segment(offset, n) = x;
    offset += n;
  }
  return solution;
}

EnergyTerms energy_terms(const RefinementProblem& problem,
                         const Eigen::VectorXd& sbar) {
  EnergyTerms terms;
  terms.unary = (sbar - problem.s).squaredNorm();
  Eigen::Index offset = 0;
  for (std::size_t i = 0; i < problem.blocks_w.size(); ++i) {
    const auto& w = problem.blocks_w[i];
    for (int col = 0; col < w.outerSize(); ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(w, col); it; ++it) {
        if (it.row() >= it.col()) continue;  // each pair once
        const double diff = sbar[offset + it.row()] - sbar[offset + it.col()];
        terms.smooth += it.value() * diff * diff;
      }
    }
    offset += problem.block_sizes[i];
  }
  for (Eigen::Index m = 0; m < problem.total(); ++m)
    terms.holistic += problem.g[m] * sbar[m] * sbar[m];
  return terms;
}

Eigen::VectorXd energy_gradient(const RefinementProblem& problem,
                                const Eigen::VectorXd& sbar) {
  Eigen::VectorXd grad = 2.0 * (sbar - problem.s);
  Eigen::Index offset = 0;
  for (std::size_t i = 0; i < problem.blocks_w.size(); ++i) {
    const int n = problem.block_sizes[i];
    const auto& w = problem.blocks_w[i];
    Eigen::VectorXd degree = Eigen::VectorXd::Zero(n);
    for (int col = 0; col < w.outerSize(); ++col)
      for (Eigen::SparseMatrix<double>::InnerIterator it(w, col); it; ++it)
        degree[it.row()] += it.value();
    const Eigen::VectorXd block = sbar.segment(offset, n);
    grad.segment(offset, n) +=
        2.0 * (degree.asDiagonal() * block - w * block);
    offset += n;
  }
  for (Eigen::Index m = 0; m < problem.total(); ++m)
    grad[m] += 2.0 * problem.g[m] * sbar[m];
  return grad;
}

GrayRaster superpixel_to_pixel(const std::vector<double>& values,
                               const SuperpixelSegmentation& seg) {
  GrayRaster out(seg.labels.width(), seg.labels.height());
  for (int y = 0; y < out.height(); ++y)
    for (int x = 0; x < out.width(); ++x)
      out.at(x, y) = static_cast<float>(values[seg.labels.at(x, y)]);
  return out;
}

}  // namespace hscs
