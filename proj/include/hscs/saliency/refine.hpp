#ifndef HSCS_SALIENCY_REFINE_HPP
#define HSCS_SALIENCY_REFINE_HPP

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <vector>

#include "hscs/saliency/context.hpp"

namespace hscs {

// s_m = S_a(r_m) * S_r(r_m), min-max normalized (per image; callers pass one
// image's vectors at a time). Throws LengthMismatch.
std::vector<double> initial_saliency(const std::vector<double>& intra,
                                     const std::vector<double>& inter);

// Mean Lab histogram of the top `top_fg` superpixels per image ranked by
// initial saliency (ties to the smaller index).
LabHistogram global_foreground_model(
    const GroupContext& group,
    const std::vector<std::vector<double>>& initial, int top_fg);

// g_m: chi-square distance between a superpixel's histogram and the global
// foreground model.
double consistency_penalty(const LabHistogram& h_m, const LabHistogram& h_g);

// Quadratic energy  E = ||sbar - s||^2 + sbar'(D - W)sbar + sbar'G sbar
// with W supported on within-image adjacent pairs only (block-diagonal).
struct RefinementProblem {
  std::vector<int> block_sizes;                       // superpixels per image
  Eigen::VectorXd s;                                  // stacked initial saliency
  std::vector<Eigen::SparseMatrix<double>> blocks_w;  // W per image
  Eigen::VectorXd g;                                  // diagonal of G

  Eigen::Index total() const { return s.size(); }
  int block_offset(int image) const;
  Eigen::SparseMatrix<double> joint_w() const;        // assembled aleph x aleph
};

RefinementProblem build_system(const GroupContext& group,
                               const std::vector<std::vector<double>>& initial,
                               const LabHistogram& foreground_model,
                               double sigma2);

// Solves (I + (D - W) + G) sbar = s one image block at a time (sparse
// Cholesky) and returns the raw stacked solution. The relative residual is
// verified to 1e-10; SolverFailure otherwise.
Eigen::VectorXd solve_refinement(const RefinementProblem& problem);

struct EnergyTerms {
  double unary = 0.0;
  double smooth = 0.0;
  double holistic = 0.0;

  double total() const { return unary + smooth + holistic; }
};

// Direct evaluation of the energy (each adjacent pair counted once, which
// matches the matrix form).
EnergyTerms energy_terms(const RefinementProblem& problem,
                         const Eigen::VectorXd& sbar);

// 2(sbar - s) + 2(D - W)sbar + 2G sbar; zero at the minimizer.
Eigen::VectorXd energy_gradient(const RefinementProblem& problem,
                                const Eigen::VectorXd& sbar);

// Pixel raster where every pixel takes its superpixel's value.
GrayRaster superpixel_to_pixel(const std::vector<double>& values,
                               const SuperpixelSegmentation& seg);

}  // namespace hscs

#endif
