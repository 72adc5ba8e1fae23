#include "hscs/saliency/sparse.hpp"

#include <cassert>
#include <cmath>

#include "hscs/core/errors.hpp"

namespace hscs {

namespace {

inline double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

}  // namespace

double lasso_objective(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& f,
                       const Eigen::VectorXd& alpha, double xi) {
  return (f - atoms * alpha).squaredNorm() + xi * alpha.lpNorm<1>();
}

double kkt_residual(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& f,
                    const Eigen::VectorXd& alpha, double xi) {
  const Eigen::VectorXd grad = 2.0 * atoms.transpose() * (atoms * alpha - f);
  double worst = 0.0;
  for (Eigen::Index j = 0; j < alpha.size(); ++j) {
    if (atoms.col(j).squaredNorm() == 0.0) continue;
    double violation;
    if (alpha[j] == 0.0) {
      violation = std::max(0.0, std::abs(grad[j]) - xi);
    } else {
      violation = std::abs(grad[j] + xi * (alpha[j] > 0.0 ? 1.0 : -1.0));
    }
    worst = std::max(worst, violation);
  }
  return worst;
}

SparseCode lasso_solve(const Dictionary& dict, const Eigen::VectorXd& f,
                       double xi) {
  const Eigen::MatrixXd& D = dict.atoms;
  const int m = dict.size();
  if (f.size() != D.rows())
    throw PipelineError(ErrorCode::DimensionMismatch,
                        "feature dim " + std::to_string(f.size()) +
                            " vs dictionary dim " + std::to_string(D.rows()));

  constexpr int kMaxSweeps = 10000;
  constexpr double kChangeTol = 1e-8;
  constexpr double kKktTol = 1e-6;

  Eigen::VectorXd col_norm2(m);
  for (int j = 0; j < m; ++j) col_norm2[j] = D.col(j).squaredNorm();

  SparseCode code;
  code.coefficients = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd& alpha = code.coefficients;
  Eigen::VectorXd residual = f;  // f - D*alpha

#ifndef NDEBUG
  double prev_objective = lasso_objective(D, f, alpha, xi);
#endif

  int sweep = 0;
  while (sweep < kMaxSweeps) {
    ++sweep;
    double max_change = 0.0;
    for (int j = 0; j < m; ++j) {
      if (col_norm2[j] == 0.0) continue;
      const double rho = D.col(j).dot(residual) + col_norm2[j] * alpha[j];
      const double next = soft_threshold(rho, xi * 0.5) / col_norm2[j];
      const double delta = next - alpha[j];
      if (delta != 0.0) {
        residual -= D.col(j) * delta;
        alpha[j] = next;
        max_change = std::max(max_change, std::abs(delta));
      }
    }
#ifndef NDEBUG
    const double objective = lasso_objective(D, f, alpha, xi);
    assert(objective <= prev_objective + 1e-12);
    prev_objective = objective;
#endif
    if (max_change == 0.0) break;  // exact fixpoint; nothing left to move
    if (max_change < kChangeTol && kkt_residual(D, f, alpha, xi) <= kKktTol)
      break;
  }

  code.sweeps = sweep;
  residual = f - D * alpha;  // refresh: incremental updates drift slightly
  code.error = residual.squaredNorm();
  code.objective = code.error + xi * alpha.lpNorm<1>();
  return code;
}

double error_to_saliency(double error, double sigma2) {
  return std::exp(-error / sigma2);
}

}  // namespace hscs
