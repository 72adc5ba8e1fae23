#ifndef HSCS_SALIENCY_SPARSE_HPP
#define HSCS_SALIENCY_SPARSE_HPP

#include <Eigen/Core>

namespace hscs {

struct Dictionary {
  enum class Provenance { Global, Pairwise };

  Eigen::MatrixXd atoms;  // L x M, columns are seed feature vectors
  Provenance provenance = Provenance::Global;
  int source_image = -1;  // pairwise only

  int dim() const { return static_cast<int>(atoms.rows()); }
  int size() const { return static_cast<int>(atoms.cols()); }
};

struct SparseCode {
  Eigen::VectorXd coefficients;
  double error = 0.0;      // ||f - D*alpha||^2
  double objective = 0.0;  // error + xi * ||alpha||_1
  int sweeps = 0;
};

// Minimizes ||f - D*alpha||^2 + xi*||alpha||_1 by cyclic coordinate
// descent. Stops when the largest coordinate change in a sweep drops below
// 1e-8 and the KKT residual is within 1e-6, or after 10000 sweeps. Throws
// PipelineError(DimensionMismatch) when f's length differs from the atom
// dimension.
SparseCode lasso_solve(const Dictionary& dict, const Eigen::VectorXd& f,
                       double xi);

// Max subgradient-optimality violation of alpha for the objective above:
// |2 d_j'(D*alpha - f)| - xi for zero coefficients, distance from
// -xi*sign(alpha_j) otherwise.
double kkt_residual(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& f,
                    const Eigen::VectorXd& alpha, double xi);

double lasso_objective(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& f,
                       const Eigen::VectorXd& alpha, double xi);

// exp(-error / sigma2): small reconstruction error, high saliency.
double error_to_saliency(double error, double sigma2);

}  // namespace hscs

#endif
