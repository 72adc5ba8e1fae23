#include <Eigen/Dense>
#include <random>

#include "doctest.h"
#include "hscs/core/errors.hpp"
#include "hscs/saliency/sparse.hpp"
#include "support/reference_lasso.hpp"

using namespace hscs;
using testsupport::reference_lasso_pg;

namespace {

Dictionary make_dict(const Eigen::MatrixXd& atoms) {
  Dictionary d;
  d.atoms = atoms;
  return d;
}

Eigen::MatrixXd random_matrix(int rows, int cols, std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = uni(rng);
  return m;
}

}  // namespace

TEST_CASE("exact atom recovery at xi=0") {
  std::mt19937 rng(1);
  const Eigen::MatrixXd atoms = random_matrix(27, 6, rng);
  const Eigen::VectorXd f = atoms.col(3);
  const SparseCode code = lasso_solve(make_dict(atoms), f, 0.0);
  CHECK(code.error <= 1e-10);
}

TEST_CASE("orthonormal dictionaries match the soft-threshold closed form") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 10, m = 6;
    const Eigen::MatrixXd raw = random_matrix(dim, m, rng);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(raw);
    const Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(dim, m);
    const Eigen::VectorXd f = random_matrix(dim, 1, rng);
    const double xi = trial % 2 == 0 ? 0.01 : 0.1;

    const SparseCode code = lasso_solve(make_dict(q), f, xi);
    for (int j = 0; j < m; ++j) {
      const double rho = q.col(j).dot(f);
      double expected = 0.0;
      if (rho > xi / 2) expected = rho - xi / 2;
      if (rho < -xi / 2) expected = rho + xi / 2;
      CHECK(code.coefficients[j] == doctest::Approx(expected).epsilon(1e-8));
    }
  }
}

TEST_CASE("objective matches the projected-gradient reference on random problems") {
  std::mt19937 rng(3);
  const double xis[] = {0.0, 0.01, 0.1};
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::MatrixXd atoms = random_matrix(5, 8, rng);
    const Eigen::VectorXd f = random_matrix(5, 1, rng);
    const double xi = xis[trial % 3];

    const SparseCode code = lasso_solve(make_dict(atoms), f, xi);
    const Eigen::VectorXd ref = reference_lasso_pg(atoms, f, xi);
    const double ref_obj = lasso_objective(atoms, f, ref, xi);

    CHECK(code.objective <= ref_obj + 1e-5);
    CHECK(std::abs(code.objective - ref_obj) <= 1e-5);
    CHECK(kkt_residual(atoms, f, code.coefficients, xi) <= 1e-6);
  }
}

TEST_CASE("kkt residual is reported at termination") {
  std::mt19937 rng(4);
  const Eigen::MatrixXd atoms = random_matrix(27, 40, rng);
  const Eigen::VectorXd f = random_matrix(27, 1, rng);
  const SparseCode code = lasso_solve(make_dict(atoms), f, 0.01);
  CHECK(kkt_residual(atoms, f, code.coefficients, 0.01) <= 1e-6);
  CHECK(code.error >= 0.0);
  CHECK(code.objective ==
        doctest::Approx(code.error + 0.01 * code.coefficients.lpNorm<1>()));
}

TEST_CASE("dimension mismatch throws") {
  Eigen::MatrixXd atoms = Eigen::MatrixXd::Ones(27, 3);
  Eigen::VectorXd f = Eigen::VectorXd::Ones(5);
  try {
    lasso_solve(make_dict(atoms), f, 0.01);
    FAIL("expected DimensionMismatch");
  } catch (const PipelineError& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("zero columns are skipped and stay at zero") {
  std::mt19937 rng(5);
  Eigen::MatrixXd atoms = random_matrix(6, 4, rng);
  atoms.col(2).setZero();
  const Eigen::VectorXd f = random_matrix(6, 1, rng);
  const SparseCode code = lasso_solve(make_dict(atoms), f, 0.01);
  CHECK(code.coefficients[2] == 0.0);
  CHECK(kkt_residual(atoms, f, code.coefficients, 0.01) <= 1e-6);
}

TEST_CASE("error_to_saliency: identity at zero, 1/e at sigma2, monotone") {
  CHECK(error_to_saliency(0.0, 0.1) == doctest::Approx(1.0));
  CHECK(error_to_saliency(0.1, 0.1) == doctest::Approx(std::exp(-1.0)));
  CHECK(error_to_saliency(1000.0, 0.1) < 1e-9);

  std::mt19937 rng(6);
  std::uniform_real_distribution<double> uni(0.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double e1 = uni(rng), e2 = uni(rng);
    if (e1 == e2) continue;
    const double s1 = error_to_saliency(e1, 0.1);
    const double s2 = error_to_saliency(e2, 0.1);
    CHECK(((e1 < e2) == (s1 > s2)));
  }
}
