#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "momentcone/polytope.hpp"
#include "momentcone/sympair.hpp"

namespace momentcone {

enum class ScalarField { Real, Complex };

using Rng = std::mt19937_64;

// Haar-distributed orthogonal/unitary frame: QR of a Gaussian matrix with
// the diagonal phase correction.
Eigen::MatrixXd haar_orthogonal(int n, Rng& rng);
Eigen::MatrixXcd haar_unitary(int n, Rng& rng);

// Cyclic two-sided Jacobi diagonalization of a Hermitian (or real
// symmetric) matrix; eigenvalues descending. Returns the relative
// reconstruction residual.
double jacobi_eigen(const Eigen::MatrixXcd& a, Eigen::VectorXd& evals,
                    Eigen::MatrixXcd& evecs);
double jacobi_eigen(const Eigen::MatrixXd& a, Eigen::VectorXd& evals,
                    Eigen::MatrixXd& evecs);

// One-sided Jacobi SVD of a p x q matrix (p <= q): singular values
// descending; returns the relative reconstruction residual.
double jacobi_singular_values(const Eigen::MatrixXcd& a, Eigen::VectorXd& svals);
double jacobi_singular_values(const Eigen::MatrixXd& a, Eigen::VectorXd& svals);

struct SpectrumSample {
  Eigen::VectorXd values;  // descending
  enum class Kind { Singular, Eigen } kind;
  double residual = 0;
};

// Singular spectrum of A + B where A, B are p x q with prescribed singular
// spectra under independent Haar frames; `aligned` forces shared frames.
SpectrumSample sample_singular_sum(const Eigen::VectorXd& lambda,
                                   const Eigen::VectorXd& mu, int p, int q,
                                   ScalarField field, Rng& rng,
                                   bool aligned = false);

// Eigenvalue spectrum of A + B for symmetric/Hermitian A, B with prescribed
// spectra under independent Haar frames.
SpectrumSample sample_eigen_sum(const Eigen::VectorXd& lambda,
                                const Eigen::VectorXd& mu, ScalarField field,
                                Rng& rng, bool aligned = false);

struct ViolationRecord {
  long trial;
  int inequality;   // index into the polytope hrep
  double margin;    // normalized signed distance beyond the facet
  Eigen::VectorXd point;
};

struct OracleReport {
  long trials = 0;
  std::uint64_t seed = 0;
  double tol = 0;
  std::vector<ViolationRecord> violations;
  std::vector<double> vertex_min_dist;  // parallel to the polytope vrep
  double aligned_gap = -1;  // |aligned spectrum - (lambda+mu)|_inf, -1 if unset
  std::string to_json() const;
};

struct MonteCarloOptions {
  long trials = 10000;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  bool include_aligned = true;  // trial 0 uses shared frames, hitting lambda+mu
};

// Samples spectra with the sampler matching the pair (eigen for AI,
// singular for AIII real/complex as appropriate) and tests each point
// against the exact polytope at tolerance.
OracleReport monte_carlo_check(const SymmetricPair& pair, const RatVec& lambda,
                               const RatVec& mu, const Polytope& p,
                               const MonteCarloOptions& opts);

// Scales every facet inward about the vrep centroid; for falsifiability
// runs of the harness.
Polytope shrink_about_centroid(const Polytope& p, const Rational& factor);

}  // namespace momentcone
