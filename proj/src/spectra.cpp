#include "momentcone/spectra.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

namespace momentcone {

namespace {

template <typename Scalar>
Scalar conj_if(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, double>) return x;
  else return std::conj(x);
}

template <typename Matrix>
Matrix gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if constexpr (std::is_same_v<typename Matrix::Scalar, double>) {
        g(i, j) = normal(rng);
      } else {
        double re = normal(rng), im = normal(rng);
        g(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
      }
    }
  return g;
}

template <typename Matrix>
Matrix haar_frame_impl(int n, Rng& rng) {
  Matrix g = gaussian<Matrix>(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    auto d = r(j, j);
    double mag = std::abs(d);
    q.col(j) *= mag > 0 ? d / mag : typename Matrix::Scalar(1);
  }
  return q;
}

// 2x2 Hermitian rotation zeroing the (i,j) entry: returns (cs, sn) for the
// unitary J = [[cs, -conj(sn)], [sn, cs]] with J^* A J diagonal on the pair.
template <typename Scalar>
void symmetric_schur(double aii, double ajj, Scalar aij, double& cs, Scalar& sn) {
  double mag = std::abs(aij);
  if (mag == 0) {
    cs = 1;
    sn = Scalar(0);
    return;
  }
  double tau = (ajj - aii) / (2 * mag);
  double t = (tau >= 0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
  cs = 1 / std::sqrt(1 + t * t);
  sn = conj_if<Scalar>(Scalar(aij / mag)) * Scalar(t * cs);
}

template <typename Matrix>
double jacobi_eigen_impl(const Matrix& input, Eigen::VectorXd& evals, Matrix& evecs) {
  using Scalar = typename Matrix::Scalar;
  const int n = static_cast<int>(input.rows());
  Matrix a = (input + input.adjoint()) / 2.0;
  Matrix v = Matrix::Identity(n, n);
  const double scale = std::max(a.norm(), 1e-300);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += std::norm(a(i, j));
    if (std::sqrt(off) <= 1e-15 * scale) break;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (std::abs(a(i, j)) <= 1e-18 * scale) continue;
        double cs;
        Scalar sn;
        symmetric_schur(std::real(a(i, i)), std::real(a(j, j)), a(i, j), cs, sn);
        // a <- J^* a J, v <- v J with J acting on columns (i, j)
        for (int k = 0; k < n; ++k) {
          Scalar aki = a(k, i), akj = a(k, j);
          a(k, i) = aki * cs + akj * sn;
          a(k, j) = -aki * conj_if<Scalar>(sn) + akj * cs;
        }
        for (int k = 0; k < n; ++k) {
          Scalar aik = a(i, k), ajk = a(j, k);
          a(i, k) = aik * cs + ajk * conj_if<Scalar>(sn);
          a(j, k) = -aik * sn + ajk * cs;
        }
        for (int k = 0; k < n; ++k) {
          Scalar vki = v(k, i), vkj = v(k, j);
          v(k, i) = vki * cs + vkj * sn;
          v(k, j) = -vki * conj_if<Scalar>(sn) + vkj * cs;
        }
      }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::real(a(x, x)) > std::real(a(y, y));
  });
  evals.resize(n);
  evecs.resize(n, n);
  for (int i = 0; i < n; ++i) {
    evals[i] = std::real(a(order[i], order[i]));
    evecs.col(i) = v.col(order[i]);
  }
  Matrix recon = evecs * evals.asDiagonal() * evecs.adjoint();
  return (input - recon).norm() / scale;
}

template <typename Matrix>
double jacobi_singular_impl(const Matrix& input, Eigen::VectorXd& svals) {
  using Scalar = typename Matrix::Scalar;
  const int p = static_cast<int>(input.rows());
  const int q = static_cast<int>(input.cols());
  if (p > q) throw parameter_error("jacobi_singular_values expects p <= q");
  // One-sided sweeps on the q x p adjoint: orthogonalize column pairs.
  Matrix g = input.adjoint();
  Matrix v = Matrix::Identity(p, p);
  const double scale = std::max(g.norm(), 1e-300);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        Scalar gram = g.col(i).dot(g.col(j));  // conjugates the first argument
        off += std::norm(gram);
      }
    if (std::sqrt(off) <= 1e-16 * scale * scale) break;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        double nii = g.col(i).squaredNorm();
        double njj = g.col(j).squaredNorm();
        Scalar nij = g.col(i).dot(g.col(j));
        if (std::abs(nij) <= 1e-20 * scale * scale) continue;
        double cs;
        Scalar sn;
        symmetric_schur(nii, njj, nij, cs, sn);
        for (int k = 0; k < q; ++k) {
          Scalar gki = g(k, i), gkj = g(k, j);
          g(k, i) = gki * cs + gkj * sn;
          g(k, j) = -gki * conj_if<Scalar>(sn) + gkj * cs;
        }
        for (int k = 0; k < p; ++k) {
          Scalar vki = v(k, i), vkj = v(k, j);
          v(k, i) = vki * cs + vkj * sn;
          v(k, j) = -vki * conj_if<Scalar>(sn) + vkj * cs;
        }
      }
  }
  std::vector<std::pair<double, int>> norms(p);
  for (int i = 0; i < p; ++i) norms[i] = {g.col(i).norm(), i};
  std::sort(norms.begin(), norms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  svals.resize(p);
  Matrix u = Matrix::Zero(q, p);
  Matrix vv = Matrix::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    svals[i] = norms[i].first;
    vv.col(i) = v.col(norms[i].second);
    if (svals[i] > 0) u.col(i) = g.col(norms[i].second) / svals[i];
  }
  // input = (u diag v^*)^* = vv diag u^*
  Matrix recon = vv * svals.asDiagonal() * u.adjoint();
  return (input - recon).norm() / scale;
}

}  // namespace

Eigen::MatrixXd haar_orthogonal(int n, Rng& rng) {
  if (n < 1) throw parameter_error("frame size must be >= 1");
  return haar_frame_impl<Eigen::MatrixXd>(n, rng);
}

Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
  if (n < 1) throw parameter_error("frame size must be >= 1");
  return haar_frame_impl<Eigen::MatrixXcd>(n, rng);
}

double jacobi_eigen(const Eigen::MatrixXcd& a, Eigen::VectorXd& evals,
                    Eigen::MatrixXcd& evecs) {
  return jacobi_eigen_impl(a, evals, evecs);
}

double jacobi_eigen(const Eigen::MatrixXd& a, Eigen::VectorXd& evals,
                    Eigen::MatrixXd& evecs) {
  return jacobi_eigen_impl(a, evals, evecs);
}

double jacobi_singular_values(const Eigen::MatrixXcd& a, Eigen::VectorXd& svals) {
  return jacobi_singular_impl(a, svals);
}

double jacobi_singular_values(const Eigen::MatrixXd& a, Eigen::VectorXd& svals) {
  return jacobi_singular_impl(a, svals);
}

namespace {

template <typename Matrix>
SpectrumSample singular_sum(const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                            int p, int q, Rng& rng, bool aligned) {
  Matrix sl = Matrix::Zero(p, q), sm = Matrix::Zero(p, q);
  for (int i = 0; i < p; ++i) {
    sl(i, i) = lambda[i];
    sm(i, i) = mu[i];
  }
  Matrix c1 = haar_frame_impl<Matrix>(p, rng);
  Matrix d1 = haar_frame_impl<Matrix>(q, rng);
  Matrix c2 = aligned ? c1 : haar_frame_impl<Matrix>(p, rng);
  Matrix d2 = aligned ? d1 : haar_frame_impl<Matrix>(q, rng);
  Matrix sum = c1 * sl * d1.adjoint() + c2 * sm * d2.adjoint();
  SpectrumSample out;
  out.kind = SpectrumSample::Kind::Singular;
  out.residual = jacobi_singular_impl(sum, out.values);
  return out;
}

template <typename Matrix>
SpectrumSample eigen_sum(const Eigen::VectorXd& lambda, const Eigen::VectorXd& mu,
                         Rng& rng, bool aligned) {
  const int n = static_cast<int>(lambda.size());
  Matrix q1 = haar_frame_impl<Matrix>(n, rng);
  Matrix q2 = aligned ? q1 : haar_frame_impl<Matrix>(n, rng);
  Matrix a = q1 * lambda.asDiagonal() * q1.adjoint();
  Matrix b = q2 * mu.asDiagonal() * q2.adjoint();
  Matrix sum = a + b;
  SpectrumSample out;
  out.kind = SpectrumSample::Kind::Eigen;
  Matrix vecs;
  out.residual = jacobi_eigen_impl<Matrix>(sum, out.values, vecs);
  return out;
}

void require_descending(const Eigen::VectorXd& v, bool nonnegative) {
  for (int i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) throw parameter_error("spectrum must be descending");
  if (nonnegative && v.size() > 0 && v[v.size() - 1] < 0)
    throw parameter_error("singular spectrum must be nonnegative");
}

}  // namespace

SpectrumSample sample_singular_sum(const Eigen::VectorXd& lambda,
                                   const Eigen::VectorXd& mu, int p, int q,
                                   ScalarField field, Rng& rng, bool aligned) {
  if (p < 1 || p > q) throw parameter_error("need 1 <= p <= q");
  if (lambda.size() != p || mu.size() != p)
    throw parameter_error("spectrum length must equal p");
  require_descending(lambda, true);
  require_descending(mu, true);
  return field == ScalarField::Real
             ? singular_sum<Eigen::MatrixXd>(lambda, mu, p, q, rng, aligned)
             : singular_sum<Eigen::MatrixXcd>(lambda, mu, p, q, rng, aligned);
}

SpectrumSample sample_eigen_sum(const Eigen::VectorXd& lambda,
                                const Eigen::VectorXd& mu, ScalarField field,
                                Rng& rng, bool aligned) {
  if (lambda.size() != mu.size() || lambda.size() == 0)
    throw parameter_error("spectra must be nonempty and the same length");
  require_descending(lambda, false);
  require_descending(mu, false);
  return field == ScalarField::Real
             ? eigen_sum<Eigen::MatrixXd>(lambda, mu, rng, aligned)
             : eigen_sum<Eigen::MatrixXcd>(lambda, mu, rng, aligned);
}

Polytope shrink_about_centroid(const Polytope& p, const Rational& factor) {
  if (!p.vrep || p.vrep->empty())
    throw parameter_error("shrink needs a vertex list to locate the centroid");
  RatVec center = RatVec::Zero(p.dim);
  for (const auto& v : *p.vrep) center += v;
  center /= Rational(static_cast<long>(p.vrep->size()));
  Polytope out;
  out.dim = p.dim;
  for (const auto& q : p.hrep) {
    Rational at_center = q.normal.dot(center);
    out.hrep.push_back({q.normal, at_center + factor * (q.offset - at_center)});
  }
  return out;
}

OracleReport monte_carlo_check(const SymmetricPair& pair, const RatVec& lambda,
                               const RatVec& mu, const Polytope& p,
                               const MonteCarloOptions& opts) {
  if (p.dim != pair.a_dim) throw parameter_error("polytope/pair dimension mismatch");
  OracleReport report;
  report.trials = opts.trials;
  report.seed = opts.seed;
  report.tol = opts.tol;
  if (opts.trials < 1) return report;

  Eigen::VectorXd lam = to_double_vec(lambda), muv = to_double_vec(mu);
  Rng rng(opts.seed);

  std::vector<Eigen::VectorXd> normals;
  std::vector<double> offsets;
  for (const auto& q : p.hrep) {
    Eigen::VectorXd nd = to_double_vec(q.normal);
    double norm = nd.norm();
    normals.push_back(nd / norm);
    offsets.push_back(to_double(q.offset) / norm);
  }
  std::vector<Eigen::VectorXd> verts;
  if (p.vrep)
    for (const auto& v : *p.vrep) verts.push_back(to_double_vec(v));
  report.vertex_min_dist.assign(verts.size(), std::numeric_limits<double>::infinity());

  auto draw = [&](bool aligned) -> Eigen::VectorXd {
    switch (pair.label.kind) {
      case PairKind::AI:
        return sample_eigen_sum(lam, muv, ScalarField::Real, rng, aligned).values;
      case PairKind::AIII:
        return sample_singular_sum(lam, muv, pair.label.p, pair.label.q,
                                   ScalarField::Complex, rng, aligned)
            .values;
      case PairKind::BDI:
        return sample_singular_sum(lam, muv, pair.label.p, pair.label.q,
                                   ScalarField::Real, rng, aligned)
            .values;
      default:
        throw parameter_error("no sampler for this pair");
    }
  };

  for (long trial = 0; trial < opts.trials; ++trial) {
    const bool aligned = opts.include_aligned && trial == 0;
    Eigen::VectorXd x = draw(aligned);
    if (aligned) {
      Eigen::VectorXd target = lam + muv;
      report.aligned_gap = (x - target).lpNorm<Eigen::Infinity>();
    }
    for (std::size_t i = 0; i < normals.size(); ++i) {
      double margin = normals[i].dot(x) - offsets[i];
      if (margin > opts.tol)
        report.violations.push_back({trial, static_cast<int>(i), margin, x});
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
      report.vertex_min_dist[i] =
          std::min(report.vertex_min_dist[i], (x - verts[i]).norm());
  }
  return report;
}

std::string OracleReport::to_json() const {
  nlohmann::json j;
  j["trials"] = trials;
  j["seed"] = seed;
  j["tol"] = tol;
  j["aligned_gap"] = aligned_gap;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations) {
    nlohmann::json jv;
    jv["trial"] = v.trial;
    jv["inequality"] = v.inequality;
    jv["margin"] = v.margin;
    jv["point"] = std::vector<double>(v.point.data(), v.point.data() + v.point.size());
    j["violations"].push_back(jv);
  }
  j["vertex_coverage"] = vertex_min_dist;
  return j.dump(2);
}

}  // namespace momentcone
