#include "momentcone/klyachko.hpp"

#include <algorithm>

namespace momentcone {

namespace {

RatMat pattern_block(int p, int q) {
  const int n = p + q;
  RatMat e = RatMat::Zero(n, p);
  for (int i = 0; i < p; ++i) {
    e(i, i) = 1;
    e(n - 1 - i, i) = -1;
  }
  return e;
}

int ambient_matrix_size(const SymmetricPair& pair) {
  switch (pair.label.kind) {
    case PairKind::AI: return pair.label.p;
    case PairKind::AIII:
    case PairKind::BDI: return pair.label.p + pair.label.q;
    default:
      throw parameter_error("sum polytopes are defined for AI, AIII and BDI pairs");
  }
}

}  // namespace

RatMat spectrum_pattern(const SymmetricPair& pair) {
  switch (pair.label.kind) {
    case PairKind::AI:
      return RatMat::Identity(pair.label.p, pair.label.p);
    case PairKind::AIII:
    case PairKind::BDI:
      return pattern_block(pair.label.p, pair.label.q);
    default:
      throw parameter_error("sum polytopes are defined for AI, AIII and BDI pairs");
  }
}

Polytope klyachko_polytope(const SymmetricPair& pair, const RatVec& lambda,
                           const RatVec& mu) {
  const int n = ambient_matrix_size(pair);
  if (lambda.size() != pair.a_dim || mu.size() != pair.a_dim)
    throw parameter_error("dimension mismatch");
  if (!is_dominant(pair.restricted, lambda) || !is_dominant(pair.restricted, mu))
    throw parameter_error("sum polytope requires dominant weights");
  const RatMat pattern = spectrum_pattern(pair);
  for (const RatVec& w : {lambda, mu}) {
    RatVec pat = pattern * w;
    for (Eigen::Index i = 0; i + 1 < pat.size(); ++i)
      if (pat[i] < pat[i + 1])
        throw parameter_error("weights must have a descending spectrum pattern");
  }
  const RatVec lam_e = pattern * lambda;
  const RatVec mu_e = pattern * mu;

  Polytope p;
  p.dim = pair.a_dim;
  for (int k = 1; k < n; ++k) {
    for (const auto& t : horn_triples(n, k)) {
      // fix lambda, mu; pull the nu block back through the pattern
      Inequality full = triple_to_inequality(t);
      Rational rhs = -full.normal.head(n).dot(lam_e) - full.normal.segment(n, n).dot(mu_e);
      Inequality reduced;
      reduced.normal = pattern.transpose() * full.normal.tail(n);
      reduced.offset = rhs;
      p.hrep.push_back(normalize(reduced));
    }
  }
  for (const auto& a : pair.restricted.simple_roots) p.hrep.push_back({-a, 0});
  if (pair.label.kind == PairKind::BDI && pair.label.p == pair.label.q)
    p.hrep.push_back({-unit_vec(pair.a_dim, pair.a_dim - 1), 0});
  for (const auto& z : pair.restricted.lineality)
    add_equality(p, z, z.dot(lambda + mu));

  auto reduced = remove_redundant(p);
  if (!reduced)
    throw precondition_error("sum polytope came out empty; inputs are inconsistent");
  Polytope out = *reduced;
  out.bounded = true;
  out.bounded_known = true;
  if (out.dim <= 4) out.vrep = vertices(out);
  return out;
}

std::vector<Inequality> su22_chamber_rows() {
  std::vector<Inequality> rows;
  auto row = [&](std::initializer_list<int> coeffs) {
    RatVec v(6);
    Eigen::Index i = 0;
    for (int c : coeffs) v[i++] = c;
    rows.push_back({v, 0});
  };
  row({-1, 1, 0, 0, 0, 0});
  row({0, -1, 0, 0, 0, 0});
  row({0, 0, -1, 1, 0, 0});
  row({0, 0, 0, -1, 0, 0});
  row({0, 0, 0, 0, -1, 1});
  row({0, 0, 0, 0, 0, -1});
  return rows;
}

Polytope su22_symbolic_system() {
  const int n = 4;
  // Variables (lambda1, lambda2, mu1, mu2, nu1, nu2); each ambient weight
  // group substitutes the C_2 spectrum pattern (x1, x2, -x2, -x1).
  RatMat block = pattern_block(2, 2);
  RatMat sub = RatMat::Zero(3 * n, 6);
  sub.block(0, 0, n, 2) = block;
  sub.block(n, 2, n, 2) = block;
  sub.block(2 * n, 4, n, 2) = block;

  Polytope ambient;
  ambient.dim = 3 * n;
  for (int k = 1; k < n; ++k)
    for (const auto& t : horn_triples(n, k))
      ambient.hrep.push_back(triple_to_inequality(t));

  Polytope restricted = substitute(ambient, sub, RatVec::Zero(3 * n));
  for (const auto& row : su22_chamber_rows()) restricted.hrep.push_back(row);
  auto reduced = remove_redundant(restricted);
  if (!reduced) throw precondition_error("symbolic reduction came out empty");
  Polytope out = *reduced;
  std::sort(out.hrep.begin(), out.hrep.end(), ineq_less);
  return out;
}

}  // namespace momentcone
