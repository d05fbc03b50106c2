#include "momentcone/polytope.hpp"

#include <algorithm>
#include <map>

#include "momentcone/linalg.hpp"

namespace momentcone {

namespace {

// Canonical dedup; identical normals keep the tightest offset; trivial
// always-true rows are dropped.
std::vector<Inequality> canonical_rows(const std::vector<Inequality>& rows) {
  std::map<RatVec, Rational, RatVecLess> best;
  bool falsum = false;
  Rational falsum_offset = 0;
  for (const auto& raw : rows) {
    Inequality q = normalize(raw);
    if (q.normal.isZero()) {
      if (q.offset < 0) {
        falsum = true;
        falsum_offset = q.offset;
      }
      continue;
    }
    auto it = best.find(q.normal);
    if (it == best.end()) best.emplace(q.normal, q.offset);
    else it->second = std::min(it->second, q.offset);
  }
  std::vector<Inequality> out;
  if (falsum) {
    Inequality f;
    f.normal = RatVec::Zero(rows.front().normal.size());
    f.offset = falsum_offset;
    out.push_back(f);
  }
  for (const auto& [n, b] : best) out.push_back({n, b});
  return out;
}

}  // namespace

Polytope make_polytope(int dim, std::vector<Inequality> hrep) {
  for (const auto& q : hrep)
    if (q.normal.size() != dim) throw parameter_error("dimension mismatch");
  Polytope p;
  p.dim = dim;
  p.hrep = std::move(hrep);
  return p;
}

void add_equality(Polytope& p, const RatVec& normal, const Rational& offset) {
  p.hrep.push_back({normal, offset});
  p.hrep.push_back({-normal, -offset});
  p.reduced = false;
}

bool membership(const Polytope& p, const RatVec& x) {
  if (x.size() != p.dim) throw parameter_error("dimension mismatch");
  for (const auto& q : p.hrep)
    if (q.normal.dot(x) > q.offset) return false;
  return true;
}

std::vector<int> tight_facets(const Polytope& p, const RatVec& x) {
  if (x.size() != p.dim) throw parameter_error("dimension mismatch");
  std::vector<int> out;
  for (std::size_t i = 0; i < p.hrep.size(); ++i)
    if (p.hrep[i].normal.dot(x) == p.hrep[i].offset) out.push_back(static_cast<int>(i));
  return out;
}

bool is_empty(const Polytope& p) { return !system_feasible(p.hrep, p.dim); }

bool is_bounded(const Polytope& p) {
  if (is_empty(p)) return true;
  for (int i = 0; i < p.dim; ++i) {
    for (int s : {1, -1}) {
      LPOutcome out = lp_sup(p.hrep, p.dim, unit_vec(p.dim, i, s));
      if (out.status == LPStatus::Unbounded) return false;
    }
  }
  return true;
}

Polytope substitute(const Polytope& p, const RatMat& m, const RatVec& t) {
  if (m.rows() != p.dim || t.size() != p.dim)
    throw parameter_error("substitute: map does not target the polytope space");
  Polytope out;
  out.dim = static_cast<int>(m.cols());
  for (const auto& q : p.hrep) {
    Inequality sub;
    sub.normal = m.transpose() * q.normal;
    sub.offset = q.offset - q.normal.dot(t);
    out.hrep.push_back(normalize(sub));
  }
  return out;
}

std::optional<Polytope> remove_redundant(const Polytope& p) {
  std::vector<Inequality> rows = canonical_rows(p.hrep);
  if (!system_feasible(rows, p.dim)) return std::nullopt;
  // Sequential sweep: drop a row iff the others already imply it. Every test
  // runs against the full current system, so the solution set never changes.
  std::size_t i = 0;
  while (i < rows.size()) {
    std::vector<Inequality> rest;
    rest.reserve(rows.size() - 1);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i) rest.push_back(rows[j]);
    if (lp_implies(rest, p.dim, rows[i])) rows.erase(rows.begin() + i);
    else ++i;
  }
  Polytope out;
  out.dim = p.dim;
  out.hrep = std::move(rows);
  out.vrep = p.vrep;
  out.reduced = true;
  out.bounded = p.bounded;
  out.bounded_known = p.bounded_known;
  return out;
}

std::vector<RatVec> vertices(const Polytope& p) {
  if (p.dim > 4) throw unsupported_error("vertex enumeration limited to dim <= 4");
  if (is_empty(p)) return {};
  if (!(p.bounded_known ? p.bounded : is_bounded(p)))
    throw unsupported_error("vertex enumeration requires a bounded polytope");

  // Distinct tight hyperplanes, orientation-free.
  std::vector<Inequality> hyps;
  {
    RatVecSet seen;
    for (const auto& raw : p.hrep) {
      Inequality q = normalize(raw);
      if (q.normal.isZero()) continue;
      RatVec key(q.normal.size() + 1);
      key.head(q.normal.size()) = q.normal;
      key[q.normal.size()] = q.offset;
      for (Eigen::Index k = 0; k < key.size(); ++k) {
        if (key[k] == 0) continue;
        if (key[k] < 0) key = -key;
        break;
      }
      if (seen.insert(key).second)
        hyps.push_back({key.head(q.normal.size()), key[q.normal.size()]});
    }
  }

  const int d = p.dim;
  RatVecSet found;
  const int m = static_cast<int>(hyps.size());
  if (m < d) {
    // A bounded nonempty polytope with fewer hyperplanes than dim is a
    // single point only when d == 0; nothing else to do here.
    return {};
  }
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  for (;;) {
    RatMat a(d, d);
    RatVec b(d);
    for (int i = 0; i < d; ++i) {
      a.row(i) = hyps[comb[i]].normal.transpose();
      b[i] = hyps[comb[i]].offset;
    }
    if (auto x = solve_unique(a, b); x && membership(p, *x)) found.insert(*x);
    int k = d - 1;
    while (k >= 0 && comb[k] == m - d + k) --k;
    if (k < 0) break;
    ++comb[k];
    for (int j = k + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

Polytope hull_from_points(const std::vector<RatVec>& points) {
  if (points.empty()) throw parameter_error("hull of an empty point set");
  const int dim = static_cast<int>(points[0].size());
  if (dim > 3) throw unsupported_error("generic hull limited to dim <= 3");
  RatVecSet uniq(points.begin(), points.end());
  std::vector<RatVec> pts(uniq.begin(), uniq.end());
  for (const auto& x : pts)
    if (x.size() != dim) throw parameter_error("dimension mismatch");

  const RatVec& p0 = pts[0];
  RatMat diffs(static_cast<Eigen::Index>(pts.size()) - 1, dim);
  for (std::size_t i = 1; i < pts.size(); ++i)
    diffs.row(static_cast<Eigen::Index>(i) - 1) = (pts[i] - p0).transpose();
  RatMat span_complement =
      pts.size() > 1 ? nullspace(diffs) : RatMat::Identity(dim, dim);
  const int aff_dim = dim - static_cast<int>(span_complement.cols());

  Polytope out;
  out.dim = dim;
  for (Eigen::Index j = 0; j < span_complement.cols(); ++j) {
    RatVec z = integer_primitive(span_complement.col(j));
    add_equality(out, z, z.dot(p0));
  }

  if (aff_dim > 0) {
    // Candidate facet hyperplanes from all aff_dim-subsets of points.
    std::vector<int> comb(aff_dim);
    for (int i = 0; i < aff_dim; ++i) comb[i] = i;
    const int m = static_cast<int>(pts.size());
    RatVecSet facet_keys;
    for (;;) {
      RatMat constraints(aff_dim - 1 + static_cast<int>(span_complement.cols()), dim);
      for (int i = 1; i < aff_dim; ++i)
        constraints.row(i - 1) = (pts[comb[i]] - pts[comb[0]]).transpose();
      for (Eigen::Index j = 0; j < span_complement.cols(); ++j)
        constraints.row(aff_dim - 1 + j) = span_complement.col(j).transpose();
      RatMat ker = nullspace(constraints);
      if (ker.cols() == 1) {
        RatVec n = integer_primitive(ker.col(0));
        Rational b = n.dot(pts[comb[0]]);
        bool below = true, above = true;
        for (const auto& x : pts) {
          Rational v = n.dot(x);
          if (v > b) below = false;
          if (v < b) above = false;
        }
        if (below || above) {
          if (!below) {
            n = -n;
            b = -b;
          }
          RatVec key(dim + 1);
          key.head(dim) = n;
          key[dim] = b;
          if (facet_keys.insert(key).second) out.hrep.push_back({n, b});
        }
      }
      int k = aff_dim - 1;
      while (k >= 0 && comb[k] == m - aff_dim + k) --k;
      if (k < 0) break;
      ++comb[k];
      for (int j = k + 1; j < aff_dim; ++j) comb[j] = comb[j - 1] + 1;
    }
  }

  // Vertices: points whose tight constraints span the whole space.
  std::vector<RatVec> verts;
  for (const auto& x : pts) {
    std::vector<RatVec> tight_rows;
    for (const auto& q : out.hrep)
      if (q.normal.dot(x) == q.offset) tight_rows.push_back(q.normal);
    RatMat tmat(static_cast<Eigen::Index>(tight_rows.size()), dim);
    for (std::size_t i = 0; i < tight_rows.size(); ++i)
      tmat.row(static_cast<Eigen::Index>(i)) = tight_rows[i].transpose();
    if (rank(tmat) == dim) verts.push_back(x);
  }
  out.vrep = verts;
  out.reduced = true;
  out.bounded = true;
  out.bounded_known = true;
  return out;
}

bool equal(const Polytope& p, const Polytope& q) {
  if (p.dim != q.dim) throw parameter_error("dimension mismatch");
  const bool pe = is_empty(p), qe = is_empty(q);
  if (pe || qe) return pe == qe;
  if (p.vrep)
    for (const auto& x : *p.vrep)
      if (!membership(q, x)) return false;
  if (q.vrep)
    for (const auto& x : *q.vrep)
      if (!membership(p, x)) return false;
  for (const auto& ineq : q.hrep)
    if (!lp_implies(p.hrep, p.dim, normalize(ineq))) return false;
  for (const auto& ineq : p.hrep)
    if (!lp_implies(q.hrep, q.dim, normalize(ineq))) return false;
  return true;
}

std::string hrep_text(const Polytope& p) {
  std::string out;
  for (const auto& raw : p.hrep) {
    Inequality q = normalize(raw);
    for (Eigen::Index i = 0; i < q.normal.size(); ++i) {
      if (i) out += " ";
      out += q.normal[i].str();
    }
    out += " | " + q.offset.str() + "\n";
  }
  return out;
}

}  // namespace momentcone
