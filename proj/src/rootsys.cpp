#include "momentcone/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "momentcone/linalg.hpp"

namespace momentcone {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    case Family::None: return "0";
  }
  return "?";
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void finish_chamber_data(RootSystem& rs) {
  const int d = rs.ambient_dim;
  const int r = static_cast<int>(rs.simple_roots.size());
  rs.rank = r;
  if (r == 0) {
    for (int i = 0; i < d; ++i) rs.lineality.push_back(unit_vec(d, i));
    return;
  }
  RatMat s(d, r);
  for (int j = 0; j < r; ++j) s.col(j) = rs.simple_roots[j];
  // Dual basis inside the root span: rays w_j = S (S^T S)^{-1} e_j, so that
  // <alpha_i, w_j> = delta_ij and w_j is orthogonal to the lineality part.
  RatMat gram = s.transpose() * s;
  RatMat aug(r, 2 * r);
  aug.leftCols(r) = gram;
  aug.rightCols(r) = RatMat::Identity(r, r);
  rref_in_place(aug);
  RatMat gram_inv = aug.rightCols(r);
  for (int j = 0; j < r; ++j) {
    RatVec ray = s * gram_inv.col(j);
    rs.chamber_rays.push_back(integer_primitive(ray));
  }
  RatMat ker = nullspace(s.transpose());
  for (Eigen::Index j = 0; j < ker.cols(); ++j)
    rs.lineality.push_back(integer_primitive(ker.col(j)));
}

}  // namespace

RootSystem build_root_system(Family family, int size) {
  if (size < 1) throw parameter_error("root system size must be >= 1");
  if (family == Family::D && size < 2)
    throw parameter_error("family D requires rank >= 2");
  if (family == Family::None) return trivial_root_system(size);

  RootSystem rs;
  rs.family = family;
  const int n = size;

  if (family == Family::A) {
    rs.ambient_dim = n;
    rs.name = "A" + std::to_string(n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        rs.positive_roots.push_back(unit_vec(n, i) - unit_vec(n, j));
    for (int i = 0; i + 1 < n; ++i)
      rs.simple_roots.push_back(unit_vec(n, i) - unit_vec(n, i + 1));
    rs.weyl_order = factorial(n);
  } else {
    rs.ambient_dim = n;
    rs.name = family_name(family) + std::to_string(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        rs.positive_roots.push_back(unit_vec(n, i) - unit_vec(n, j));
        rs.positive_roots.push_back(unit_vec(n, i) + unit_vec(n, j));
      }
    for (int i = 0; i < n; ++i) {
      if (family == Family::B || family == Family::BC)
        rs.positive_roots.push_back(unit_vec(n, i));
      if (family == Family::C || family == Family::BC)
        rs.positive_roots.push_back(unit_vec(n, i, 2));
    }
    for (int i = 0; i + 1 < n; ++i)
      rs.simple_roots.push_back(unit_vec(n, i) - unit_vec(n, i + 1));
    switch (family) {
      case Family::B:
      case Family::BC:
        rs.simple_roots.push_back(unit_vec(n, n - 1));
        break;
      case Family::C:
        rs.simple_roots.push_back(unit_vec(n, n - 1, 2));
        break;
      case Family::D:
        if (n >= 2)
          rs.simple_roots.push_back(unit_vec(n, n - 2) + unit_vec(n, n - 1));
        break;
      default: break;
    }
    if (family == Family::D) {
      if (n == 2) rs.weyl_order = 4;  // A1 x A1
      else rs.weyl_order = factorial(n) * (1ull << (n - 1));
    } else {
      rs.weyl_order = factorial(n) * (1ull << n);
    }
  }
  finish_chamber_data(rs);
  return rs;
}

RootSystem trivial_root_system(int dim) {
  if (dim < 1) throw parameter_error("trivial root system needs dim >= 1");
  RootSystem rs;
  rs.family = Family::None;
  rs.name = "0^" + std::to_string(dim);
  rs.ambient_dim = dim;
  rs.weyl_order = 1;
  finish_chamber_data(rs);
  return rs;
}

RootSystem doubled_root_system(const RootSystem& base) {
  RootSystem rs;
  rs.family = base.family;
  rs.name = base.name + "x" + base.name;
  rs.ambient_dim = 2 * base.ambient_dim;
  const int d = base.ambient_dim;
  auto lift = [&](const RatVec& v, bool second) {
    RatVec out = RatVec::Zero(2 * d);
    out.segment(second ? d : 0, d) = v;
    return out;
  };
  for (const auto& a : base.positive_roots) rs.positive_roots.push_back(lift(a, false));
  for (const auto& a : base.positive_roots) rs.positive_roots.push_back(lift(a, true));
  for (const auto& a : base.simple_roots) rs.simple_roots.push_back(lift(a, false));
  for (const auto& a : base.simple_roots) rs.simple_roots.push_back(lift(a, true));
  rs.weyl_order = base.weyl_order * base.weyl_order;
  finish_chamber_data(rs);
  return rs;
}

RatVec reflect(const RatVec& root, const RatVec& x) {
  Rational num = root.dot(x);
  Rational den = root.dot(root);
  return x - (2 * num / den) * root;
}

bool is_root(const RootSystem& rs, const RatVec& v) {
  for (const auto& a : rs.positive_roots)
    if (a == v || RatVec(-a) == v) return true;
  return false;
}

bool is_dominant(const RootSystem& rs, const RatVec& x) {
  if (x.size() != rs.ambient_dim) throw parameter_error("dimension mismatch");
  for (const auto& a : rs.simple_roots)
    if (a.dot(x) < 0) return false;
  return true;
}

std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& x) {
  if (x.size() != rs.ambient_dim) throw parameter_error("dimension mismatch");
  RatVecSet seen;
  std::deque<RatVec> queue;
  seen.insert(x);
  queue.push_back(x);
  while (!queue.empty()) {
    RatVec cur = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      RatVec next = reflect(a, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

bool cone_member(const RootSystem& rs, const RatVec& x) {
  if (x.size() != rs.ambient_dim) throw parameter_error("dimension mismatch");
  if (rs.simple_roots.empty()) return x.isZero();
  // Simple roots are independent, so the representation is unique: solve and
  // check signs.
  RatMat s(rs.ambient_dim, rs.rank);
  for (int j = 0; j < rs.rank; ++j) s.col(j) = rs.simple_roots[j];
  auto coeffs = solve_any(s, x);
  if (!coeffs) return false;
  if (s * *coeffs != x) return false;
  for (Eigen::Index i = 0; i < coeffs->size(); ++i)
    if ((*coeffs)[i] < 0) return false;
  return true;
}

bool dominance_leq(const RootSystem& rs, const RatVec& x, const RatVec& y) {
  return cone_member(rs, y - x);
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    if (perm[i] != i || sign[i] != 1) return false;
  return true;
}

RatMat WeylElement::matrix() const {
  RatMat m = RatMat::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j) m(perm[j], j) = sign[j];
  return m;
}

WeylElement identity_element(int dim) {
  WeylElement w;
  w.perm.resize(dim);
  w.sign.assign(dim, 1);
  for (int i = 0; i < dim; ++i) w.perm[i] = i;
  return w;
}

WeylElement simple_reflection_element(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) throw parameter_error("simple reflection index out of range");
  const RatVec& a = rs.simple_roots[i - 1];
  WeylElement w = identity_element(rs.ambient_dim);
  // Derive the signed permutation from the action on basis vectors.
  for (int j = 0; j < rs.ambient_dim; ++j) {
    RatVec img = reflect(a, unit_vec(rs.ambient_dim, j));
    int hits = 0;
    for (int k = 0; k < rs.ambient_dim; ++k) {
      if (img[k] == 0) continue;
      ++hits;
      if (img[k] != 1 && img[k] != -1)
        throw parameter_error("simple reflection is not a signed permutation");
      w.perm[j] = k;
      w.sign[j] = img[k] == 1 ? 1 : -1;
    }
    if (hits != 1) throw parameter_error("simple reflection is not a signed permutation");
  }
  w.word = {i};
  return w;
}

RatVec apply(const WeylElement& w, const RatVec& x) {
  if (x.size() != w.dim()) throw parameter_error("dimension mismatch");
  RatVec out(x.size());
  for (int j = 0; j < w.dim(); ++j) out[w.perm[j]] = w.sign[j] * x[j];
  return out;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.dim() != b.dim()) throw parameter_error("dimension mismatch");
  WeylElement c = identity_element(a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    c.perm[j] = a.perm[b.perm[j]];
    c.sign[j] = b.sign[j] * a.sign[b.perm[j]];
  }
  c.word = a.word;
  c.word.insert(c.word.end(), b.word.begin(), b.word.end());
  return c;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement v = identity_element(w.dim());
  for (int j = 0; j < w.dim(); ++j) {
    v.perm[w.perm[j]] = j;
    v.sign[w.perm[j]] = w.sign[j];
  }
  v.word.assign(w.word.rbegin(), w.word.rend());
  return v;
}

bool same_transform(const WeylElement& a, const WeylElement& b) {
  return a.perm == b.perm && a.sign == b.sign;
}

namespace {

// Positive roots with parallel duplicates removed (drops 2e_i in BC); the
// Coxeter combinatorics of BC is that of its reduced core.
std::vector<RatVec> reduced_positive_roots(const RootSystem& rs) {
  std::vector<RatVec> out;
  for (const auto& a : rs.positive_roots) {
    RatVec half = a / 2;
    bool doubled = false;
    for (const auto& b : rs.positive_roots)
      if (b == half) { doubled = true; break; }
    if (!doubled) out.push_back(a);
  }
  return out;
}

bool is_negative_root(const RootSystem& rs, const RatVec& v) {
  for (const auto& a : rs.positive_roots)
    if (RatVec(-a) == v) return true;
  return false;
}

}  // namespace

int length(const RootSystem& rs, const WeylElement& w) {
  int inv = 0;
  for (const auto& a : reduced_positive_roots(rs))
    if (is_negative_root(rs, apply(w, a))) ++inv;
  return inv;
}

std::vector<int> canonical_reduced_word(const RootSystem& rs, const WeylElement& w) {
  WeylElement cur = w;
  cur.word.clear();
  std::vector<int> rev;
  while (!cur.is_identity()) {
    int descent = 0;
    for (int i = 1; i <= rs.rank; ++i) {
      if (is_negative_root(rs, apply(cur, rs.simple_roots[i - 1]))) {
        descent = i;
        break;
      }
    }
    if (descent == 0)
      throw parameter_error("element is not in the Weyl group of this system");
    rev.push_back(descent);
    cur = compose(cur, simple_reflection_element(rs, descent));
  }
  return {rev.rbegin(), rev.rend()};
}

WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity_element(rs.ambient_dim);
  for (int i : word) w = compose(w, simple_reflection_element(rs, i));
  w.word = canonical_reduced_word(rs, w);
  return w;
}

std::pair<RatVec, WeylElement> dominant_representative(const RootSystem& rs,
                                                       const RatVec& x) {
  if (x.size() != rs.ambient_dim) throw parameter_error("dimension mismatch");
  RatVec cur = x;
  std::vector<int> applied;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= rs.rank; ++i) {
      if (rs.simple_roots[i - 1].dot(cur) < 0) {
        cur = reflect(rs.simple_roots[i - 1], cur);
        applied.push_back(i);
        moved = true;
        break;
      }
    }
  }
  // cur = s_{i_k} ... s_{i_1} x, so the product reads right to left.
  std::vector<int> word(applied.rbegin(), applied.rend());
  WeylElement w = element_from_word(rs, word);
  return {cur, w};
}

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::uint64_t cap) {
  if (rs.weyl_order > cap)
    throw unsupported_error("Weyl group too large to enumerate: " + rs.name);
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Key, int> index;
  std::vector<WeylElement> elements;
  std::deque<int> queue;
  elements.push_back(identity_element(rs.ambient_dim));
  index[{elements[0].perm, elements[0].sign}] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank; ++i) {
      WeylElement next = compose(elements[at], simple_reflection_element(rs, i));
      Key key{next.perm, next.sign};
      if (index.find(key) != index.end()) continue;
      next.word = elements[at].word;
      next.word.push_back(i);
      index[key] = static_cast<int>(elements.size());
      elements.push_back(next);
      queue.push_back(static_cast<int>(elements.size()) - 1);
    }
  }
  return elements;
}

}  // namespace momentcone
