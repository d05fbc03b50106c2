#include "momentcone/sympair.hpp"

#include <algorithm>

#include "momentcone/linalg.hpp"

namespace momentcone {

std::string PairLabel::str() const {
  switch (kind) {
    case PairKind::AI: return "AI:" + std::to_string(p);
    case PairKind::AIII: return "AIII:" + std::to_string(p) + "," + std::to_string(q);
    case PairKind::BDI: return "BDI:" + std::to_string(p) + "," + std::to_string(q);
    case PairKind::Torus: return "Torus:" + std::to_string(p);
    case PairKind::Diagonal: return "Diag:" + family_name(family) + std::to_string(rank);
  }
  return "?";
}

PairLabel PairLabel::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw parameter_error("bad pair label (expected NAME:PARAMS): " + text);
  std::string name = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw parameter_error("bad pair parameter: " + text);
    return std::stoi(s);
  };
  PairLabel label{};
  if (name == "AI" || name == "Torus") {
    label.kind = name == "AI" ? PairKind::AI : PairKind::Torus;
    label.p = parse_int(rest);
    if (label.p < 1) throw parameter_error("pair parameter must be positive: " + text);
    if (label.kind == PairKind::AI && label.p < 2)
      throw parameter_error("AI needs n >= 2: " + text);
    return label;
  }
  if (name == "AIII" || name == "BDI") {
    label.kind = name == "AIII" ? PairKind::AIII : PairKind::BDI;
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw parameter_error("expected two parameters: " + text);
    label.p = parse_int(rest.substr(0, comma));
    label.q = parse_int(rest.substr(comma + 1));
    if (label.p < 1 || label.q < 1)
      throw parameter_error("pair parameters must be positive: " + text);
    if (label.p > label.q) throw parameter_error("pair requires p <= q: " + text);
    return label;
  }
  if (name == "Diag") {
    label.kind = PairKind::Diagonal;
    std::size_t i = 0;
    while (i < rest.size() && std::isalpha(static_cast<unsigned char>(rest[i]))) ++i;
    std::string fam = rest.substr(0, i);
    label.rank = parse_int(rest.substr(i));
    if (fam == "A") label.family = Family::A;
    else if (fam == "B") label.family = Family::B;
    else if (fam == "C") label.family = Family::C;
    else if (fam == "D") label.family = Family::D;
    else if (fam == "BC") label.family = Family::BC;
    else throw parameter_error("unknown family in pair label: " + text);
    return label;
  }
  throw parameter_error("unknown pair label: " + text);
}

RestrictedWeylGroup build_restricted_weyl_group(const RootSystem& rs) {
  RestrictedWeylGroup g;
  g.rs = rs;
  g.elements = weyl_group_elements(rs);
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    g.index_[{g.elements[i].perm, g.elements[i].sign}] = static_cast<int>(i);
  return g;
}

int RestrictedWeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find({w.perm, w.sign});
  if (it == index_.end())
    throw parameter_error("element does not belong to this Weyl group");
  return it->second;
}

int RestrictedWeylGroup::parse_word(const std::string& text) const {
  if (text == "e" || text == "1" || text.empty()) return 0;
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 's') throw parameter_error("bad Weyl word: " + text);
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw parameter_error("bad Weyl word: " + text);
    word.push_back(std::stoi(text.substr(start, i - start)));
  }
  for (int s : word)
    if (s < 1 || s > rs.rank)
      throw parameter_error("reflection index out of range in: " + text);
  return index_of(element_from_word(rs, word));
}

bool RestrictedWeylGroup::leq(int v, int w) const {
  if (v == 0) return true;
  if (v == w) return true;
  const auto& ev = elements[v];
  const auto& ew = elements[w];
  if (ev.word.size() > ew.word.size()) return false;
  // Left-descent recursion: for s_i with l(s_i w) < l(w),
  //   v <= w  iff  (s_i v <= s_i w when s_i lowers v, else v <= s_i w).
  int i = 0;
  {
    const WeylElement winv = inverse(ew);
    for (int s = 1; s <= rs.rank; ++s) {
      RatVec img = apply(winv, rs.simple_roots[s - 1]);
      bool negative = false;
      for (Eigen::Index t = 0; t < img.size(); ++t) {
        if (img[t] != 0) {
          negative = img[t] < 0;
          break;
        }
      }
      if (negative) { i = s; break; }
    }
  }
  const WeylElement si = simple_reflection_element(rs, i);
  int siw = index_of(compose(si, ew));
  int siv = index_of(compose(si, ev));
  bool lowers_v = elements[siv].word.size() < ev.word.size();
  return lowers_v ? leq(siv, siw) : leq(v, siw);
}

namespace {

// AIII-style spectrum pattern: xi -> (xi_1..xi_p, 0^{q-p}, -xi_p..-xi_1).
RatMat pattern_matrix(int p, int q) {
  const int n = p + q;
  RatMat e = RatMat::Zero(n, p);
  for (int i = 0; i < p; ++i) {
    e(i, i) = 1;
    e(n - 1 - i, i) = -1;
  }
  return e;
}

void verify_pair(const SymmetricPair& pair) {
  // Maps are mutually inverse on the restricted side.
  if (pair.restrict_map * pair.embed_map != RatMat::Identity(pair.a_dim, pair.a_dim))
    throw parameter_error("pair construction: restrict o embed != id");
  // The restricted positive roots are exactly the nonzero images of the
  // ambient positive roots under the root-restriction map.
  RatVecSet images, expected;
  for (const auto& a : pair.ambient.positive_roots) {
    RatVec r = pair.root_restrict * a;
    if (!r.isZero()) images.insert(r);
  }
  for (const auto& a : pair.restricted.positive_roots) expected.insert(a);
  if (images != expected)
    throw parameter_error("pair construction: restricted roots mismatch");
  // The embedded restricted chamber lies in the ambient chamber.
  for (const auto& ray : pair.restricted.chamber_rays)
    if (!is_dominant(pair.ambient, pair.embed_map * ray))
      throw parameter_error("pair construction: chamber ray escapes ambient chamber");
  for (const auto& z : pair.restricted.lineality) {
    RatVec up = pair.embed_map * z;
    if (!is_dominant(pair.ambient, up) || !is_dominant(pair.ambient, RatVec(-up)))
      throw parameter_error("pair construction: lineality escapes ambient chamber");
  }
}

}  // namespace

SymmetricPair build_pair(const PairLabel& label) {
  SymmetricPair pair;
  pair.label = label;
  switch (label.kind) {
    case PairKind::AI: {
      const int n = label.p;
      pair.ambient = build_root_system(Family::A, n);
      pair.restricted = pair.ambient;
      pair.t_dim = pair.a_dim = n;
      pair.embed_map = RatMat::Identity(n, n);
      pair.restrict_map = pair.embed_map;
      pair.root_restrict = pair.embed_map;
      break;
    }
    case PairKind::AIII: {
      const int p = label.p, q = label.q, n = p + q;
      pair.ambient = build_root_system(Family::A, n);
      pair.restricted = build_root_system(p < q ? Family::BC : Family::C, p);
      pair.t_dim = n;
      pair.a_dim = p;
      pair.embed_map = pattern_matrix(p, q);
      pair.restrict_map = projection_left_inverse(pair.embed_map);
      pair.root_restrict = pair.embed_map.transpose();
      break;
    }
    case PairKind::BDI: {
      const int p = label.p, q = label.q, n = p + q;
      const int m = n / 2;
      if (p == q && p < 2)
        throw parameter_error("BDI with p = q needs p >= 2");
      pair.ambient = build_root_system(n % 2 ? Family::B : Family::D, m);
      pair.restricted = build_root_system(p == q ? Family::D : Family::B, p);
      pair.t_dim = m;
      pair.a_dim = p;
      pair.embed_map = RatMat::Zero(m, p);
      for (int i = 0; i < p; ++i) pair.embed_map(i, i) = 1;
      pair.restrict_map = pair.embed_map.transpose();
      pair.root_restrict = pair.restrict_map;
      break;
    }
    case PairKind::Torus: {
      const int n = label.p;
      pair.ambient = trivial_root_system(n);
      pair.restricted = pair.ambient;
      pair.t_dim = pair.a_dim = n;
      pair.embed_map = RatMat::Identity(n, n);
      pair.restrict_map = pair.embed_map;
      pair.root_restrict = pair.embed_map;
      break;
    }
    case PairKind::Diagonal: {
      const int size = label.family == Family::A ? label.rank + 1 : label.rank;
      RootSystem base = build_root_system(label.family, size);
      pair.restricted = base;
      pair.ambient = doubled_root_system(base);
      pair.a_dim = base.ambient_dim;
      pair.t_dim = 2 * pair.a_dim;
      pair.embed_map = RatMat::Zero(pair.t_dim, pair.a_dim);
      pair.restrict_map = RatMat::Zero(pair.a_dim, pair.t_dim);
      for (int i = 0; i < pair.a_dim; ++i) {
        pair.embed_map(i, i) = Rational(1, 2);
        pair.embed_map(pair.a_dim + i, i) = Rational(1, 2);
        pair.restrict_map(i, i) = 1;
        pair.restrict_map(i, pair.a_dim + i) = 1;
      }
      pair.root_restrict = pair.restrict_map;
      break;
    }
  }
  verify_pair(pair);
  pair.weyl = std::make_shared<RestrictedWeylGroup>(
      build_restricted_weyl_group(pair.restricted));
  return pair;
}

std::vector<RatVec> restricted_orbit(const SymmetricPair& pair, const RatVec& x) {
  return weyl_orbit(pair.restricted, x);
}

Polytope weyl_orbit_hull(const RootSystem& rs, const RatVec& lambda) {
  if (!is_dominant(rs, lambda))
    throw parameter_error("orbit hull requires a dominant point");
  Polytope p;
  p.dim = rs.ambient_dim;
  // hull(W lambda) = intersection over w of w(lambda - root cone): one
  // inequality per chamber-ray orbit member, equality on the lineality part.
  for (const auto& ray : rs.chamber_rays) {
    Rational offset = ray.dot(lambda);
    for (const auto& u : weyl_orbit(rs, ray)) p.hrep.push_back({u, offset});
  }
  for (const auto& z : rs.lineality) add_equality(p, z, z.dot(lambda));
  p.vrep = weyl_orbit(rs, lambda);
  p.bounded = true;
  p.bounded_known = true;
  return p;
}

Polytope kostant_polytope(const SymmetricPair& pair, const RatVec& lambda) {
  if (lambda.size() != pair.a_dim) throw parameter_error("dimension mismatch");
  if (!is_dominant(pair.restricted, lambda))
    throw parameter_error("kostant_polytope requires a dominant weight");
  Polytope p = weyl_orbit_hull(pair.restricted, lambda);
  auto reduced = remove_redundant(p);
  if (!reduced) throw precondition_error("orbit hull cannot be empty");
  return *reduced;
}

bool bruhat_leq(const SymmetricPair& pair, const WeylElement& v, const WeylElement& w) {
  return pair.weyl->leq(pair.weyl->index_of(v), pair.weyl->index_of(w));
}

Polytope orbit_closure_polytope(const SymmetricPair& pair, const RatVec& lambda,
                                const RatVec& mu, const WeylElement& w) {
  if (lambda.size() != pair.a_dim || mu.size() != pair.a_dim)
    throw parameter_error("dimension mismatch");
  if (!is_dominant(pair.restricted, lambda) || !is_dominant(pair.restricted, mu))
    throw parameter_error("orbit closure requires dominant weights");
  const int w_idx = pair.weyl->index_of(w);
  const auto& group = pair.weyl->elements;

  // Interior check on the full hull: every dominant point u(lambda + v mu)
  // must pair strictly positively with every restricted simple root.
  RatVecSet full;
  for (const auto& v : group) {
    RatVec base = lambda + apply(v, mu);
    for (const auto& u : group) {
      RatVec x = apply(u, base);
      if (is_dominant(pair.restricted, x)) full.insert(x);
    }
  }
  for (const auto& x : full)
    for (int i = 0; i < pair.restricted.rank; ++i)
      if (pair.restricted.simple_roots[i].dot(x) == 0)
        throw precondition_error(
            "orbit closure needs the full hull inside the open chamber; wall s" +
            std::to_string(i + 1) + " is touched at " + str(x));

  RatVecSet points;
  for (std::size_t vi = 0; vi < group.size(); ++vi) {
    if (!pair.weyl->leq(static_cast<int>(vi), w_idx)) continue;
    RatVec base = lambda + apply(group[vi], mu);
    for (const auto& u : group) {
      RatVec x = apply(u, base);
      if (is_dominant(pair.restricted, x)) points.insert(x);
    }
  }
  return hull_from_points({points.begin(), points.end()});
}

}  // namespace momentcone
