#pragma once

#include <optional>

#include "momentcone/simplex.hpp"

namespace momentcone {

// Convex polyhedron in H-representation over exact rationals, with an
// optional vertex list. Closed by construction; may be unbounded.
struct Polytope {
  int dim = 0;
  std::vector<Inequality> hrep;
  std::optional<std::vector<RatVec>> vrep;
  bool reduced = false;
  bool bounded = false;  // meaningful only when bounded_known
  bool bounded_known = false;
};

Polytope make_polytope(int dim, std::vector<Inequality> hrep);

// Adds the pair a.x <= b, -a.x <= -b.
void add_equality(Polytope& p, const RatVec& normal, const Rational& offset);

bool membership(const Polytope& p, const RatVec& x);
std::vector<int> tight_facets(const Polytope& p, const RatVec& x);

bool is_empty(const Polytope& p);
bool is_bounded(const Polytope& p);

// Pullback through the affine map x = M xi + t; the result lives in the
// domain of the map and is not reduced.
Polytope substitute(const Polytope& p, const RatMat& m, const RatVec& t);

// Minimal H-representation with the same solution set, decided by exact LP.
// An inequality is kept iff the maximum of its normal over the remaining
// system exceeds its offset. nullopt when the input is empty.
std::optional<Polytope> remove_redundant(const Polytope& p);

// All points cut out by dim-many independent tight hyperplanes, kept when
// feasible. Requires dim <= 4 and boundedness.
std::vector<RatVec> vertices(const Polytope& p);

// Minimal H-representation of the convex hull; generic facet enumeration,
// dim <= 3. Lower-dimensional hulls get affine-hull equality pairs.
Polytope hull_from_points(const std::vector<RatVec>& points);

// Exact set equality via mutual LP inclusion.
bool equal(const Polytope& p, const Polytope& q);

// Text form: one line per inequality, "a_1 ... a_d | b" (a.x <= b, integers).
std::string hrep_text(const Polytope& p);

}  // namespace momentcone
