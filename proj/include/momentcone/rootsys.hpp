#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momentcone/rational.hpp"

namespace momentcone {

// Classical families in their standard coordinate realization. Family A is
// built on n coordinates (the simple system A_{n-1}); B/C/D/BC on n = rank
// coordinates. BC is the non-reduced family: both e_i and 2e_i occur.
enum class Family { A, B, C, D, BC, None };

std::string family_name(Family f);

struct RootSystem {
  std::string name;        // "A3", "BC2", "C2xC2", "0^3"
  Family family = Family::None;
  int rank = 0;            // number of simple roots
  int ambient_dim = 0;
  std::vector<RatVec> positive_roots;
  std::vector<RatVec> simple_roots;   // Bourbaki order
  std::uint64_t weyl_order = 1;

  // Derived chamber data. chamber_rays: extreme rays of the dominant
  // chamber inside the root span (dual basis to the simple roots, scaled
  // integer-primitive). lineality: basis of the orthogonal complement of
  // the root span; the chamber is rays + this whole subspace.
  std::vector<RatVec> chamber_rays;
  std::vector<RatVec> lineality;
};

// Standard families. For family A the size parameter is the number of
// coordinates: build_root_system(A, n) realizes A_{n-1} on n coordinates.
// D requires size >= 2.
RootSystem build_root_system(Family family, int size);

// Root system with no roots on `dim` coordinates (every point dominant,
// trivial Weyl group).
RootSystem trivial_root_system(int dim);

// Two commuting copies of rs on doubled coordinates.
RootSystem doubled_root_system(const RootSystem& rs);

// Reflection in the hyperplane orthogonal to root, applied to x.
RatVec reflect(const RatVec& root, const RatVec& x);

bool is_root(const RootSystem& rs, const RatVec& v);  // v in R = R_+ u -R_+

bool is_dominant(const RootSystem& rs, const RatVec& x);

// Closure of {x} under the simple reflections, as a lexicographically
// sorted, duplicate-free list.
std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& x);

// Exact membership in the cone spanned by the positive roots.
bool cone_member(const RootSystem& rs, const RatVec& x);

// Dominance order: x <= y iff y - x lies in the positive root cone.
bool dominance_leq(const RootSystem& rs, const RatVec& x, const RatVec& y);

// Signed permutation together with a reduced word in simple reflections.
// Action: w(e_j) = sign[j] * e_{perm[j]}.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> sign;
  std::vector<int> word;  // 1-based simple-reflection indices, product left to right

  int dim() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
  RatMat matrix() const;
};

WeylElement identity_element(int dim);
WeylElement simple_reflection_element(const RootSystem& rs, int i);  // 1-based
RatVec apply(const WeylElement& w, const RatVec& x);
WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& w);
bool same_transform(const WeylElement& a, const WeylElement& b);

// Coxeter length: inversions counted over the reduced core of R_+
// (for BC the doubled roots 2e_i are skipped).
int length(const RootSystem& rs, const WeylElement& w);

// Recomputes a canonical reduced word for w's transform.
std::vector<int> canonical_reduced_word(const RootSystem& rs, const WeylElement& w);

// Element built from a word (not necessarily reduced); its stored word is
// re-derived in reduced form.
WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word);

// w * x = the dominant orbit representative; returned together with w.
std::pair<RatVec, WeylElement> dominant_representative(const RootSystem& rs,
                                                       const RatVec& x);

// Full Weyl group, breadth-first by length (element 0 is the identity, the
// last element is the longest). Guarded by a size cap.
std::vector<WeylElement> weyl_group_elements(const RootSystem& rs,
                                             std::uint64_t cap = 50000);

}  // namespace momentcone
