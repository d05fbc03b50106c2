#pragma once

#include <map>
#include <memory>
#include <string>

#include "momentcone/polytope.hpp"
#include "momentcone/rootsys.hpp"

namespace momentcone {

enum class PairKind { AI, AIII, BDI, Torus, Diagonal };

// Catalog labels: "AI:4", "AIII:2,2", "BDI:2,3", "Torus:3", "Diag:A3".
// For Diag the family label uses the Bourbaki rank (A3 = A_3 on 4 coords).
struct PairLabel {
  PairKind kind;
  int p = 0, q = 0;      // AI: p = n; AIII/BDI: (p, q); Torus: p = n
  Family family = Family::A;
  int rank = 0;          // Diag only (Bourbaki rank)

  std::string str() const;
  static PairLabel parse(const std::string& text);
};

// Restricted Weyl group with reduced words and Bruhat order. Immutable
// after construction, so concurrent readers need no coordination.
struct RestrictedWeylGroup {
  RootSystem rs;
  std::vector<WeylElement> elements;  // BFS by length; 0 = identity, back = longest

  int index_of(const WeylElement& w) const;
  int parse_word(const std::string& text) const;  // "s2s1" or "e"
  // Bruhat-Chevalley order (equivalent to the subword criterion on reduced
  // words), decided by the left-descent recursion.
  bool leq(int v, int w) const;

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index_;
  friend RestrictedWeylGroup build_restricted_weyl_group(const RootSystem& rs);
};

RestrictedWeylGroup build_restricted_weyl_group(const RootSystem& rs);

struct SymmetricPair {
  PairLabel label;
  RootSystem ambient;
  RootSystem restricted;
  int t_dim = 0, a_dim = 0;
  RatMat embed_map;       // t_dim x a_dim, carries weights into the ambient space
  RatMat restrict_map;    // a_dim x t_dim, projection-induced left inverse
  RatMat root_restrict;   // a_dim x t_dim, carries ambient roots onto restricted roots
  std::shared_ptr<RestrictedWeylGroup> weyl;
};

SymmetricPair build_pair(const PairLabel& label);
inline SymmetricPair build_pair(const std::string& text) {
  return build_pair(PairLabel::parse(text));
}

std::vector<RatVec> restricted_orbit(const SymmetricPair& pair, const RatVec& x);

// Hull of the restricted Weyl orbit of a dominant point: one inequality per
// chamber-ray orbit member plus lineality equalities, then reduced; vertex
// list attached.
Polytope kostant_polytope(const SymmetricPair& pair, const RatVec& lambda);

// Same construction for a bare root system (used for ambient hulls).
Polytope weyl_orbit_hull(const RootSystem& rs, const RatVec& lambda);

bool bruhat_leq(const SymmetricPair& pair, const WeylElement& v, const WeylElement& w);

// Hull of the dominant points u(lambda + v mu) over v below w in Bruhat
// order. Requires the full hull (w = longest) to avoid all chamber walls.
Polytope orbit_closure_polytope(const SymmetricPair& pair, const RatVec& lambda,
                                const RatVec& mu, const WeylElement& w);

}  // namespace momentcone
