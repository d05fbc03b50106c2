#pragma once

#include "momentcone/polytope.hpp"
#include "momentcone/schubert.hpp"
#include "momentcone/sympair.hpp"

namespace momentcone {

// The spectrum pattern carrying restricted data into eigenvalue coordinates
// of the ambient unitary picture: identity for AI(n); for AIII(p,q) and
// BDI(p,q), xi -> (xi_1..xi_p, 0^{q-p}, -xi_p..-xi_1) on p+q coordinates.
RatMat spectrum_pattern(const SymmetricPair& pair);

// Minimal inequality system of the sum polytope for a pair in
// {AI, AIII, BDI} at fixed dominant weights:
//   1. all index-triple inequalities over every cardinality, on ambient
//      eigenvalue coordinates,
//   2. lambda and mu fixed through the spectrum pattern,
//   3. nu pulled back through the pattern,
//   4. restricted chamber (plus the trace equality for AI),
//   5. exact redundancy elimination.
// Vertices are attached when the restricted dimension allows it.
Polytope klyachko_polytope(const SymmetricPair& pair, const RatVec& lambda,
                           const RatVec& mu);

// The symbolic 6-variable reduction for AIII(2,2): the full SU(4) triple
// system with the pattern substituted in all three weight groups, reduced
// over the chamber cone. Returns the reduced system including the six
// chamber rows, in canonical order.
Polytope su22_symbolic_system();

// Chamber rows of the 6-variable system (lambda1>=lambda2>=0 etc).
std::vector<Inequality> su22_chamber_rows();

}  // namespace momentcone
