#pragma once

#include "momentcone/rational.hpp"

namespace momentcone {

// normal . x <= offset
struct Inequality {
  RatVec normal;
  Rational offset;
};

// Joint integer-primitive scaling of (normal, offset); positive scale only,
// so the halfspace is unchanged.
Inequality normalize(const Inequality& ineq);

bool operator==(const Inequality& a, const Inequality& b);
bool ineq_less(const Inequality& a, const Inequality& b);

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
  LPStatus status;
  Rational value;  // valid only when status == Optimal
};

// Exact two-phase simplex with Bland's rule for
//   min c.z  subject to  M z = d, z >= 0.
LPOutcome standard_form_min(RatMat m, RatVec d, RatVec c);

// Is {x : normal_i . x <= offset_i} nonempty? Decided via the Farkas
// certificate LP, exactly.
bool system_feasible(const std::vector<Inequality>& sys, int dim);

// Classification of sup{ obj . x } over a system known to be feasible.
LPOutcome lp_sup(const std::vector<Inequality>& sys, int dim, const RatVec& obj);

// Does a feasible system imply target? (sup of target.normal is <= offset.)
bool lp_implies(const std::vector<Inequality>& sys, int dim, const Inequality& target);

}  // namespace momentcone
