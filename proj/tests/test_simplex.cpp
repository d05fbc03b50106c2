#include "doctest.h"

#include "momentcone/linalg.hpp"
#include "momentcone/simplex.hpp"

using namespace momentcone;

namespace {

Inequality row(std::initializer_list<long> normal, long offset, long den = 1) {
  RatVec v(static_cast<Eigen::Index>(normal.size()));
  Eigen::Index i = 0;
  for (long x : normal) v[i++] = x;
  return {v, Rational(offset, den)};
}

}  // namespace

TEST_CASE("exact gaussian kernels") {
  RatMat a(2, 2);
  a << Rational(1, 2), Rational(1, 3), Rational(2), Rational(1);
  RatVec b(2);
  b << Rational(5, 6), Rational(3);
  auto x = solve_unique(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  RatMat sing(2, 2);
  sing << 1, 2, 2, 4;
  CHECK_FALSE(solve_unique(sing, b).has_value());

  RatMat wide(1, 3);
  wide << 1, 1, 1;
  RatMat ker = nullspace(wide);
  CHECK(ker.cols() == 2);
  CHECK((wide * ker).isZero());

  CHECK(rank(sing) == 1);
  CHECK(rank(a) == 2);
}

TEST_CASE("standard form simplex solves a textbook problem") {
  // min -x - y st x + y + s1 = 4, x + 3y + s2 = 6, all >= 0  -> min = -4
  RatMat m(2, 4);
  m << 1, 1, 1, 0,
       1, 3, 0, 1;
  RatVec d(2);
  d << 4, 6;
  RatVec c(4);
  c << -1, -1, 0, 0;
  auto out = standard_form_min(m, d, c);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.value == Rational(-4));
}

TEST_CASE("standard form simplex detects infeasible and unbounded problems") {
  // x1 + x2 = -1 with x >= 0 is infeasible after row flip: x1 + x2 = 1 ... use
  // two contradictory rows instead.
  RatMat m(2, 2);
  m << 1, 1,
       1, 1;
  RatVec d(2);
  d << 1, 2;
  RatVec c = RatVec::Zero(2);
  CHECK(standard_form_min(m, d, c).status == LPStatus::Infeasible);

  // min -x st x - y = 0: x can grow without bound
  RatMat m2(1, 2);
  m2 << 1, -1;
  RatVec d2(1);
  d2 << 0;
  RatVec c2(2);
  c2 << -1, 0;
  CHECK(standard_form_min(m2, d2, c2).status == LPStatus::Unbounded);
}

TEST_CASE("halfspace feasibility") {
  std::vector<Inequality> sys{row({1}, 1), row({-1}, -2)};  // x <= 1, x >= 2
  CHECK_FALSE(system_feasible(sys, 1));
  std::vector<Inequality> ok{row({1}, 2), row({-1}, -1)};   // 1 <= x <= 2
  CHECK(system_feasible(ok, 1));
  CHECK(system_feasible({}, 3));
}

TEST_CASE("lp_sup classifies suprema over polyhedra") {
  // square [0,1]^2
  std::vector<Inequality> square{row({1, 0}, 1), row({-1, 0}, 0),
                                 row({0, 1}, 1), row({0, -1}, 0)};
  RatVec diag(2);
  diag << 1, 1;
  auto out = lp_sup(square, 2, diag);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(out.value == Rational(2));

  // half-plane x <= 1: y direction unbounded
  std::vector<Inequality> half{row({1, 0}, 1)};
  RatVec up(2);
  up << 0, 1;
  CHECK(lp_sup(half, 2, up).status == LPStatus::Unbounded);
  RatVec right(2);
  right << 1, 0;
  auto bounded = lp_sup(half, 2, right);
  REQUIRE(bounded.status == LPStatus::Optimal);
  CHECK(bounded.value == Rational(1));
}

TEST_CASE("lp_implies recognizes dominated and independent inequalities") {
  std::vector<Inequality> sys{row({1, 0}, 1), row({0, 1}, 1)};
  CHECK(lp_implies(sys, 2, row({1, 1}, 2)));
  CHECK(lp_implies(sys, 2, row({1, 1}, 3)));
  CHECK_FALSE(lp_implies(sys, 2, row({1, 1}, 1)));
  CHECK_FALSE(lp_implies(sys, 2, row({-1, 0}, 0)));
  // fractional data stays exact: x <= 1/3 implies 3x <= 1 with equality
  std::vector<Inequality> frac{row({3}, 1)};
  CHECK(lp_implies(frac, 1, row({1}, 1, 3)));
  CHECK_FALSE(lp_implies(frac, 1, row({1}, 33, 100)));
}

TEST_CASE("inequality normalization clears denominators jointly") {
  Inequality q = row({2, 4}, 6);
  Inequality n = normalize(q);
  CHECK(n.normal == integer_primitive(n.normal));
  CHECK(n == row({1, 2}, 3));
  Inequality f{rat_vec({Rational(1, 2), Rational(1, 3)}), Rational(19, 2)};
  Inequality nf = normalize(f);
  CHECK(nf == row({3, 2}, 57));
}
