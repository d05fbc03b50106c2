#include "doctest.h"

#include <random>

#include "momentcone/rootsys.hpp"

using namespace momentcone;

namespace {

// Brute-force closure of a vector set under reflection in every root,
// independent of the BFS in weyl_orbit.
RatVecSet closure_under_all_roots(const RootSystem& rs, const RatVec& start) {
  RatVecSet seen{start};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RatVec> snapshot(seen.begin(), seen.end());
    for (const auto& x : snapshot)
      for (const auto& a : rs.positive_roots)
        if (seen.insert(reflect(a, x)).second) grew = true;
  }
  return seen;
}

RatVec rv(std::initializer_list<long> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

}  // namespace

TEST_CASE("family A on two coordinates has the single positive root e1-e2") {
  RootSystem rs = build_root_system(Family::A, 2);
  REQUIRE(rs.positive_roots.size() == 1);
  CHECK(rs.positive_roots[0] == rv({1, -1}));
  CHECK(rs.simple_roots.size() == 1);
  CHECK(rs.weyl_order == 2);
}

TEST_CASE("BC2 has the six expected positive roots and is Weyl-closed") {
  RootSystem rs = build_root_system(Family::BC, 2);
  RatVecSet roots(rs.positive_roots.begin(), rs.positive_roots.end());
  RatVecSet expected{rv({1, -1}), rv({1, 1}), rv({1, 0}),
                     rv({0, 1}), rv({2, 0}), rv({0, 2})};
  CHECK(roots == expected);

  // closure: the image of every root under every root reflection is a root
  for (const auto& a : rs.positive_roots)
    for (const auto& b : rs.positive_roots) {
      RatVec img = reflect(a, b);
      CHECK(is_root(rs, img));
    }
}

TEST_CASE("family A on four coordinates enumerates all e_i - e_j") {
  RootSystem rs = build_root_system(Family::A, 4);
  CHECK(rs.positive_roots.size() == 6);
  int found = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      RatVec v = unit_vec(4, i) - unit_vec(4, j);
      if (is_root(rs, v)) ++found;
    }
  CHECK(found == 6);
  CHECK(rs.weyl_order == 24);
}

TEST_CASE("every family is closed under its own reflections") {
  for (auto [fam, size] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 2}, {Family::C, 3}, {Family::D, 3},
           {Family::BC, 2}}) {
    RootSystem rs = build_root_system(fam, size);
    for (const auto& a : rs.positive_roots)
      for (const auto& b : rs.positive_roots)
        CHECK(is_root(rs, reflect(a, b)));
  }
}

TEST_CASE("positive roots are nonnegative integer combinations of simple roots") {
  for (auto [fam, size] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::B, 3}, {Family::C, 2}, {Family::D, 4},
           {Family::BC, 3}}) {
    RootSystem rs = build_root_system(fam, size);
    RatMat s(rs.ambient_dim, rs.rank);
    for (int j = 0; j < rs.rank; ++j) s.col(j) = rs.simple_roots[j];
    for (const auto& a : rs.positive_roots) {
      CHECK(cone_member(rs, a));
    }
  }
}

TEST_CASE("a simple reflection flips exactly the positive multiples of its root") {
  for (auto [fam, size] : std::vector<std::pair<Family, int>>{
           {Family::A, 4}, {Family::B, 3}, {Family::C, 3}, {Family::D, 3},
           {Family::BC, 2}}) {
    RootSystem rs = build_root_system(fam, size);
    for (const auto& simple : rs.simple_roots) {
      RatVecSet flipped;
      for (const auto& b : rs.positive_roots) {
        RatVec img = reflect(simple, b);
        bool negative = false;
        for (const auto& c : rs.positive_roots)
          if (RatVec(-c) == img) negative = true;
        if (negative) flipped.insert(b);
      }
      RatVecSet multiples;
      for (const auto& b : rs.positive_roots) {
        if (b == simple || b == RatVec(2 * simple) || RatVec(2 * b) == simple)
          multiples.insert(b);
      }
      CHECK(flipped == multiples);
    }
  }
}

TEST_CASE("weyl orbits match brute-force closure and divide the group order") {
  std::mt19937_64 rng(7);
  for (auto [fam, size] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 2}, {Family::C, 3}, {Family::BC, 2},
           {Family::D, 3}}) {
    RootSystem rs = build_root_system(fam, size);
    for (int trial = 0; trial < 5; ++trial) {
      RatVec x(rs.ambient_dim);
      for (int i = 0; i < rs.ambient_dim; ++i)
        x[i] = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
      auto orbit = weyl_orbit(rs, x);
      auto brute = closure_under_all_roots(rs, x);
      CHECK(RatVecSet(orbit.begin(), orbit.end()) == brute);
      CHECK(rs.weyl_order % orbit.size() == 0);
    }
  }
}

TEST_CASE("orbit of zero is a point; strictly dominant orbits are regular") {
  RootSystem a2 = build_root_system(Family::A, 3);
  CHECK(weyl_orbit(a2, rv({0, 0, 0})).size() == 1);
  CHECK(weyl_orbit(a2, rv({2, 1, 0})).size() == 6);

  RootSystem bc2 = build_root_system(Family::BC, 2);
  auto orbit = weyl_orbit(bc2, rv({1, 0}));
  RatVecSet expected{rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})};
  CHECK(RatVecSet(orbit.begin(), orbit.end()) == expected);
}

TEST_CASE("dominant representative lands in the chamber and is orbit-unique") {
  RootSystem a1 = build_root_system(Family::A, 2);
  auto [lam, w] = dominant_representative(a1, rv({0, 1}));
  CHECK(lam == rv({1, 0}));
  CHECK(apply(w, rv({0, 1})) == lam);

  RootSystem bc2 = build_root_system(Family::BC, 2);
  auto [lam2, w2] = dominant_representative(bc2, rv({-3, 1}));
  CHECK(lam2 == rv({3, 1}));
  CHECK(apply(w2, rv({-3, 1})) == lam2);
  // cross-check: the chamber point of the orbit is unique
  int in_chamber = 0;
  for (const auto& x : weyl_orbit(bc2, rv({-3, 1})))
    if (is_dominant(bc2, x)) ++in_chamber;
  CHECK(in_chamber == 1);

  RatVec already = rv({5, 2});
  auto [lam3, w3] = dominant_representative(bc2, already);
  CHECK(lam3 == already);
  CHECK(w3.is_identity());
}

TEST_CASE("dominant representative is constant on orbits under random words") {
  std::mt19937_64 rng(11);
  RootSystem c3 = build_root_system(Family::C, 3);
  RatVec x = rat_vec({Rational(5, 2), Rational(1), Rational(-3)});
  RatVec base = dominant_representative(c3, x).first;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> word;
    for (int i = 0; i < 8; ++i) word.push_back(1 + static_cast<int>(rng() % 3));
    WeylElement w = element_from_word(c3, word);
    CHECK(dominant_representative(c3, apply(w, x)).first == base);
  }
}

TEST_CASE("cone membership is decided exactly") {
  RootSystem a3 = build_root_system(Family::A, 4);
  CHECK(cone_member(a3, rv({0, 0, 0, 0})));
  CHECK(cone_member(a3, rv({1, 0, 0, -1})));   // e1 - e4
  CHECK_FALSE(cone_member(a3, rv({-1, 0, 0, 1})));
  CHECK_FALSE(cone_member(a3, rv({1, 0, 0, 0})));  // not in the span

  // half-integer coefficients are fine
  RootSystem c2 = build_root_system(Family::C, 2);
  CHECK(cone_member(c2, rat_vec({Rational(1, 2), Rational(1, 2)})));
}

TEST_CASE("cone membership agrees with the dominance order") {
  std::mt19937_64 rng(3);
  RootSystem b3 = build_root_system(Family::B, 3);
  for (int trial = 0; trial < 40; ++trial) {
    RatVec xi(3), lam(3);
    for (int i = 0; i < 3; ++i) {
      xi[i] = Rational(static_cast<long>(rng() % 9) - 4, 2);
      lam[i] = Rational(static_cast<long>(rng() % 9) - 4, 2);
    }
    CHECK(dominance_leq(b3, xi, lam) == cone_member(b3, lam - xi));
  }
}

TEST_CASE("weyl element words are reduced and reproduce the transform") {
  RootSystem c2 = build_root_system(Family::C, 2);
  auto group = weyl_group_elements(c2);
  CHECK(group.size() == 8);
  for (const auto& w : group) {
    CHECK(static_cast<int>(w.word.size()) == length(c2, w));
    WeylElement rebuilt = identity_element(2);
    for (int i : w.word) rebuilt = compose(rebuilt, simple_reflection_element(c2, i));
    CHECK(same_transform(rebuilt, w));
    CHECK(rebuilt.matrix() == w.matrix());
    // the matrix permutes the root set
    for (const auto& a : c2.positive_roots) CHECK(is_root(c2, apply(w, a)));
  }
}

TEST_CASE("group enumeration sizes match the order formulas") {
  CHECK(weyl_group_elements(build_root_system(Family::A, 4)).size() == 24);
  CHECK(weyl_group_elements(build_root_system(Family::B, 3)).size() == 48);
  CHECK(weyl_group_elements(build_root_system(Family::D, 3)).size() == 24);
  CHECK(weyl_group_elements(build_root_system(Family::BC, 2)).size() == 8);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(build_root_system(Family::D, 1), parameter_error);
  CHECK_THROWS_AS(build_root_system(Family::A, 0), parameter_error);
  RootSystem a2 = build_root_system(Family::A, 3);
  CHECK_THROWS_AS(weyl_orbit(a2, rv({1, 0})), parameter_error);
}
