#pragma once

#include <array>
#include <string_view>

namespace momentcone::golden {

// Reference copy of the SU(4) triple table: one row per I<->J family,
// dual column from the complementary cardinality, self-dual rows marked.
inline constexpr std::string_view kTripleTableSu4 =
    "Horn-Klyachko triples for SU(4)\n"
    "k=1\n"
    "(1)(1)(1)  (1,2,3)(1,2,3)(1,2,3)\n"
    "(1)(2)(2)  (1,2,3)(1,2,4)(1,2,4)\n"
    "(1)(3)(3)  (1,2,3)(1,3,4)(1,3,4)\n"
    "(1)(4)(4)  (1,2,3)(2,3,4)(2,3,4)\n"
    "(2)(2)(3)  (1,2,4)(1,2,4)(1,3,4)\n"
    "(2)(3)(4)  (1,2,4)(1,3,4)(2,3,4)\n"
    "k=2\n"
    "(1,2)(1,2)(1,2)  self-dual\n"
    "(1,2)(1,3)(1,3)  self-dual\n"
    "(1,2)(1,4)(1,4)  (1,2)(2,3)(2,3)\n"
    "(1,2)(2,4)(2,4)  self-dual\n"
    "(1,2)(3,4)(3,4)  self-dual\n"
    "(1,3)(1,3)(1,4)  (1,3)(1,3)(2,3)\n"
    "(1,3)(1,4)(2,4)  (1,3)(2,3)(2,4)\n"
    "(1,3)(2,4)(3,4)  self-dual\n"
    "(1,4)(1,4)(3,4)  (2,3)(2,3)(3,4)\n";

// The eighteen singular-value inequalities for SU(2,2), as integer rows
// a . (lambda1, lambda2, mu1, mu2, nu1, nu2) <= 0, beyond the chamber rows.
inline constexpr std::array<std::array<int, 6>, 18> kSu22Inequalities = {{
    {-1, 0, -1, 0, 1, 0},     // nu1 <= lambda1 + mu1
    {-1, -1, -1, -1, 1, 1},   // nu1 + nu2 <= lambda1 + lambda2 + mu1 + mu2
    {-1, 0, 0, -1, 0, 1},     // nu2 <= lambda1 + mu2
    {0, -1, -1, 0, 0, 1},     // nu2 <= lambda2 + mu1
    {-1, -1, -1, 1, 1, -1},   // nu1 - nu2 <= lambda1 + lambda2 + mu1 - mu2
    {-1, 1, -1, -1, 1, -1},   // nu1 - nu2 <= lambda1 - lambda2 + mu1 + mu2
    {-1, 0, 0, 1, 0, -1},     // nu2 >= -lambda1 + mu2
    {0, 1, -1, 0, 0, -1},     // nu2 >= lambda2 - mu1
    {-1, -1, 1, -1, -1, 1},   // nu1 - nu2 >= -lambda1 - lambda2 + mu1 - mu2
    {1, -1, -1, -1, -1, 1},   // nu1 - nu2 >= lambda1 - lambda2 - mu1 - mu2
    {1, 0, -1, 0, -1, 0},     // nu1 >= lambda1 - mu1
    {-1, 0, 1, 0, -1, 0},     // nu1 >= -lambda1 + mu1
    {0, 1, 0, -1, -1, 0},     // nu1 >= lambda2 - mu2
    {0, -1, 0, 1, -1, 0},     // nu1 >= -lambda2 + mu2
    {1, 1, -1, -1, -1, -1},   // nu1 + nu2 >= lambda1 + lambda2 - mu1 - mu2
    {-1, -1, 1, 1, -1, -1},   // nu1 + nu2 >= -lambda1 - lambda2 + mu1 + mu2
    {1, -1, -1, 1, -1, -1},   // nu1 + nu2 >= lambda1 - lambda2 - mu1 + mu2
    {-1, 1, 1, -1, -1, -1},   // nu1 + nu2 >= -lambda1 + lambda2 + mu1 - mu2
}};

}  // namespace momentcone::golden
