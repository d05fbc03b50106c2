#pragma once

#include <string>
#include <vector>

#include "momentcone/simplex.hpp"

namespace momentcone {

// Weakly decreasing nonnegative parts, trailing zeros trimmed.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;                       // sum of parts
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const;                  // 0-based, 0 beyond length
  bool contains(const Partition& inner) const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
  std::string str() const;
};

// Number of Littlewood-Richardson skew tableaux of shape nu/lambda and
// content mu (column-strict, lattice word); 0 on size or containment
// mismatch.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// lambda_a = i_{k+1-a} - (k+1-a) for a strictly increasing subset I of
// {1..n} with |I| = k.
Partition subset_to_partition(const std::vector<int>& subset, int k, int n);

// Index triple with |I| = |J| = |K| = k in {1..n}; prints as the compact
// "(1,2)(2,4)(2,4)" form.
struct HornTriple {
  std::vector<int> I, J, K;
  int n = 0, k = 0;
  std::string str() const;
  bool operator==(const HornTriple& o) const { return n == o.n && I == o.I && J == o.J && K == o.K; }
};

// All triples whose Grassmannian Schubert condition holds, i.e. the
// Littlewood-Richardson number of the associated partitions is positive
// (degree matching included). Ordered lexicographically by K, then I, then J.
std::vector<HornTriple> horn_triples(int n, int k);

// Complement, reverse, reflect on each index subset; an involution.
HornTriple dual_triple(const HornTriple& t);

// sum_{k in K} nu_k - sum_{i in I} lambda_i - sum_{j in J} mu_j <= 0 on the
// 3n concatenated coordinates (lambda, mu, nu).
Inequality triple_to_inequality(const HornTriple& t);

}  // namespace momentcone
