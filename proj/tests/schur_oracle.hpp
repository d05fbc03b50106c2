#pragma once

// Test-only oracle: Littlewood-Richardson numbers read off from Schur
// polynomial products expanded into monomials (semistandard tableaux),
// independent of the lattice-word tableau counting in the library.

#include <functional>
#include <map>
#include <vector>

#include "momentcone/schubert.hpp"

namespace schur_oracle {

using momentcone::Partition;
using Exponent = std::vector<int>;
using Poly = std::map<Exponent, long>;

// Monomial expansion of s_lambda(x_1..x_m) by enumerating column-strict
// tableaux with entries in 1..m.
inline Poly schur_polynomial(const Partition& lambda, int m) {
  Poly out;
  const int rows = lambda.length();
  if (rows > m) return out;
  if (rows == 0) {
    out[Exponent(m, 0)] = 1;
    return out;
  }
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(lambda.part(r), 0);
  Exponent expo(m, 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      ++out[expo];
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= lambda.part(r)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1, hi = m;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);          // weak rows
    if (r > 0 && c < lambda.part(r - 1)) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int v = lo; v <= hi; ++v) {
      fill[r][c] = v;
      ++expo[v - 1];
      rec(nr, nc);
      --expo[v - 1];
      fill[r][c] = 0;
    }
  };
  rec(0, 0);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Full decomposition of s_lambda * s_mu into Schur coefficients (partitions
// of length <= m), by repeatedly peeling the lexicographically largest
// monomial, whose exponent is the leading partition.
inline std::map<Partition, long> decompose_product(const Partition& lambda,
                                                   const Partition& mu, int m) {
  Poly prod = multiply(schur_polynomial(lambda, m), schur_polynomial(mu, m));
  std::map<Partition, long> out;
  while (!prod.empty()) {
    auto lead = std::prev(prod.end());  // lexicographically largest exponent
    Exponent e = lead->first;
    long c = lead->second;
    std::vector<int> parts(e.begin(), e.end());
    Partition nu(parts);  // leading exponents are weakly decreasing
    out[nu] = c;
    Poly s = schur_polynomial(nu, m);
    for (const auto& [es, cs] : s) {
      auto it = prod.find(es);
      long val = (it == prod.end() ? 0 : it->second) - c * cs;
      if (val == 0) {
        if (it != prod.end()) prod.erase(it);
      } else {
        prod[es] = val;
      }
    }
  }
  return out;
}

inline long lr_from_schur(const Partition& lambda, const Partition& mu,
                          const Partition& nu, int m) {
  auto dec = decompose_product(lambda, mu, m);
  auto it = dec.find(nu);
  return it == dec.end() ? 0 : it->second;
}

}  // namespace schur_oracle
