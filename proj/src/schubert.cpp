#include "momentcone/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace momentcone {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw parameter_error("partition parts must be weakly decreasing");
  for (int x : parts)
    if (x < 0) throw parameter_error("partition parts must be nonnegative");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::part(int i) const {
  return i < length() ? parts[i] : 0;
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < inner.length(); ++i)
    if (part(i) < inner.part(i)) return false;
  return true;
}

std::string Partition::str() const {
  if (parts.empty()) return "()";
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda)) return 0;
  if (mu.size() == 0) return 1;  // empty skew filling

  const int rows = nu.length();
  const int values = mu.length();
  // Cells in the reverse reading order (rows top to bottom, right to left);
  // the lattice condition is checked prefix by prefix in this order.
  struct Cell { int r, c; };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) cells.push_back({r, c});

  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(nu.part(r), 0);
  std::vector<int> count(values + 1, 0);

  long total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[at];
    int lo = 1, hi = values;
    if (c + 1 < nu.part(r)) hi = std::min(hi, fill[r][c + 1]);  // weak along the row
    if (r > 0 && c >= lambda.part(r - 1) && c < nu.part(r - 1))
      lo = std::max(lo, fill[r - 1][c] + 1);  // strict down the column
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu.part(v - 1)) continue;            // content bound
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word
      fill[r][c] = v;
      ++count[v];
      rec(at + 1);
      --count[v];
      fill[r][c] = 0;
    }
  };
  rec(0);
  return total;
}

Partition subset_to_partition(const std::vector<int>& subset, int k, int n) {
  if (static_cast<int>(subset.size()) != k)
    throw parameter_error("subset size does not match k");
  for (int i = 0; i < k; ++i) {
    if (subset[i] < 1 || subset[i] > n)
      throw parameter_error("subset entries must lie in 1..n");
    if (i && subset[i] <= subset[i - 1])
      throw parameter_error("subset must be strictly increasing");
  }
  std::vector<int> parts(k);
  for (int a = 1; a <= k; ++a) parts[a - 1] = subset[k - a] - (k + 1 - a);
  return Partition(parts);
}

std::string HornTriple::str() const {
  auto group = [](const std::vector<int>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out + ")";
  };
  return group(I) + group(J) + group(K);
}

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  for (;;) {
    out.push_back(cur);
    int j = k - 1;
    while (j >= 0 && cur[j] == n - k + j + 1) --j;
    if (j < 0) break;
    ++cur[j];
    for (int l = j + 1; l < k; ++l) cur[l] = cur[l - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<HornTriple> horn_triples(int n, int k) {
  if (k < 1 || k >= n) throw parameter_error("need 1 <= k < n");
  auto subsets = k_subsets(n, k);
  std::vector<Partition> shapes;
  shapes.reserve(subsets.size());
  for (const auto& s : subsets) shapes.push_back(subset_to_partition(s, k, n));

  std::vector<HornTriple> out;
  for (std::size_t ks = 0; ks < subsets.size(); ++ks)
    for (std::size_t is = 0; is < subsets.size(); ++is)
      for (std::size_t js = 0; js < subsets.size(); ++js) {
        if (shapes[is].size() + shapes[js].size() != shapes[ks].size()) continue;
        if (lr_coefficient(shapes[is], shapes[js], shapes[ks]) <= 0) continue;
        out.push_back({subsets[is], subsets[js], subsets[ks], n, k});
      }
  return out;
}

HornTriple dual_triple(const HornTriple& t) {
  auto star = [&](const std::vector<int>& s) {
    std::vector<bool> in(t.n + 1, false);
    for (int x : s) in[x] = true;
    std::vector<int> out;
    for (int x = t.n; x >= 1; --x)
      if (!in[x]) out.push_back(t.n + 1 - x);
    return out;
  };
  return {star(t.I), star(t.J), star(t.K), t.n, t.n - t.k};
}

Inequality triple_to_inequality(const HornTriple& t) {
  Inequality q;
  q.normal = RatVec::Zero(3 * t.n);
  q.offset = 0;
  for (int i : t.I) q.normal[i - 1] -= 1;
  for (int j : t.J) q.normal[t.n + j - 1] -= 1;
  for (int k : t.K) q.normal[2 * t.n + k - 1] += 1;
  return q;
}

}  // namespace momentcone
