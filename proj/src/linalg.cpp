#include "momentcone/linalg.hpp"

namespace momentcone {

std::vector<int> rref_in_place(RatMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) { p = i; break; }
    }
    if (p < 0) continue;
    m.row(r).swap(m.row(p));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref_in_place(m).size()); }

std::optional<RatVec> solve_any(const RatMat& a, const RatVec& b) {
  RatMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(a.cols()))
    return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  RatVec x = RatVec::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
  RatMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(a.cols()))
    return std::nullopt;
  if (static_cast<Eigen::Index>(pivots.size()) != a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (Eigen::Index r = 0; r < a.cols(); ++r) x[r] = aug(r, a.cols());
  return x;
}

RatMat nullspace(const RatMat& a) {
  RatMat m = a;
  auto pivots = rref_in_place(m);
  const Eigen::Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  RatMat basis(cols, cols - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v = RatVec::Zero(cols);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, c);
    basis.col(k++) = v;
  }
  return basis;
}

RatMat projection_left_inverse(const RatMat& e) {
  RatMat gram = e.transpose() * e;
  RatMat inv(gram.rows(), gram.cols());
  RatMat aug(gram.rows(), 2 * gram.cols());
  aug.leftCols(gram.cols()) = gram;
  aug.rightCols(gram.cols()) = RatMat::Identity(gram.rows(), gram.cols());
  auto pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != gram.rows())
    throw parameter_error("projection_left_inverse: map does not have full column rank");
  inv = aug.rightCols(gram.cols());
  return inv * e.transpose();
}

}  // namespace momentcone
