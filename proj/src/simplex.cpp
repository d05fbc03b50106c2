#include "momentcone/simplex.hpp"

#include <algorithm>

namespace momentcone {

Inequality normalize(const Inequality& ineq) {
  RatVec joint(ineq.normal.size() + 1);
  joint.head(ineq.normal.size()) = ineq.normal;
  joint[ineq.normal.size()] = ineq.offset;
  joint = integer_primitive(joint);
  Inequality out;
  out.normal = joint.head(ineq.normal.size());
  out.offset = joint[ineq.normal.size()];
  return out;
}

bool operator==(const Inequality& a, const Inequality& b) {
  return a.offset == b.offset && a.normal == b.normal;
}

bool ineq_less(const Inequality& a, const Inequality& b) {
  if (lex_less(a.normal, b.normal)) return true;
  if (lex_less(b.normal, a.normal)) return false;
  return a.offset < b.offset;
}

namespace {

class Tableau {
 public:
  // min c.z st M z = d, z >= 0; artificial columns appended internally.
  Tableau(RatMat m, RatVec d) : rows_(m.rows()), real_cols_(m.cols()) {
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (d[i] < 0) {
        m.row(i) = -m.row(i);
        d[i] = -d[i];
      }
    }
    t_ = RatMat::Zero(rows_, real_cols_ + rows_ + 1);
    t_.block(0, 0, rows_, real_cols_) = m;
    t_.block(0, real_cols_, rows_, rows_) = RatMat::Identity(rows_, rows_);
    t_.col(real_cols_ + rows_) = d;
    basis_.resize(rows_);
    for (Eigen::Index i = 0; i < rows_; ++i)
      basis_[i] = static_cast<int>(real_cols_ + i);
    alive_.assign(rows_, true);
  }

  // Returns false when the constraints are infeasible.
  bool phase1() {
    RatVec cost = RatVec::Zero(real_cols_ + rows_);
    for (Eigen::Index j = real_cols_; j < real_cols_ + rows_; ++j) cost[j] = 1;
    run(cost, real_cols_ + rows_);
    if (objective(cost) > 0) return false;
    evict_artificials();
    return true;
  }

  // Phase 2; entering restricted to real columns. Returns false on unbounded.
  bool phase2(const RatVec& c) {
    RatVec cost = RatVec::Zero(real_cols_ + rows_);
    cost.head(real_cols_) = c;
    return run(cost, real_cols_);
  }

  Rational objective(const RatVec& cost) const {
    Rational v = 0;
    for (Eigen::Index i = 0; i < rows_; ++i)
      if (alive_[i]) v += cost[basis_[i]] * t_(i, rhs_col());
    return v;
  }

 private:
  Eigen::Index rhs_col() const { return real_cols_ + rows_; }

  // Bland's rule throughout: smallest eligible entering column, smallest
  // basis index on ratio ties. Returns false iff unbounded.
  bool run(const RatVec& cost, Eigen::Index enter_limit) {
    for (;;) {
      // reduced costs
      int entering = -1;
      for (Eigen::Index j = 0; j < enter_limit; ++j) {
        Rational red = cost[j];
        for (Eigen::Index i = 0; i < rows_; ++i)
          if (alive_[i]) red -= cost[basis_[i]] * t_(i, j);
        if (red < 0) {
          entering = static_cast<int>(j);
          break;
        }
      }
      if (entering < 0) return true;
      int leave = -1;
      Rational best_ratio = 0;
      for (Eigen::Index i = 0; i < rows_; ++i) {
        if (!alive_[i] || t_(i, entering) <= 0) continue;
        Rational ratio = t_(i, rhs_col()) / t_(i, entering);
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, entering);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (i == row || !alive_[i]) continue;
      if (t_(i, col) != 0) t_.row(i) -= t_(i, col) * t_.row(row);
    }
    basis_[row] = static_cast<int>(col);
  }

  // After phase 1 at objective zero, pivot basic artificials out; rows that
  // cannot pivot are dependent constraints and get dropped.
  void evict_artificials() {
    for (Eigen::Index i = 0; i < rows_; ++i) {
      if (!alive_[i] || basis_[i] < real_cols_) continue;
      int col = -1;
      for (Eigen::Index j = 0; j < real_cols_; ++j) {
        if (t_(i, j) != 0) {
          col = static_cast<int>(j);
          break;
        }
      }
      if (col >= 0) pivot(i, col);
      else alive_[i] = false;
    }
  }

  Eigen::Index rows_, real_cols_;
  RatMat t_;
  std::vector<int> basis_;
  std::vector<bool> alive_;
};

}  // namespace

LPOutcome standard_form_min(RatMat m, RatVec d, RatVec c) {
  if (m.rows() != d.size() || m.cols() != c.size())
    throw parameter_error("standard_form_min: shape mismatch");
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Tableau t(std::move(m), std::move(d));
  if (!t.phase1()) return {LPStatus::Infeasible, 0};
  if (!t.phase2(c)) return {LPStatus::Unbounded, 0};
  RatVec padded = RatVec::Zero(cols + rows);  // zero cost on artificials
  padded.head(cols) = c;
  return {LPStatus::Optimal, t.objective(padded)};
}

bool system_feasible(const std::vector<Inequality>& sys, int dim) {
  // Farkas: the system is infeasible iff some y >= 0 has
  // sum y_i normal_i = 0 and sum y_i offset_i = -1.
  const int m = static_cast<int>(sys.size());
  if (m == 0) return true;
  RatMat mat(dim + 1, m);
  for (int j = 0; j < m; ++j) {
    if (sys[j].normal.size() != dim) throw parameter_error("dimension mismatch");
    mat.col(j).head(dim) = sys[j].normal;
    mat(dim, j) = sys[j].offset;
  }
  RatVec d = RatVec::Zero(dim + 1);
  d[dim] = -1;
  RatVec c = RatVec::Zero(m);
  LPOutcome cert = standard_form_min(mat, d, c);
  return cert.status == LPStatus::Infeasible;
}

LPOutcome lp_sup(const std::vector<Inequality>& sys, int dim, const RatVec& obj) {
  // max obj.x over {Ax <= b} equals min b.y over {A^T y = obj, y >= 0} when
  // the primal is feasible; an infeasible dual certifies an unbounded primal.
  const int m = static_cast<int>(sys.size());
  if (obj.size() != dim) throw parameter_error("dimension mismatch");
  RatMat mat(dim, std::max(m, 1));
  RatVec offsets = RatVec::Zero(std::max(m, 1));
  if (m == 0) {
    if (obj.isZero()) return {LPStatus::Optimal, 0};
    return {LPStatus::Unbounded, 0};
  }
  for (int j = 0; j < m; ++j) {
    if (sys[j].normal.size() != dim) throw parameter_error("dimension mismatch");
    mat.col(j) = sys[j].normal;
    offsets[j] = sys[j].offset;
  }
  LPOutcome dual = standard_form_min(mat, obj, offsets);
  switch (dual.status) {
    case LPStatus::Infeasible: return {LPStatus::Unbounded, 0};
    case LPStatus::Optimal: return {LPStatus::Optimal, dual.value};
    case LPStatus::Unbounded: return {LPStatus::Infeasible, 0};
  }
  return {LPStatus::Infeasible, 0};
}

bool lp_implies(const std::vector<Inequality>& sys, int dim, const Inequality& target) {
  if (target.normal.isZero()) return target.offset >= 0;
  LPOutcome sup = lp_sup(sys, dim, target.normal);
  if (sup.status == LPStatus::Unbounded) return false;
  if (sup.status == LPStatus::Infeasible)
    throw precondition_error("lp_implies expects a feasible system");
  return sup.value <= target.offset;
}

}  // namespace momentcone
