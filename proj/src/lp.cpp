#include "monotypic/lp.hpp"

namespace monotypic {

namespace {

// Phase-1 simplex tableau for: x >= 0, a x = b.  Artificials start in the
// basis; Bland's rule (lowest eligible index) guarantees termination.
class Phase1 {
 public:
  Phase1(const RMat& a, const RVec& b)
      : m_(a.rows()), n_(a.cols()), t_(a.rows(), a.cols() + a.rows()), rhs_(a.rows()) {
    t_.leftCols(n_) = a;
    t_.rightCols(m_) = RMat::Identity(m_, m_);
    rhs_ = b;
    for (Index i = 0; i < m_; ++i) {
      if (rhs_[i] < 0) {
        t_.row(i) = -t_.row(i);
        rhs_[i] = -rhs_[i];
      }
    }
    basis_.resize(m_);
    for (Index i = 0; i < m_; ++i) basis_[i] = n_ + i;
    // reduced costs for min(sum of artificials)
    obj_ = RVec::Zero(n_ + m_);
    obj_val_ = 0;
    for (Index i = 0; i < m_; ++i) {
      obj_.head(n_) -= t_.row(i).head(n_).transpose();
      obj_val_ -= rhs_[i];
    }
  }

  std::optional<RVec> run() {
    for (;;) {
      // Artificials never re-enter the basis, so scanning only the original
      // columns keeps the objective monotone and rules out a spurious
      // unbounded ray.
      Index enter = -1;
      for (Index j = 0; j < n_; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;
      Index leave = -1;
      Rat best_ratio;
      for (Index i = 0; i < m_; ++i) {
        if (t_(i, enter) > 0) {
          Rat ratio = rhs_[i] / t_(i, enter);
          if (leave < 0 || ratio < best_ratio ||
              (ratio == best_ratio && basis_[i] < basis_[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) throw InternalError("phase-1 simplex unbounded");
      pivot(leave, enter);
    }
    if (obj_val_ != 0) return std::nullopt;
    // Feasible; artificials may linger in the basis at value zero.
    RVec x = RVec::Zero(n_);
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  void pivot(Index row, Index col) {
    Rat p = t_(row, col);
    t_.row(row) /= p;
    rhs_[row] /= p;
    for (Index i = 0; i < m_; ++i) {
      if (i != row && t_(i, col) != 0) {
        Rat f = t_(i, col);
        t_.row(i) -= f * t_.row(row);
        rhs_[i] -= f * rhs_[row];
      }
    }
    if (obj_[col] != 0) {
      Rat f = obj_[col];
      obj_ -= f * t_.row(row).transpose();
      obj_val_ -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  Index m_, n_;
  RMat t_;
  RVec rhs_;
  RVec obj_;
  Rat obj_val_;
  std::vector<Index> basis_;
};

}  // namespace

std::optional<RVec> solve_nonneg(const RMat& a, const RVec& b) {
  if (a.rows() != b.size()) throw DimMismatch("solve_nonneg: dimension mismatch");
  if (a.cols() == 0) {
    if (b.isZero()) return RVec(0);
    return std::nullopt;
  }
  return Phase1(a, b).run();
}

std::optional<MixedSolution> solve_mixed(const RMat& e, const RMat& f_mat, const RVec& g) {
  if (e.rows() != g.size() || f_mat.rows() != g.size()) {
    throw DimMismatch("solve_mixed: dimension mismatch");
  }
  // split free variables f = f+ - f-
  RMat a(g.size(), e.cols() + 2 * f_mat.cols());
  a.leftCols(e.cols()) = e;
  a.middleCols(e.cols(), f_mat.cols()) = f_mat;
  a.rightCols(f_mat.cols()) = -f_mat;
  auto sol = solve_nonneg(a, g);
  if (!sol) return std::nullopt;
  MixedSolution out;
  out.x = sol->head(e.cols());
  out.f = sol->segment(e.cols(), f_mat.cols()) - sol->tail(f_mat.cols());
  return out;
}

std::optional<RVec> solve_ineq_ge(const RMat& a, const RVec& rhs) {
  if (a.rows() != rhs.size()) throw DimMismatch("solve_ineq_ge: dimension mismatch");
  // a y - s = rhs, s >= 0, y free
  RMat slack = -RMat::Identity(a.rows(), a.rows());
  auto sol = solve_mixed(slack, a, rhs);
  if (!sol) return std::nullopt;
  return sol->f;
}

}  // namespace monotypic
