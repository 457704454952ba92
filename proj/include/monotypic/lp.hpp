#pragma once

#include <optional>

#include "monotypic/rational.hpp"

namespace monotypic {

// Exact LP feasibility kernel: find x >= 0 with a x = b, via phase-1
// simplex under Bland's rule.  Deterministic given the column order.
std::optional<RVec> solve_nonneg(const RMat& a, const RVec& b);

struct MixedSolution {
  RVec x;  // the sign-constrained block
  RVec f;  // the free block
};

// Find x >= 0 and free f with e x + f_mat f = g.
std::optional<MixedSolution> solve_mixed(const RMat& e, const RMat& f_mat, const RVec& g);

// Find free y with rows(a) y >= rhs componentwise.
std::optional<RVec> solve_ineq_ge(const RMat& a, const RVec& rhs);

}  // namespace monotypic
