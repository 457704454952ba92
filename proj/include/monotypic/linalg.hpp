#pragma once

#include <optional>

#include "monotypic/rational.hpp"

namespace monotypic {

// Reduced row echelon form with deterministic pivoting (first nonzero
// entry in each column, scanning top to bottom).
struct Rref {
  RMat mat;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

Rref rref(const RMat& m);

Index rank(const RMat& m);

// Basis of {x : m x = 0}, one column per free variable, in column order.
// The column for the first free variable comes first, which is what makes
// "lexicographically first kernel vector" well defined downstream.
RMat kernel_basis(const RMat& m);

// Unique solution of a x = b for a with full column rank; nullopt when
// inconsistent, throws when the columns are dependent.
std::optional<RVec> solve_unique(const RMat& a, const RVec& b);

// Symmetric positive definite bilinear form, kept exact.
struct SPDForm {
  RMat m;

  static SPDForm identity(Index n);
  bool valid() const;  // symmetry + leading principal minors > 0
  Rat operator()(const RVec& x, const RVec& y) const;
  RVec apply(const RVec& x) const { return m * x; }
  Index dim() const { return m.rows(); }
};

// B-orthogonal projection of x onto the row span of s: the unique point
// p in span(s) with B(x - p, row) = 0 for every row of s.
RVec project_B(const RVec& x, const RMat& s, const SPDForm& b);

}  // namespace monotypic
