#include "monotypic/linalg.hpp"

#include <Eigen/LU>

namespace monotypic {

Rref rref(const RMat& m) {
  Rref r;
  r.mat = m;
  const Index rows = m.rows(), cols = m.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index piv = -1;
    for (Index i = row; i < rows; ++i) {
      if (r.mat(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) r.mat.row(piv).swap(r.mat.row(row));
    r.mat.row(row) /= r.mat(row, col);
    for (Index i = 0; i < rows; ++i) {
      if (i != row && r.mat(i, col) != 0) {
        r.mat.row(i) -= r.mat(i, col) * r.mat.row(row);
      }
    }
    r.pivot_cols.push_back(col);
    ++row;
  }
  return r;
}

Index rank(const RMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).rank();
}

RMat kernel_basis(const RMat& m) {
  const Index cols = m.cols();
  Rref r = rref(m);
  std::vector<Index> free_cols;
  {
    std::size_t pi = 0;
    for (Index c = 0; c < cols; ++c) {
      if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  RMat k = RMat::Zero(cols, static_cast<Index>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const Index fc = free_cols[j];
    k(fc, static_cast<Index>(j)) = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      k(r.pivot_cols[i], static_cast<Index>(j)) = -r.mat(static_cast<Index>(i), fc);
    }
  }
  return k;
}

std::optional<RVec> solve_unique(const RMat& a, const RVec& b) {
  if (a.rows() != b.size()) throw DimMismatch("solve_unique: dimension mismatch");
  RMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  Rref r = rref(aug);
  // inconsistent iff the augmented column is a pivot
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;
  if (r.rank() < a.cols()) throw Error("solve_unique: dependent columns");
  RVec x(a.cols());
  for (Index i = 0; i < a.cols(); ++i) x[i] = r.mat(i, a.cols());
  return x;
}

SPDForm SPDForm::identity(Index n) { return SPDForm{RMat::Identity(n, n)}; }

bool SPDForm::valid() const {
  if (m.rows() != m.cols()) return false;
  if (m != RMat(m.transpose())) return false;
  for (Index k = 1; k <= m.rows(); ++k) {
    RMat lead = m.topLeftCorner(k, k);
    if (lead.fullPivLu().determinant() <= 0) return false;
  }
  return true;
}

Rat SPDForm::operator()(const RVec& x, const RVec& y) const {
  if (x.size() != m.rows() || y.size() != m.rows()) {
    throw DimMismatch("SPDForm: dimension mismatch");
  }
  return x.dot(m * y);
}

RVec project_B(const RVec& x, const RMat& s, const SPDForm& b) {
  if (s.cols() != x.size()) throw DimMismatch("project_B: dimension mismatch");
  if (rank(s) < s.rows()) throw Error("project_B: dependent basis rows");
  // Gram system: (S B S^T) a = S B x, projection = S^T a.
  RMat gram = s * b.m * s.transpose();
  RVec rhs = s * (b.m * x);
  auto a = solve_unique(gram, rhs);
  if (!a) throw InternalError("project_B: singular Gram matrix");
  return s.transpose() * *a;
}

}  // namespace monotypic
