#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "monotypic/linalg.hpp"
#include "monotypic/lp.hpp"

namespace monotypic {

// Canonicalized finite set of facet directions.  Each direction is stored
// as a primitive integer vector; positive scaling never changes the set.
class NormalSet {
 public:
  NormalSet(Index dim, std::vector<RVec> raw_directions);

  Index dim() const { return dim_; }
  Index size() const { return static_cast<Index>(dirs_.size()); }
  const RVec& operator[](Index i) const { return dirs_[static_cast<std::size_t>(i)]; }
  const std::vector<RVec>& directions() const { return dirs_; }

  std::vector<RVec> subset(const std::vector<Index>& idx) const;
  // index of the direction positively proportional to v, or -1
  Index find(const RVec& v) const;

  bool positively_spans() const;

  bool operator==(const NormalSet& o) const;

 private:
  Index dim_;
  std::vector<RVec> dirs_;
};

struct ConicalCertificate {
  std::vector<Index> subset;   // indices into the ambient NormalSet / list
  RVec separator;              // <separator, v> >= 1 for every member
  std::vector<RVec> witnesses; // per member: y with <y,member> > 0, <y,others> <= 0
};

// lambda >= 0 with sum lambda_i v_i = x, or nullopt.
std::optional<RVec> cone_member(const std::vector<RVec>& v, const RVec& x);

// c with <c,v> >= 1 for all v, or nullopt iff 0 lies in conv(v).
std::optional<RVec> separated_from_origin(const std::vector<RVec>& v);

// Farkas witness for x outside pos(others): y with <y,x> >= 1, <y,o> <= 0.
std::optional<RVec> outside_witness(const std::vector<RVec>& others, const RVec& x);

std::optional<ConicalCertificate> in_conical_position(const std::vector<RVec>& v);

bool validate(const ConicalCertificate& cert, const std::vector<RVec>& v);

bool is_primitive(const std::vector<Index>& subset, const NormalSet& n);

struct RadonPartition {
  std::vector<Index> a1, a2;
  RVec point;  // in conv(a1) and conv(a2)
};

// Points must lie in a common affine hyperplane and number at least
// dim(affine hull) + 2.  Tie-breaking: lexicographically first kernel
// vector of the affine-dependence system; positive part goes to a1.
RadonPartition radon_partition(const std::vector<RVec>& points);

struct ConeCombination {
  std::vector<Index> subset;
  RVec coeffs;  // strictly positive, aligned with subset
};

// Minimal subset v' of v with x in relint pos(v'): linearly independent,
// all coefficients strictly positive.  Subsets enumerated by size, then
// lexicographically, so the result is deterministic.
ConeCombination caratheodory_reduce(const std::vector<RVec>& v, const RVec& x);

struct RayPair {
  std::vector<Index> sub1, sub2;  // indices into v1 / v2
  RVec ray;
};

// Inclusion-minimal subsets whose positive hulls still share a nonzero
// point; the shared set minus the origin is then a single ray in the
// relative interior of both hulls.  Throws Error when the intersection is
// already trivial.
RayPair minimal_ray_pair(const std::vector<RVec>& v1, const std::vector<RVec>& v2);

// True iff pos(v1) and pos(v2) share a nonzero point.
bool cones_intersect_nontrivially(const std::vector<RVec>& v1, const std::vector<RVec>& v2);

// Grows a conical subset y of x (indices) to n+1 members in conical
// position spanning R^n; when keep_empty_hull is set, the grown hull
// contains no further member of x.
std::vector<Index> lift_conical(const NormalSet& x, std::vector<Index> y, bool keep_empty_hull);

// All k-subsets of {0..m-1} in size-lex order, streamed to the callback;
// stop early by returning true.
void for_each_subset(Index m, Index k, const std::function<bool(const std::vector<Index>&)>& f);

}  // namespace monotypic
