#pragma once

#include <optional>
#include <utility>

#include "monotypic/cone.hpp"

namespace monotypic {

// H-representation over a canonical normal set; supports aligned with it.
struct HPoly {
  NormalSet normals;
  std::vector<Rat> supports;

  HPoly(NormalSet n, std::vector<Rat> h);

  // Canonicalizes raw directions, rescaling supports to match; constraints
  // sharing a direction are merged by minimum support.
  static HPoly from_raw(Index dim, const std::vector<RVec>& dirs, const std::vector<Rat>& h);

  Index dim() const { return normals.dim(); }
  Index size() const { return normals.size(); }
};

struct Polytope {
  HPoly hrep;
  std::vector<RVec> vertices;
  std::vector<std::vector<Index>> incidence;  // per facet, sorted vertex indices
  bool irredundant = false;

  Index dim() const { return hrep.dim(); }
  std::vector<Index> active_facets(Index vertex) const;
};

struct FaceRef {
  std::vector<Index> active;    // facet indices
  Index dim = -1;               // affine dimension; -1 for the empty face
  std::vector<Index> vertices;  // indices into the polytope's vertex list
};

struct SummandReport {
  struct Entry {
    Index v, w;   // edge of the container
    RVec sv, sw;  // matched vertices of the candidate
    Rat ratio;
  };
  bool is_summand = false;
  std::vector<Entry> edge_table;
  std::optional<std::pair<Index, Index>> failure_edge;
};

// Lower-dimensional polytope with an explicit rational chart of its
// affine hull: ambient point = origin + basis * chart_coords.
struct Embedded {
  Polytope poly;  // in chart coordinates
  RMat basis;     // n x k, independent columns
  RVec origin;

  RVec to_ambient(const RVec& y) const { return origin + basis * y; }
  RVec to_chart(const RVec& x) const;
};

Polytope vertex_enumerate(const HPoly& h);

// Convex hull of a point list (any affine dimension).
Polytope from_points(Index dim, const std::vector<RVec>& pts);

Rat support(const Polytope& p, const RVec& u);

FaceRef face_in_direction(const Polytope& p, const RVec& u);

// Face determined by an explicit facet index set.
FaceRef face_of_active(const Polytope& p, const std::vector<Index>& active);

// Vertex pairs forming 1-faces.
std::vector<std::pair<Index, Index>> edges(const Polytope& p);

Index affine_rank(const std::vector<RVec>& pts);

// Cross-section at <pdir, x> = support(p, pdir) - eps, in a rational chart
// of the hyperplane.  eps = 0 gives the facet itself.
Embedded slice(const Polytope& p, const RVec& pdir, const Rat& eps);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);

std::optional<Polytope> intersect_translate(const Polytope& p, const RVec& t);

// Edge criterion, cross-checked against the constructive decomposition
// L = {x : <u,x> <= h_P(u) - h_S(u)}; disagreement is an internal error.
SummandReport is_summand(const Polytope& s, const Polytope& p);

std::optional<Rat> is_homothet_of_summand(const Polytope& k, const Polytope& p);

bool poly_equal(const Polytope& p, const Polytope& q);

bool combinatorially_equivalent(const Polytope& p, const Polytope& q);

// Facets indexed by u meet in a face of dimension exactly dim - |u|.
bool verify_M4(const Polytope& p, const std::vector<Index>& u);

}  // namespace monotypic
