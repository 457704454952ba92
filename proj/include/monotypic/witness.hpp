#pragma once

#include <string>

#include "monotypic/criteria.hpp"
#include "monotypic/polytope.hpp"

namespace monotypic {

// Hyperplane section of the minimal conical (n+1)-set and its partition.
struct SectionFrame {
  std::vector<Index> x;  // indices into the ambient normal set
  RVec c;                // cutting hyperplane <c, v> = 1
  std::vector<RVec> y;   // cut points of the rays of x, aligned with x
  std::vector<RVec> z;   // cut points of every ray crossing the hyperplane
  std::vector<Index> z_normals;
  RVec p;                // the single extra point in conv(y)
  Index p_normal = -1;
  std::vector<Index> y0, y1, y2;  // partition, indices into y
};

// Rational SPD form realizing the acute/orthogonal normalizations, plus
// bases of the three pairwise B-orthogonal subspaces of the B-complement
// of p.
struct AcuteFrame {
  SPDForm b;
  RMat r0, r1, r2;  // column bases (r0 may have zero columns)
  RVec x_star;      // coordinates in r0, filled once a slice is available
};

// One slice with its two extracted simplices in subspace coordinates.
struct Sections {
  Embedded f;
  Rat level;        // <p, x> level of the slice, in frame.p units
  Polytope s1, s2;  // coordinates relative to r1 / r2
  RVec x_star;
  std::vector<Rat> h0, h1, h2;  // supports per member of y0 / y1 / y2
};

struct WitnessCheck {
  std::string name;
  bool pass = false;
};

struct WitnessReport {
  SectionFrame frame;
  AcuteFrame acute;
  Rat eps0;
  Sections at0, at_eps0;
  RVec t;
  bool fallback_used = false;
  std::vector<WitnessCheck> checks;
  bool verified = false;
};

// Conical spanning (n+1)-subset with inclusion-minimal positive hull.
std::vector<Index> find_minimal_conical_set(const NormalSet& n);

SectionFrame build_section(const NormalSet& n, const std::vector<Index>& x);

AcuteFrame build_acute_form(const SectionFrame& frame);

// eps0 in units of the primitive facet normal p.
Rat choose_epsilon0(const Polytope& p, const RVec& pdir);

Sections compute_sections(const Polytope& p, const SectionFrame& frame, const AcuteFrame& acute,
                          const Rat& eps);

// t = b - a for the unique extremizers of a generic lexicographic
// functional; S and S+t meet at exactly the vertex b.
RVec choose_translation(const Polytope& s);

WitnessReport construct_witness(const Polytope& p);

bool verify_witness(const Polytope& p, const RVec& t);

}  // namespace monotypic
