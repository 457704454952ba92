#pragma once

#include <cstdint>
#include <optional>

#include "monotypic/criteria.hpp"
#include "monotypic/polytope.hpp"

namespace monotypic {

struct SearchSpec {
  Index dim = 3;
  Index min_facets = 5;
  Index max_facets = 8;
  MonotypyClass target = MonotypyClass::MonotypicNotStrong;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1;
  long max_coord = 5;
};

// A realized polytope instance: all directions are genuine facets.
struct Instance {
  NormalSet normals;
  std::vector<Rat> supports;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  Polytope polytope() const { return vertex_enumerate(HPoly(normals, supports)); }
};

// Deterministic in (spec.seed, index); small-integer primitive directions,
// positively spanning, pairwise non-proportional.
NormalSet random_normal_set(const SearchSpec& spec, std::uint64_t index);

// Supports start at all ones; any non-facet direction is lowered halfway
// between its top two vertex levels until every direction is a facet.
Instance realize(const NormalSet& n, std::uint64_t seed, std::uint64_t index);

// First instance in the stream whose class matches spec.target; for the
// mono-not-strong target in R^3 the single-interior-normal structure with a
// parallelogram facet is validated too.
std::optional<Instance> find_example(const SearchSpec& spec);

}  // namespace monotypic
