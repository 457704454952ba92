#include "monotypic/search.hpp"

#include <algorithm>
#include <random>

#include "monotypic/witness.hpp"

namespace monotypic {

namespace {

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

bool genuine_facet(const Polytope& p, Index f) {
  std::vector<RVec> pts;
  for (Index v : p.incidence[static_cast<std::size_t>(f)]) {
    pts.push_back(p.vertices[static_cast<std::size_t>(v)]);
  }
  return affine_rank(pts) == p.dim() - 1;
}

bool parallelogram(const Polytope& facet) {
  if (facet.vertices.size() != 4) return false;
  auto es = edges(facet);
  if (es.size() != 4) return false;
  std::vector<RVec> dirs;
  for (const auto& [a, b] : es) {
    dirs.push_back(facet.vertices[static_cast<std::size_t>(b)] -
                   facet.vertices[static_cast<std::size_t>(a)]);
  }
  for (const auto& d : dirs) {
    int parallel = 0;
    for (const auto& e : dirs) {
      if (d[0] * e[1] == d[1] * e[0]) ++parallel;
    }
    if (parallel != 2) return false;  // itself plus the opposite edge
  }
  return true;
}

// the single-interior-normal shape over a parallelogram facet
bool r3_structure_ok(const Instance& inst) {
  const NormalSet& n = inst.normals;
  std::vector<Index> x;
  try {
    x = find_minimal_conical_set(n);
  } catch (const NotApplicable&) {
    return false;
  }
  auto gens = n.subset(x);
  std::vector<Index> interior;
  for (Index i = 0; i < n.size(); ++i) {
    if (std::find(x.begin(), x.end(), i) != x.end()) continue;
    if (cone_member(gens, n[i])) interior.push_back(i);
  }
  if (interior.size() != 1) return false;
  Polytope p = inst.polytope();
  Embedded facet = slice(p, n[interior[0]], Rat(0));
  return parallelogram(facet.poly);
}

// Candidate for the mono-not-strong target in R^3: two direction pairs whose
// sums are both multiples of a common axis p, so p sits in the hull of the
// four; completed by -p and p itself.
std::optional<NormalSet> structured_candidate(const SearchSpec& spec, std::uint64_t index) {
  auto rng = stream_rng(spec.seed ^ 0x5bf03635u, index);
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<long> entry(-spec.max_coord, spec.max_coord);
  std::uniform_int_distribution<long> mult(1, 3);
  auto draw = [&](std::uniform_int_distribution<long>& dist) {
    RVec v(3);
    do {
      for (Index i = 0; i < 3; ++i) v[i] = Rat(dist(rng));
    } while (v.isZero());
    return RVec(primitive_direction(v));
  };
  RVec p = draw(small);
  RVec a = draw(entry);
  RVec c = draw(entry);
  try {
    RVec b = primitive_direction(Rat(mult(rng)) * p - a);
    RVec d = primitive_direction(Rat(mult(rng)) * p - c);
    NormalSet set(3, {a, b, c, d, p, RVec(-p)});
    if (!set.positively_spans()) return std::nullopt;
    if (!in_conical_position({a, b, c, d})) return std::nullopt;
    return set;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

NormalSet random_normal_set(const SearchSpec& spec, std::uint64_t index) {
  if (spec.dim < 2) throw Error("random_normal_set: dimension must be at least 2");
  if (spec.min_facets < spec.dim + 1) {
    throw Error("random_normal_set: facet count below dim + 1 cannot positively span");
  }
  if (spec.max_facets < spec.min_facets) throw Error("random_normal_set: empty facet range");
  auto rng = stream_rng(spec.seed, index);
  std::uniform_int_distribution<long> count_dist(spec.min_facets, spec.max_facets);
  std::uniform_int_distribution<long> entry(-spec.max_coord, spec.max_coord);
  const Index count = count_dist(rng);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<RVec> dirs;
    int draws = 0;
    while (static_cast<Index>(dirs.size()) < count && ++draws < 1000) {
      RVec v(spec.dim);
      for (Index i = 0; i < spec.dim; ++i) v[i] = Rat(entry(rng));
      if (v.isZero()) continue;
      v = primitive_direction(v);
      bool dup = false;
      for (const auto& d : dirs) dup = dup || d == v;
      if (!dup) dirs.push_back(v);
    }
    if (static_cast<Index>(dirs.size()) < count) continue;
    NormalSet set(spec.dim, dirs);
    if (set.positively_spans()) return set;
  }
  throw Error("random_normal_set: budget exhausted without a positively spanning set");
}

Instance realize(const NormalSet& n, std::uint64_t seed, std::uint64_t index) {
  std::vector<Rat> h(static_cast<std::size_t>(n.size()), Rat(1));
  for (int iter = 0; iter < 200; ++iter) {
    Polytope p = vertex_enumerate(HPoly(n, h));
    Index bad = -1;
    for (Index f = 0; f < n.size() && bad < 0; ++f) {
      if (!genuine_facet(p, f)) bad = f;
    }
    if (bad < 0) return Instance{n, h, seed, index};
    // top two vertex levels along the redundant direction
    Rat top = n[bad].dot(p.vertices.front());
    for (const auto& v : p.vertices) top = std::max(top, Rat(n[bad].dot(v)));
    std::optional<Rat> second;
    for (const auto& v : p.vertices) {
      Rat val = n[bad].dot(v);
      if (val < top && (!second || val > *second)) second = val;
    }
    if (!second) throw InternalError("realize: polytope flat along a direction");
    h[static_cast<std::size_t>(bad)] = (top + *second) / 2;
  }
  throw InternalError("realize: support lowering failed to converge");
}

std::optional<Instance> find_example(const SearchSpec& spec) {
  if (spec.budget < 1) throw Error("find_example: budget must be positive");
  const bool structured = spec.target == MonotypyClass::MonotypicNotStrong && spec.dim == 3;
  for (std::uint64_t idx = 0; idx < spec.budget; ++idx) {
    std::optional<NormalSet> n;
    if (structured) {
      n = structured_candidate(spec, idx);
      if (!n) continue;
    } else {
      n = random_normal_set(spec, idx);
    }
    if (classify(*n).cls != spec.target) continue;
    Instance inst = realize(*n, spec.seed, idx);
    if (structured && !r3_structure_ok(inst)) continue;
    return inst;
  }
  return std::nullopt;
}

}  // namespace monotypic
