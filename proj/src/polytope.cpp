#include "monotypic/polytope.hpp"

#include <algorithm>
#include <map>

namespace monotypic {

namespace {

void sort_unique(std::vector<RVec>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

RMat rows_of(const std::vector<RVec>& v, Index cols) {
  RMat m(static_cast<Index>(v.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = v[static_cast<std::size_t>(i)];
  return m;
}

}  // namespace

HPoly::HPoly(NormalSet n, std::vector<Rat> h) : normals(std::move(n)), supports(std::move(h)) {
  if (static_cast<Index>(supports.size()) != normals.size()) {
    throw DimMismatch("HPoly: support count mismatch");
  }
  if (!normals.positively_spans()) throw Unbounded("HPoly: normals do not positively span");
}

HPoly HPoly::from_raw(Index dim, const std::vector<RVec>& dirs, const std::vector<Rat>& h) {
  if (dirs.size() != h.size()) throw DimMismatch("HPoly: support count mismatch");
  std::vector<RVec> canon;
  std::vector<Rat> merged;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i].size() != dim) throw DimMismatch("HPoly: direction dimension mismatch");
    if (dirs[i].isZero()) throw Error("HPoly: zero direction");
    RVec u = primitive_direction(dirs[i]);
    Index j = 0;
    while (u[j] == 0) ++j;
    Rat scale = u[j] / dirs[i][j];  // positive
    Rat hs = scale * h[i];
    bool seen = false;
    for (std::size_t k = 0; k < canon.size(); ++k) {
      if (canon[k] == u) {
        merged[k] = std::min(merged[k], hs);
        seen = true;
        break;
      }
    }
    if (!seen) {
      canon.push_back(u);
      merged.push_back(hs);
    }
  }
  return HPoly(NormalSet(dim, canon), std::move(merged));
}

std::vector<Index> Polytope::active_facets(Index vertex) const {
  std::vector<Index> out;
  for (Index f = 0; f < static_cast<Index>(incidence.size()); ++f) {
    const auto& inc = incidence[static_cast<std::size_t>(f)];
    if (std::binary_search(inc.begin(), inc.end(), vertex)) out.push_back(f);
  }
  return out;
}

RVec Embedded::to_chart(const RVec& x) const {
  auto y = solve_unique(RMat(basis.transpose() * basis), RVec(basis.transpose() * (x - origin)));
  if (!y) throw InternalError("Embedded::to_chart: point off the chart");
  return *y;
}

Index affine_rank(const std::vector<RVec>& pts) {
  if (pts.empty()) return -1;
  RMat d(static_cast<Index>(pts.size()) - 1, pts.front().size());
  for (Index i = 1; i < static_cast<Index>(pts.size()); ++i) {
    d.row(i - 1) = pts[static_cast<std::size_t>(i)] - pts[0];
  }
  return rank(d);
}

Polytope vertex_enumerate(const HPoly& h) {
  const Index n = h.dim(), m = h.size();
  std::vector<RVec> verts;
  for_each_subset(m, n, [&](const std::vector<Index>& idx) {
    RMat a(n, n);
    RVec b(n);
    for (Index i = 0; i < n; ++i) {
      a.row(i) = h.normals[idx[static_cast<std::size_t>(i)]];
      b[i] = h.supports[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    if (rank(a) < n) return false;
    auto x = solve_unique(a, b);
    if (!x) return false;
    for (Index f = 0; f < m; ++f) {
      if (h.normals[f].dot(*x) > h.supports[static_cast<std::size_t>(f)]) return false;
    }
    verts.push_back(*x);
    return false;
  });
  sort_unique(verts);
  if (verts.empty()) throw EmptyPolytope("vertex_enumerate: infeasible system");
  Polytope p{h, std::move(verts), {}, true};
  p.incidence.resize(static_cast<std::size_t>(m));
  for (Index f = 0; f < m; ++f) {
    std::vector<RVec> on;
    for (Index v = 0; v < static_cast<Index>(p.vertices.size()); ++v) {
      if (h.normals[f].dot(p.vertices[static_cast<std::size_t>(v)]) ==
          h.supports[static_cast<std::size_t>(f)]) {
        p.incidence[static_cast<std::size_t>(f)].push_back(v);
        on.push_back(p.vertices[static_cast<std::size_t>(v)]);
      }
    }
    if (affine_rank(on) != n - 1) p.irredundant = false;
  }
  return p;
}

Polytope from_points(Index dim, const std::vector<RVec>& pts) {
  std::vector<RVec> uniq = pts;
  sort_unique(uniq);
  if (uniq.empty()) throw EmptyPolytope("from_points: no points");
  // extreme points: not in the hull of the others
  std::vector<RVec> ext;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    RMat a(dim + 1, static_cast<Index>(uniq.size()) - 1);
    Index c = 0;
    for (std::size_t j = 0; j < uniq.size(); ++j) {
      if (j == i) continue;
      a.col(c).head(dim) = uniq[j];
      a(dim, c) = 1;
      ++c;
    }
    RVec b(dim + 1);
    b.head(dim) = uniq[i];
    b[dim] = 1;
    if (c == 0 || !solve_nonneg(a, b)) ext.push_back(uniq[i]);
  }
  const Index r = affine_rank(ext);
  std::vector<RVec> dirs;
  std::vector<Rat> sup;
  auto add_support = [&](const RVec& u) {
    Rat s = u.dot(ext[0]);
    for (const auto& x : ext) s = std::max(s, Rat(u.dot(x)));
    std::vector<RVec> attain;
    for (const auto& x : ext) {
      if (u.dot(x) == s) attain.push_back(x);
    }
    if (affine_rank(attain) == dim - 1) {
      dirs.push_back(u);
      sup.push_back(s);
    }
  };
  if (r == dim) {
    for_each_subset(static_cast<Index>(ext.size()), dim, [&](const std::vector<Index>& idx) {
      RMat d(dim - 1, dim);
      for (Index i = 1; i < dim; ++i) {
        d.row(i - 1) =
            ext[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] -
            ext[static_cast<std::size_t>(idx[0])];
      }
      if (rank(d) != dim - 1) return false;
      RMat k = kernel_basis(d);
      RVec u = primitive_direction(k.col(0));
      add_support(u);
      add_support(RVec(-u));
      return false;
    });
  } else {
    const RVec& p0 = ext[0];
    // independent spanning differences as chart basis columns
    RMat basis(dim, r);
    {
      Index got = 0;
      std::vector<RVec> chosen;
      for (std::size_t i = 1; i < ext.size() && got < r; ++i) {
        chosen.push_back(ext[i] - p0);
        if (rank(rows_of(chosen, dim)) == got + 1) {
          basis.col(got) = chosen.back();
          ++got;
        } else {
          chosen.pop_back();
        }
      }
      if (got != r) throw InternalError("from_points: chart basis extraction failed");
    }
    if (r > 0) {
      RMat gram = basis.transpose() * basis;
      std::vector<RVec> chart;
      for (const auto& x : ext) {
        auto y = solve_unique(gram, RVec(basis.transpose() * (x - p0)));
        if (!y) throw InternalError("from_points: chart projection failed");
        chart.push_back(*y);
      }
      Polytope sub = from_points(r, chart);
      for (Index f = 0; f < sub.hrep.size(); ++f) {
        auto lift = solve_unique(gram, sub.hrep.normals[f]);
        if (!lift) throw InternalError("from_points: normal lift failed");
        RVec u = basis * *lift;
        dirs.push_back(u);
        sup.push_back(sub.hrep.supports[static_cast<std::size_t>(f)] + u.dot(p0));
      }
    }
    RMat k = kernel_basis(RMat(basis.transpose()));
    for (Index j = 0; j < k.cols(); ++j) {
      RVec w = k.col(j);
      dirs.push_back(w);
      sup.push_back(w.dot(p0));
      dirs.push_back(RVec(-w));
      sup.push_back(-w.dot(p0));
    }
  }
  Polytope out = vertex_enumerate(HPoly::from_raw(dim, dirs, sup));
  std::vector<RVec> check = ext;
  std::sort(check.begin(), check.end(), lex_less);
  if (out.vertices != check) throw InternalError("from_points: hull reconstruction mismatch");
  return out;
}

Rat support(const Polytope& p, const RVec& u) {
  Rat s = u.dot(p.vertices.front());
  for (const auto& v : p.vertices) s = std::max(s, Rat(u.dot(v)));
  return s;
}

FaceRef face_in_direction(const Polytope& p, const RVec& u) {
  Rat s = support(p, u);
  FaceRef f;
  std::vector<RVec> pts;
  for (Index v = 0; v < static_cast<Index>(p.vertices.size()); ++v) {
    if (u.dot(p.vertices[static_cast<std::size_t>(v)]) == s) {
      f.vertices.push_back(v);
      pts.push_back(p.vertices[static_cast<std::size_t>(v)]);
    }
  }
  for (Index facet = 0; facet < p.hrep.size(); ++facet) {
    const auto& inc = p.incidence[static_cast<std::size_t>(facet)];
    if (std::includes(inc.begin(), inc.end(), f.vertices.begin(), f.vertices.end())) {
      f.active.push_back(facet);
    }
  }
  f.dim = affine_rank(pts);
  return f;
}

FaceRef face_of_active(const Polytope& p, const std::vector<Index>& active) {
  FaceRef f;
  f.active = active;
  std::sort(f.active.begin(), f.active.end());
  std::vector<RVec> pts;
  for (Index v = 0; v < static_cast<Index>(p.vertices.size()); ++v) {
    bool on = true;
    for (Index facet : f.active) {
      const auto& inc = p.incidence[static_cast<std::size_t>(facet)];
      if (!std::binary_search(inc.begin(), inc.end(), v)) {
        on = false;
        break;
      }
    }
    if (on) {
      f.vertices.push_back(v);
      pts.push_back(p.vertices[static_cast<std::size_t>(v)]);
    }
  }
  f.dim = affine_rank(pts);
  return f;
}

std::vector<std::pair<Index, Index>> edges(const Polytope& p) {
  std::vector<std::pair<Index, Index>> out;
  const Index nv = static_cast<Index>(p.vertices.size());
  for (Index v = 0; v < nv; ++v) {
    auto av = p.active_facets(v);
    for (Index w = v + 1; w < nv; ++w) {
      auto aw = p.active_facets(w);
      std::vector<Index> common;
      std::set_intersection(av.begin(), av.end(), aw.begin(), aw.end(),
                            std::back_inserter(common));
      auto face = face_of_active(p, common);
      if (face.vertices == std::vector<Index>{v, w}) out.emplace_back(v, w);
    }
  }
  return out;
}

Embedded slice(const Polytope& p, const RVec& pdir, const Rat& eps) {
  if (eps < 0) throw Error("slice: negative depth");
  const Index n = p.dim();
  Rat level = support(p, pdir) - eps;
  RMat prow(1, n);
  prow.row(0) = pdir;
  RMat basis = kernel_basis(prow);  // n x (n-1)
  RVec origin = RVec(pdir) * (level / pdir.dot(pdir));
  std::vector<RVec> dirs;
  std::vector<Rat> sup;
  for (Index f = 0; f < p.hrep.size(); ++f) {
    const RVec& u = p.hrep.normals[f];
    RVec g = basis.transpose() * u;
    Rat c = p.hrep.supports[static_cast<std::size_t>(f)] - u.dot(origin);
    if (g.isZero()) {
      if (c < 0) throw EmptySlice("slice: hyperplane misses the polytope");
      continue;
    }
    dirs.push_back(g);
    sup.push_back(c);
  }
  try {
    Embedded e{vertex_enumerate(HPoly::from_raw(n - 1, dirs, sup)), basis, origin};
    return e;
  } catch (const EmptyPolytope&) {
    throw EmptySlice("slice: hyperplane misses the polytope");
  } catch (const Unbounded&) {
    throw EmptySlice("slice: hyperplane misses the polytope");
  }
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw DimMismatch("minkowski_sum: dimension mismatch");
  std::vector<RVec> sums;
  for (const auto& x : a.vertices) {
    for (const auto& y : b.vertices) sums.push_back(x + y);
  }
  return from_points(a.dim(), sums);
}

std::optional<Polytope> intersect_translate(const Polytope& p, const RVec& t) {
  std::vector<Rat> sup = p.hrep.supports;
  for (Index f = 0; f < p.hrep.size(); ++f) {
    Rat shifted = p.hrep.supports[static_cast<std::size_t>(f)] + p.hrep.normals[f].dot(t);
    sup[static_cast<std::size_t>(f)] = std::min(sup[static_cast<std::size_t>(f)], shifted);
  }
  try {
    return vertex_enumerate(HPoly(p.hrep.normals, std::move(sup)));
  } catch (const EmptyPolytope&) {
    return std::nullopt;
  }
}

namespace {

// Matched vertex of s for each vertex-normal cone of p, via the interior
// direction given by summing active facet normals; nullopt when some face
// fails to be a vertex.
std::optional<std::vector<RVec>> matched_vertices(const Polytope& s, const Polytope& p) {
  std::vector<RVec> out;
  for (Index v = 0; v < static_cast<Index>(p.vertices.size()); ++v) {
    RVec c = RVec::Zero(p.dim());
    for (Index f : p.active_facets(v)) c += p.hrep.normals[f];
    auto face = face_in_direction(s, c);
    if (face.vertices.size() != 1) return std::nullopt;
    out.push_back(s.vertices[static_cast<std::size_t>(face.vertices[0])]);
  }
  return out;
}

// ratio rho with delta = rho * e, or nullopt
std::optional<Rat> parallel_ratio(const RVec& delta, const RVec& e) {
  if (delta.isZero()) return Rat(0);
  Index j = 0;
  while (j < e.size() && e[j] == 0) ++j;
  if (j == e.size()) return std::nullopt;
  Rat rho = delta[j] / e[j];
  if (RVec(rho * e) != delta) return std::nullopt;
  return rho;
}

bool summand_by_decomposition(const Polytope& s, const Polytope& p) {
  std::vector<Rat> sup;
  for (Index f = 0; f < p.hrep.size(); ++f) {
    sup.push_back(p.hrep.supports[static_cast<std::size_t>(f)] - support(s, p.hrep.normals[f]));
  }
  try {
    Polytope l = vertex_enumerate(HPoly(p.hrep.normals, std::move(sup)));
    return poly_equal(minkowski_sum(s, l), p);
  } catch (const EmptyPolytope&) {
    return false;
  }
}

}  // namespace

SummandReport is_summand(const Polytope& s, const Polytope& p) {
  if (s.dim() != p.dim()) throw DimMismatch("is_summand: dimension mismatch");
  SummandReport rep;
  auto matched = matched_vertices(s, p);
  if (matched) {
    rep.is_summand = true;
    for (auto [v, w] : edges(p)) {
      RVec sv = (*matched)[static_cast<std::size_t>(v)];
      RVec sw = (*matched)[static_cast<std::size_t>(w)];
      RVec e = p.vertices[static_cast<std::size_t>(w)] - p.vertices[static_cast<std::size_t>(v)];
      auto rho = parallel_ratio(RVec(sw - sv), e);
      if (rho && *rho >= 0 && *rho <= 1) {
        rep.edge_table.push_back({v, w, sv, sw, *rho});
      } else {
        rep.is_summand = false;
        if (!rep.failure_edge) rep.failure_edge = {v, w};
      }
    }
  }
  if (rep.is_summand != summand_by_decomposition(s, p)) {
    throw InternalError("is_summand: edge criterion disagrees with decomposition oracle");
  }
  return rep;
}

std::optional<Rat> is_homothet_of_summand(const Polytope& k, const Polytope& p) {
  if (k.dim() != p.dim()) throw DimMismatch("is_homothet_of_summand: dimension mismatch");
  auto matched = matched_vertices(k, p);
  if (!matched) return std::nullopt;
  Rat lambda = 0;
  for (auto [v, w] : edges(p)) {
    RVec delta = (*matched)[static_cast<std::size_t>(w)] - (*matched)[static_cast<std::size_t>(v)];
    RVec e = p.vertices[static_cast<std::size_t>(w)] - p.vertices[static_cast<std::size_t>(v)];
    auto rho = parallel_ratio(delta, e);
    if (!rho || *rho < 0) return std::nullopt;
    lambda = std::max(lambda, *rho);
  }
  if (lambda == 0) return Rat(1);  // k is a point; scale is immaterial
  std::vector<RVec> scaled;
  for (const auto& x : k.vertices) scaled.push_back(x / lambda);
  if (!is_summand(from_points(k.dim(), scaled), p).is_summand) {
    throw InternalError("is_homothet_of_summand: rescaled candidate failed verification");
  }
  return lambda;
}

bool poly_equal(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw DimMismatch("poly_equal: dimension mismatch");
  return p.vertices == q.vertices;  // both sorted on construction
}

namespace {

std::vector<std::vector<RVec>> incidence_signatures(const Polytope& p) {
  std::vector<Index> genuine;
  for (Index f = 0; f < p.hrep.size(); ++f) {
    std::vector<RVec> pts;
    for (Index v : p.incidence[static_cast<std::size_t>(f)]) {
      pts.push_back(p.vertices[static_cast<std::size_t>(v)]);
    }
    if (affine_rank(pts) == p.dim() - 1) genuine.push_back(f);
  }
  std::vector<std::vector<RVec>> sigs;
  for (Index v = 0; v < static_cast<Index>(p.vertices.size()); ++v) {
    std::vector<RVec> sig;
    for (Index f : genuine) {
      const auto& inc = p.incidence[static_cast<std::size_t>(f)];
      if (std::binary_search(inc.begin(), inc.end(), v)) sig.push_back(p.hrep.normals[f]);
    }
    std::sort(sig.begin(), sig.end(), lex_less);
    sigs.push_back(std::move(sig));
  }
  std::sort(sigs.begin(), sigs.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
  });
  return sigs;
}

std::vector<RVec> genuine_normals(const Polytope& p) {
  std::vector<RVec> out;
  for (Index f = 0; f < p.hrep.size(); ++f) {
    std::vector<RVec> pts;
    for (Index v : p.incidence[static_cast<std::size_t>(f)]) {
      pts.push_back(p.vertices[static_cast<std::size_t>(v)]);
    }
    if (affine_rank(pts) == p.dim() - 1) out.push_back(p.hrep.normals[f]);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

bool combinatorially_equivalent(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw DimMismatch("combinatorially_equivalent: dimension mismatch");
  if (genuine_normals(p) != genuine_normals(q)) {
    throw NormalSetMismatch("combinatorially_equivalent: normal sets differ");
  }
  // facets matched by their normals; vertices have pairwise distinct active
  // sets, so signature multiset equality yields the incidence bijection
  return incidence_signatures(p) == incidence_signatures(q);
}

bool verify_M4(const Polytope& p, const std::vector<Index>& u) {
  if (!is_primitive(u, p.hrep.normals)) throw NotPrimitive("verify_M4: subset not primitive");
  auto face = face_of_active(p, u);
  return face.dim == p.dim() - static_cast<Index>(u.size());
}

}  // namespace monotypic
