#include "monotypic/cone.hpp"

#include <algorithm>

namespace monotypic {

NormalSet::NormalSet(Index dim, std::vector<RVec> raw_directions) : dim_(dim) {
  if (dim < 1) throw Error("NormalSet: dimension must be positive");
  dirs_.reserve(raw_directions.size());
  for (const auto& v : raw_directions) {
    if (v.size() != dim) throw DimMismatch("NormalSet: direction of wrong dimension");
    if (v.isZero()) throw Error("NormalSet: zero direction");
    RVec c = primitive_direction(v);
    for (const auto& prev : dirs_) {
      if (prev == c) throw Error("NormalSet: positively proportional directions");
    }
    dirs_.push_back(std::move(c));
  }
}

std::vector<RVec> NormalSet::subset(const std::vector<Index>& idx) const {
  std::vector<RVec> out;
  out.reserve(idx.size());
  for (Index i : idx) out.push_back(dirs_.at(static_cast<std::size_t>(i)));
  return out;
}

Index NormalSet::find(const RVec& v) const {
  RVec c = primitive_direction(v);
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    if (dirs_[i] == c) return static_cast<Index>(i);
  }
  return -1;
}

bool NormalSet::positively_spans() const {
  // pos(N) = R^n iff pos(N) contains +-e_i for every axis
  for (Index i = 0; i < dim_; ++i) {
    RVec e = RVec::Zero(dim_);
    e[i] = 1;
    if (!cone_member(dirs_, e)) return false;
    e[i] = -1;
    if (!cone_member(dirs_, e)) return false;
  }
  return true;
}

bool NormalSet::operator==(const NormalSet& o) const {
  if (dim_ != o.dim_ || dirs_.size() != o.dirs_.size()) return false;
  std::vector<RVec> a = dirs_, b = o.dirs_;
  std::sort(a.begin(), a.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);
  return a == b;
}

std::optional<RVec> cone_member(const std::vector<RVec>& v, const RVec& x) {
  if (v.empty()) throw Error("cone_member: empty generator list");
  for (const auto& g : v) {
    if (g.size() != x.size()) throw DimMismatch("cone_member: dimension mismatch");
  }
  return solve_nonneg(cols_from(v), x);
}

std::optional<RVec> separated_from_origin(const std::vector<RVec>& v) {
  if (v.empty()) throw Error("separated_from_origin: empty list");
  RMat rows(static_cast<Index>(v.size()), v.front().size());
  for (Index i = 0; i < rows.rows(); ++i) rows.row(i) = v[static_cast<std::size_t>(i)];
  return solve_ineq_ge(rows, RVec::Ones(rows.rows()));
}

std::optional<RVec> outside_witness(const std::vector<RVec>& others, const RVec& x) {
  RMat a(static_cast<Index>(others.size()) + 1, x.size());
  a.row(0) = x;
  for (std::size_t i = 0; i < others.size(); ++i) {
    a.row(static_cast<Index>(i) + 1) = -others[i];
  }
  RVec rhs = RVec::Zero(a.rows());
  rhs[0] = 1;
  return solve_ineq_ge(a, rhs);
}

std::optional<ConicalCertificate> in_conical_position(const std::vector<RVec>& v) {
  if (v.empty()) throw Error("in_conical_position: empty list");
  auto sep = separated_from_origin(v);
  if (!sep) return std::nullopt;
  ConicalCertificate cert;
  cert.separator = *sep;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<RVec> others;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != i) others.push_back(v[j]);
    }
    if (others.empty()) {
      RVec w = v[i] / v[i].dot(v[i]);
      cert.witnesses.push_back(w);
      cert.subset.push_back(static_cast<Index>(i));
      continue;
    }
    if (cone_member(others, v[i])) return std::nullopt;
    auto w = outside_witness(others, v[i]);
    if (!w) throw InternalError("in_conical_position: missing Farkas witness");
    cert.witnesses.push_back(*w);
    cert.subset.push_back(static_cast<Index>(i));
  }
  return cert;
}

bool validate(const ConicalCertificate& cert, const std::vector<RVec>& v) {
  if (cert.subset.size() != v.size() || cert.witnesses.size() != v.size()) return false;
  for (const auto& x : v) {
    if (cert.separator.dot(x) <= 0) return false;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RVec& y = cert.witnesses[i];
    if (y.dot(v[i]) <= 0) return false;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != i && y.dot(v[j]) > 0) return false;
    }
  }
  return true;
}

bool is_primitive(const std::vector<Index>& subset, const NormalSet& n) {
  if (subset.empty()) return false;
  auto vs = n.subset(subset);
  RMat rows(static_cast<Index>(vs.size()), n.dim());
  for (Index i = 0; i < rows.rows(); ++i) rows.row(i) = vs[static_cast<std::size_t>(i)];
  if (rank(rows) != rows.rows()) return false;
  for (Index j = 0; j < n.size(); ++j) {
    if (std::find(subset.begin(), subset.end(), j) != subset.end()) continue;
    if (cone_member(vs, n[j])) return false;
  }
  return true;
}

RadonPartition radon_partition(const std::vector<RVec>& points) {
  if (points.size() < 2) throw Error("radon_partition: too few points");
  const Index d = points.front().size();
  // affine dependence: sum mu_i p_i = 0, sum mu_i = 0, mu != 0
  RMat sys(d + 1, static_cast<Index>(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    sys.col(static_cast<Index>(j)).head(d) = points[j];
    sys(d, static_cast<Index>(j)) = 1;
  }
  RMat ker = kernel_basis(sys);
  if (ker.cols() == 0) throw Error("radon_partition: points affinely independent");
  RVec mu = ker.col(0);  // lexicographically first free-variable vector
  RadonPartition out;
  Rat pos_sum = 0;
  RVec p = RVec::Zero(d);
  for (Index i = 0; i < mu.size(); ++i) {
    if (mu[i] > 0) {
      out.a1.push_back(i);
      pos_sum += mu[i];
      p += mu[i] * points[static_cast<std::size_t>(i)];
    } else if (mu[i] < 0) {
      out.a2.push_back(i);
    } else {
      out.a1.push_back(i);  // zero-coefficient points ride along in a1
    }
  }
  if (pos_sum == 0) throw InternalError("radon_partition: degenerate dependence");
  out.point = p / pos_sum;
  return out;
}

void for_each_subset(Index m, Index k, const std::function<bool(const std::vector<Index>&)>& f) {
  if (k > m || k < 0) return;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (f(idx)) return;
    // next combination in lex order
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

ConeCombination caratheodory_reduce(const std::vector<RVec>& v, const RVec& x) {
  if (!cone_member(v, x)) throw Error("caratheodory_reduce: x not in pos(v)");
  const Index d = x.size();
  if (x.isZero()) return ConeCombination{{}, RVec(0)};
  std::optional<ConeCombination> found;
  for (Index k = 1; k <= std::min<Index>(d, static_cast<Index>(v.size())) && !found; ++k) {
    for_each_subset(static_cast<Index>(v.size()), k, [&](const std::vector<Index>& idx) {
      std::vector<RVec> sub;
      for (Index i : idx) sub.push_back(v[static_cast<std::size_t>(i)]);
      RMat cols = cols_from(sub);
      if (rank(cols) != static_cast<Index>(idx.size())) return false;
      auto coeffs = solve_unique(cols, x);
      if (!coeffs) return false;
      for (Index i = 0; i < coeffs->size(); ++i) {
        if ((*coeffs)[i] <= 0) return false;
      }
      found = ConeCombination{idx, *coeffs};
      return true;
    });
  }
  if (!found) throw InternalError("caratheodory_reduce: no independent positive subset");
  return *found;
}

namespace {

// Nonzero point of pos(v1) /\ pos(v2), when one exists.  A nonzero common
// point has a nonzero coordinate, so the cone intersection is scanned one
// coordinate sign at a time with the level pinned to +-1.
std::optional<RVec> common_cone_point(const std::vector<RVec>& v1, const std::vector<RVec>& v2) {
  if (v1.empty() || v2.empty()) return std::nullopt;
  const Index d = v1.front().size();
  RMat a(d + 1, static_cast<Index>(v1.size() + v2.size()));
  for (std::size_t j = 0; j < v1.size(); ++j) {
    a.col(static_cast<Index>(j)).head(d) = v1[j];
  }
  for (std::size_t j = 0; j < v2.size(); ++j) {
    a.col(static_cast<Index>(v1.size() + j)).head(d) = -v2[j];
  }
  for (Index k = 0; k < d; ++k) {
    for (int sigma : {1, -1}) {
      for (std::size_t j = 0; j < v1.size(); ++j) {
        a(d, static_cast<Index>(j)) = v1[j][k];
      }
      for (std::size_t j = 0; j < v2.size(); ++j) {
        a(d, static_cast<Index>(v1.size() + j)) = 0;
      }
      RVec b = RVec::Zero(d + 1);
      b[d] = sigma;
      auto sol = solve_nonneg(a, b);
      if (!sol) continue;
      RVec point = RVec::Zero(d);
      for (std::size_t j = 0; j < v1.size(); ++j) {
        point += (*sol)[static_cast<Index>(j)] * v1[j];
      }
      return point;
    }
  }
  return std::nullopt;
}

}  // namespace

bool cones_intersect_nontrivially(const std::vector<RVec>& v1, const std::vector<RVec>& v2) {
  return common_cone_point(v1, v2).has_value();
}

RayPair minimal_ray_pair(const std::vector<RVec>& v1, const std::vector<RVec>& v2) {
  if (!cones_intersect_nontrivially(v1, v2)) {
    throw Error("minimal_ray_pair: trivial intersection");
  }
  const Index m1 = static_cast<Index>(v1.size());
  const Index m2 = static_cast<Index>(v2.size());
  std::optional<RayPair> found;
  // pairs ordered by total size, then size of the first part, then lex
  for (Index total = 2; total <= m1 + m2 && !found; ++total) {
    for (Index k1 = std::max<Index>(1, total - m2); k1 <= std::min(m1, total - 1) && !found;
         ++k1) {
      const Index k2 = total - k1;
      for_each_subset(m1, k1, [&](const std::vector<Index>& i1) {
        bool stop = false;
        for_each_subset(m2, k2, [&](const std::vector<Index>& i2) {
          std::vector<RVec> s1, s2;
          for (Index i : i1) s1.push_back(v1[static_cast<std::size_t>(i)]);
          for (Index i : i2) s2.push_back(v2[static_cast<std::size_t>(i)]);
          auto point = common_cone_point(s1, s2);
          if (!point) return false;
          RVec ray = primitive_direction(*point);
          // first hit in size-lex order is inclusion-minimal; check the
          // lemma's postconditions before accepting
          auto c1 = solve_unique(cols_from(s1), ray);
          auto c2 = solve_unique(cols_from(s2), ray);
          if (!c1 || !c2 || (c1->array() <= 0).any() || (c2->array() <= 0).any()) {
            throw InternalError("minimal_ray_pair: ray not in both relative interiors");
          }
          std::vector<RVec> both = s1;
          both.insert(both.end(), s2.begin(), s2.end());
          if (!separated_from_origin(both)) {
            throw InternalError("minimal_ray_pair: union not separated from 0");
          }
          found = RayPair{i1, i2, ray};
          stop = true;
          return true;
        });
        return stop;
      });
    }
  }
  if (!found) throw InternalError("minimal_ray_pair: enumeration found nothing");
  return *found;
}

std::vector<Index> lift_conical(const NormalSet& x, std::vector<Index> y, bool keep_empty_hull) {
  const Index n = x.dim();
  {
    RMat all(x.size(), n);
    for (Index i = 0; i < x.size(); ++i) all.row(i) = x[i];
    if (rank(all) < n) throw Error("lift_conical: directions do not span R^n");
  }
  auto span_rank = [&](const std::vector<Index>& idx) {
    RMat rows(static_cast<Index>(idx.size()), n);
    for (std::size_t i = 0; i < idx.size(); ++i) rows.row(static_cast<Index>(i)) = x[idx[i]];
    return rank(rows);
  };
  auto hull_empty = [&](const std::vector<Index>& idx) {
    auto gens = x.subset(idx);
    for (Index j = 0; j < x.size(); ++j) {
      if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
      if (cone_member(gens, x[j])) return false;
    }
    return true;
  };
  if (keep_empty_hull && !hull_empty(y)) {
    throw Error("lift_conical: seed hull already contains other members");
  }
  while (static_cast<Index>(y.size()) < n + 1) {
    Index r = span_rank(y);
    // Pick the first point outside the current span; adjoining such a point
    // keeps the set conical.  Once the span is full, fall back to the first
    // point that preserves conical position outright.
    Index cand = -1;
    for (Index j = 0; j < x.size(); ++j) {
      if (std::find(y.begin(), y.end(), j) != y.end()) continue;
      std::vector<Index> probe = y;
      probe.push_back(j);
      if (r < n ? span_rank(probe) > r : in_conical_position(x.subset(probe)).has_value()) {
        cand = j;
        break;
      }
    }
    if (cand < 0) throw InternalError("lift_conical: no admissible extension");
    if (keep_empty_hull) {
      // swap the candidate for an interior point until the hull is clean
      for (;;) {
        std::vector<Index> probe = y;
        probe.push_back(cand);
        auto gens = x.subset(probe);
        Index inside = -1;
        for (Index j = 0; j < x.size(); ++j) {
          if (std::find(probe.begin(), probe.end(), j) != probe.end()) continue;
          if (cone_member(gens, x[j])) {
            inside = j;
            break;
          }
        }
        if (inside < 0) break;
        cand = inside;
      }
    }
    y.push_back(cand);
  }
  return y;
}

}  // namespace monotypic
