#include "monotypic/criteria.hpp"

#include <algorithm>
#include <map>

namespace monotypic {

namespace {

void require_polytopal(const NormalSet& n) {
  if (!n.positively_spans()) {
    throw NotPolytopal("normal set does not positively span R^n");
  }
}

}  // namespace

Verdict check_condition_D(const NormalSet& n) {
  require_polytopal(n);
  const Index k = n.dim() + 1;
  Holds tally;
  std::optional<DViolation> bad;
  if (n.size() >= k) {
    for_each_subset(n.size(), k, [&](const std::vector<Index>& idx) {
      ++tally.subsets_examined;
      auto gens = n.subset(idx);
      auto conical = in_conical_position(gens);
      if (!conical) return false;
      for (Index j = 0; j < n.size(); ++j) {
        if (std::binary_search(idx.begin(), idx.end(), j)) continue;
        if (cone_member(gens, n[j])) return false;
      }
      DViolation v;
      v.subset = idx;
      v.conical = *conical;
      for (Index j = 0; j < n.size(); ++j) {
        if (std::binary_search(idx.begin(), idx.end(), j)) continue;
        auto w = outside_witness(gens, n[j]);
        if (!w) throw InternalError("check_condition_D: missing Farkas witness");
        v.others.push_back(j);
        v.outside_witnesses.push_back(*w);
      }
      bad = std::move(v);
      return true;
    });
  }
  if (bad) return {Condition::D, false, std::move(*bad)};
  return {Condition::D, true, tally};
}

Verdict check_condition_DD(const NormalSet& n) {
  require_polytopal(n);
  const Index k = n.dim() + 1;
  Holds tally;
  std::optional<DDViolation> bad;
  if (n.size() >= k) {
    for_each_subset(n.size(), k, [&](const std::vector<Index>& idx) {
      ++tally.subsets_examined;
      auto conical = in_conical_position(n.subset(idx));
      if (!conical) return false;
      bad = DDViolation{idx, *conical};
      return true;
    });
  }
  if (bad) return {Condition::DD, false, std::move(*bad)};
  return {Condition::DD, true, tally};
}

Verdict check_M3prime(const NormalSet& n) {
  require_polytopal(n);
  const Index m = n.size();
  Holds tally;
  std::optional<M3Violation> bad;
  // Primitive subsets are linearly independent, so sizes beyond dim are moot.
  const Index max_k = std::min(m, n.dim());
  for (Index k1 = 1; k1 <= max_k && !bad; ++k1) {
    for_each_subset(m, k1, [&](const std::vector<Index>& i1) {
      if (!is_primitive(i1, n)) return false;
      auto v1 = n.subset(i1);
      std::vector<Index> rest;
      for (Index j = 0; j < m; ++j) {
        if (!std::binary_search(i1.begin(), i1.end(), j)) rest.push_back(j);
      }
      for (Index k2 = 1; k2 <= std::min(static_cast<Index>(rest.size()), max_k); ++k2) {
        for_each_subset(static_cast<Index>(rest.size()), k2,
                        [&](const std::vector<Index>& pos) {
                          std::vector<Index> i2;
                          for (Index p : pos) i2.push_back(rest[static_cast<std::size_t>(p)]);
                          if (!is_primitive(i2, n)) return false;
                          ++tally.pairs_examined;
                          auto v2 = n.subset(i2);
                          if (!cones_intersect_nontrivially(v1, v2)) return false;
                          auto rp = minimal_ray_pair(v1, v2);
                          bad = M3Violation{i1, i2, rp.ray};
                          return true;
                        });
        if (bad) break;
      }
      return bad.has_value();
    });
  }
  if (bad) return {Condition::M3prime, false, std::move(*bad)};
  return {Condition::M3prime, true, tally};
}

Verdict check_S4prime(const NormalSet& n, Index size_cap) {
  if (n.size() > size_cap) throw CapExceeded("check_S4prime: normal set exceeds size cap");
  require_polytopal(n);
  const Index dim = n.dim();
  Holds tally;
  // The same (dim+1)-subsets recur across the sweep; memoize by global index.
  std::map<std::vector<Index>, bool> conical_cache;
  auto conical = [&](const std::vector<Index>& g) {
    auto it = conical_cache.find(g);
    if (it == conical_cache.end()) {
      it = conical_cache.emplace(g, in_conical_position(n.subset(g)).has_value()).first;
    }
    return it->second;
  };
  std::map<std::pair<std::vector<Index>, Index>, bool> member_cache;
  auto member = [&](const std::vector<Index>& g, Index j) {
    auto key = std::make_pair(g, j);
    auto it = member_cache.find(key);
    if (it == member_cache.end()) {
      it = member_cache.emplace(key, cone_member(n.subset(g), n[j]).has_value()).first;
    }
    return it->second;
  };
  std::optional<S4Violation> bad;
  for (Index sz = dim + 1; sz <= n.size() && !bad; ++sz) {
    for_each_subset(n.size(), sz, [&](const std::vector<Index>& msub) {
      NormalSet sub(dim, n.subset(msub));
      if (!sub.positively_spans()) return false;
      ++tally.subsets_examined;
      bool violated = false;
      for_each_subset(sz, dim + 1, [&](const std::vector<Index>& loc) {
        std::vector<Index> glob;
        for (Index l : loc) glob.push_back(msub[static_cast<std::size_t>(l)]);
        if (!conical(glob)) return false;
        for (Index l = 0; l < sz; ++l) {
          if (std::binary_search(loc.begin(), loc.end(), l)) continue;
          if (member(glob, msub[static_cast<std::size_t>(l)])) return false;
        }
        violated = true;
        return true;
      });
      if (!violated) return false;
      auto inner = check_condition_D(sub);
      if (inner.holds) throw InternalError("check_S4prime: sweep disagreed with D check");
      bad = S4Violation{msub, std::get<DViolation>(std::move(inner.certificate))};
      return true;
    });
  }
  if (bad) return {Condition::S4prime, false, std::move(*bad)};
  return {Condition::S4prime, true, tally};
}

Classification classify(const NormalSet& n) {
  Classification c;
  c.dd = check_condition_DD(n);
  c.d = check_condition_D(n);
  if (!c.d.holds) {
    c.cls = MonotypyClass::NotMonotypic;
  } else if (!c.dd.holds) {
    c.cls = MonotypyClass::MonotypicNotStrong;
  } else {
    c.cls = MonotypyClass::StronglyMonotypic;
  }
  return c;
}

const char* to_string(MonotypyClass c) {
  switch (c) {
    case MonotypyClass::NotMonotypic: return "not-monotypic";
    case MonotypyClass::MonotypicNotStrong: return "monotypic-not-strong";
    case MonotypyClass::StronglyMonotypic: return "strongly-monotypic";
  }
  return "?";
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::D: return "D";
    case Condition::DD: return "DD";
    case Condition::M3prime: return "M3'";
    case Condition::S4prime: return "S4'";
  }
  return "?";
}

}  // namespace monotypic
