#include <random>

#include "doctest.h"
#include "monotypic/criteria.hpp"

using namespace monotypic;

namespace {

std::vector<RVec> axes(Index n) {
  std::vector<RVec> out;
  for (Index i = 0; i < n; ++i) {
    RVec e = RVec::Zero(n);
    e[i] = 1;
    out.push_back(e);
    out.push_back(RVec(-e));
  }
  return out;
}

NormalSet cross3() { return NormalSet(3, axes(3)); }

NormalSet cross3_plus_corner() {
  auto dirs = axes(3);
  dirs.push_back(make_vec({1, 1, 1}));
  return NormalSet(3, dirs);
}

// four upward corner directions plus the vertical pair; D holds, DD fails
NormalSet mono_not_strong() {
  return NormalSet(3, {make_vec({1, 1, 1}), make_vec({-1, -1, 1}), make_vec({1, -1, 1}),
                       make_vec({-1, 1, 1}), make_vec({0, 0, 1}), make_vec({0, 0, -1})});
}

NormalSet random_spanning_set(std::mt19937_64& rng, Index n, Index target) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    std::vector<RVec> dirs;
    int attempts = 0;
    while (static_cast<Index>(dirs.size()) < target && ++attempts < 200) {
      RVec v(n);
      for (Index i = 0; i < n; ++i) v[i] = Rat(entry(rng));
      if (v.isZero()) continue;
      v = primitive_direction(v);
      bool dup = false;
      for (const auto& d : dirs) {
        if (d == v) dup = true;
      }
      if (!dup) dirs.push_back(v);
    }
    if (static_cast<Index>(dirs.size()) < target) continue;
    NormalSet set(n, dirs);
    if (set.positively_spans()) return set;
  }
}

bool revalidate(const DViolation& v, const NormalSet& n) {
  auto gens = n.subset(v.subset);
  if (!validate(v.conical, gens)) return false;
  if (v.others.size() != v.outside_witnesses.size()) return false;
  for (std::size_t k = 0; k < v.others.size(); ++k) {
    const RVec& y = v.outside_witnesses[k];
    if (y.dot(n[v.others[k]]) < 1) return false;
    for (const auto& g : gens) {
      if (y.dot(g) > 0) return false;
    }
    if (cone_member(gens, n[v.others[k]])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("condition D on the coordinate cross") {
  auto v = check_condition_D(cross3());
  CHECK(v.holds);
  CHECK(std::get<Holds>(v.certificate).subsets_examined == 15);  // C(6,4)
}

TEST_CASE("condition D fails once a corner direction is added") {
  auto n = cross3_plus_corner();
  auto v = check_condition_D(n);
  REQUIRE(!v.holds);
  const auto& viol = std::get<DViolation>(v.certificate);
  // e1, e2, -e3, (1,1,1): first violating subset in size-lex order
  CHECK(viol.subset == std::vector<Index>{0, 2, 5, 6});
  CHECK(revalidate(viol, n));
}

TEST_CASE("condition D holds for a pentagon") {
  NormalSet pent(2, {make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, 1}), make_vec({-1, -1}),
                     make_vec({1, -1})});
  CHECK(check_condition_D(pent).holds);
}

TEST_CASE("condition D rejects non-spanning input") {
  NormalSet flat(2, {make_vec({1, 0}), make_vec({0, 1})});
  CHECK_THROWS_AS(check_condition_D(flat), NotPolytopal);
}

TEST_CASE("condition DD examples") {
  CHECK(check_condition_DD(cross3()).holds);

  NormalSet tri(2, {make_vec({-1, 0}), make_vec({0, -1}), make_vec({1, 1})});
  CHECK(check_condition_DD(tri).holds);

  auto n = mono_not_strong();
  auto v = check_condition_DD(n);
  REQUIRE(!v.holds);
  const auto& viol = std::get<DDViolation>(v.certificate);
  CHECK(viol.subset == std::vector<Index>{0, 1, 2, 3});
  CHECK(validate(viol.conical, n.subset(viol.subset)));
}

TEST_CASE("condition M3' examples") {
  NormalSet cross2(2, axes(2));
  CHECK(check_M3prime(cross2).holds);

  auto n = cross3_plus_corner();
  auto v = check_M3prime(n);
  REQUIRE(!v.holds);
  const auto& viol = std::get<M3Violation>(v.certificate);
  CHECK(is_primitive(viol.v1, n));
  CHECK(is_primitive(viol.v2, n));
  for (Index i : viol.v1) {
    CHECK(std::find(viol.v2.begin(), viol.v2.end(), i) == viol.v2.end());
  }
  CHECK(!viol.point.isZero());
  CHECK(cone_member(n.subset(viol.v1), viol.point));
  CHECK(cone_member(n.subset(viol.v2), viol.point));

  NormalSet flat(2, {make_vec({1, 0}), make_vec({0, 1})});
  CHECK_THROWS_AS(check_M3prime(flat), NotPolytopal);
}

TEST_CASE("condition S4' examples") {
  NormalSet cross2(2, axes(2));
  CHECK(check_S4prime(cross2).holds);

  auto dirs = axes(3);
  dirs.push_back(make_vec({1, 1, 1}));
  dirs.push_back(make_vec({-1, -1, -1}));
  NormalSet n(3, dirs);
  auto v = check_S4prime(n);
  REQUIRE(!v.holds);
  const auto& viol = std::get<S4Violation>(v.certificate);
  NormalSet sub(3, n.subset(viol.subset));
  CHECK(sub.positively_spans());
  CHECK(revalidate(viol.inner, sub));
}

TEST_CASE("condition S4' enforces the size cap") {
  std::vector<RVec> dirs;
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) dirs.push_back(make_vec({i, j, 1}));
  }
  NormalSet n(3, dirs);
  REQUIRE(n.size() == 25);
  CHECK_THROWS_AS(check_S4prime(n, 20), CapExceeded);
}

TEST_CASE("classify examples") {
  auto a = classify(cross3());
  CHECK(a.cls == MonotypyClass::StronglyMonotypic);
  CHECK(a.d.holds);
  CHECK(a.dd.holds);

  auto b = classify(cross3_plus_corner());
  CHECK(b.cls == MonotypyClass::NotMonotypic);
  CHECK(!b.d.holds);

  auto c = classify(mono_not_strong());
  CHECK(c.cls == MonotypyClass::MonotypicNotStrong);
  CHECK(c.d.holds);
  CHECK(!c.dd.holds);
}

TEST_CASE("D is equivalent to M3' on fuzzed sets") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Index n = 2 + (trial % 2);
    Index target = n + 2 + (trial % 3);
    auto set = random_spanning_set(rng, n, target);
    CHECK(check_condition_D(set).holds == check_M3prime(set).holds);
  }
  for (int trial = 0; trial < 4; ++trial) {
    auto set = random_spanning_set(rng, 4, 7);
    CHECK(check_condition_D(set).holds == check_M3prime(set).holds);
  }
}

TEST_CASE("DD is equivalent to S4' on fuzzed sets") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    Index n = 2 + (trial % 2);
    Index target = n + 2 + (trial % 3);
    auto set = random_spanning_set(rng, n, target);
    auto dd = check_condition_DD(set);
    CHECK(dd.holds == check_S4prime(set).holds);
    if (dd.holds) CHECK(check_condition_D(set).holds);
  }
}

TEST_CASE("verdicts are invariant under positive rescaling") {
  auto base = cross3_plus_corner();
  std::vector<RVec> scaled;
  int k = 2;
  for (const auto& d : base.directions()) {
    scaled.push_back(RVec(d * rat(k, 3)));
    ++k;
  }
  NormalSet n(3, scaled);
  CHECK(n == base);
  CHECK(check_condition_D(n).holds == check_condition_D(base).holds);
  CHECK(check_condition_DD(n).holds == check_condition_DD(base).holds);
  CHECK(check_M3prime(n).holds == check_M3prime(base).holds);
}
