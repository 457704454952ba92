#include <algorithm>

#include "doctest.h"
#include "monotypic/witness.hpp"

using namespace monotypic;

namespace {

std::vector<RVec> mono_dirs() {
  return {make_vec({1, 1, 1}),  make_vec({-1, -1, 1}), make_vec({1, -1, 1}),
          make_vec({-1, 1, 1}), make_vec({0, 0, 1}),   make_vec({0, 0, -1})};
}

// four upward corner directions plus the vertical pair; monotypic, not strongly
Polytope mono_fixture() {
  std::vector<Rat> h = {1, 1, 1, 1, rat(1, 2), 1};
  return vertex_enumerate(HPoly::from_raw(3, mono_dirs(), h));
}

Polytope cube3() {
  std::vector<RVec> dirs;
  std::vector<Rat> h;
  for (Index i = 0; i < 3; ++i) {
    RVec e = RVec::Zero(3);
    e[i] = 1;
    dirs.push_back(e);
    dirs.push_back(RVec(-e));
    h.push_back(1);
    h.push_back(1);
  }
  return vertex_enumerate(HPoly::from_raw(3, dirs, h));
}

// shear x -> x, y -> x + y applied to every direction
std::vector<RVec> sheared_dirs() {
  RMat m(3, 3);
  m << 1, 0, 0, 1, 1, 0, 0, 0, 1;
  std::vector<RVec> out;
  for (const auto& d : mono_dirs()) out.push_back(m * d);
  return out;
}

bool same_parts(const std::vector<Index>& a, std::vector<Index> want) {
  std::vector<Index> got = a;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

}  // namespace

TEST_CASE("minimal conical set of the fixture is the corner quadruple") {
  Polytope p = mono_fixture();
  auto x = find_minimal_conical_set(p.hrep.normals);
  CHECK(x == std::vector<Index>{0, 1, 2, 3});
}

TEST_CASE("strongly monotypic sets have no conical subset") {
  Polytope c = cube3();
  CHECK_THROWS_AS(find_minimal_conical_set(c.hrep.normals), NotApplicable);
}

TEST_CASE("section of the fixture splits into the two diagonals") {
  Polytope p = mono_fixture();
  auto frame = build_section(p.hrep.normals, find_minimal_conical_set(p.hrep.normals));
  CHECK(primitive_direction(frame.p) == make_vec({0, 0, 1}));
  CHECK(frame.p_normal == 4);
  CHECK(frame.y0.empty());
  CHECK(frame.y1.size() == 2);
  CHECK(frame.y2.size() == 2);
  // opposite corners pair up
  bool split_ok = (same_parts(frame.y1, {0, 1}) && same_parts(frame.y2, {2, 3})) ||
                  (same_parts(frame.y1, {2, 3}) && same_parts(frame.y2, {0, 1}));
  CHECK(split_ok);
  for (const auto& y : frame.y) CHECK(frame.c.dot(y) == 1);
}

TEST_CASE("acute form on the fixture is the identity") {
  Polytope p = mono_fixture();
  auto frame = build_section(p.hrep.normals, find_minimal_conical_set(p.hrep.normals));
  auto acute = build_acute_form(frame);
  CHECK(acute.b.m == RMat(RMat::Identity(3, 3)));
  CHECK(acute.r0.cols() == 0);
  CHECK(acute.r1.cols() == 1);
  CHECK(acute.r2.cols() == 1);
}

TEST_CASE("acute form on a sheared fixture stays valid") {
  NormalSet n(3, sheared_dirs());
  auto frame = build_section(n, find_minimal_conical_set(n));
  auto acute = build_acute_form(frame);
  CHECK(acute.b.valid());
  for (const auto& y : frame.y) CHECK(acute.b(y, frame.p) > 0);
  CHECK(acute.r0.cols() == 0);
  CHECK(acute.r1.cols() == 1);
  CHECK(acute.r2.cols() == 1);
}

TEST_CASE("slice depth selection") {
  CHECK(choose_epsilon0(mono_fixture(), make_vec({0, 0, 1})) == rat(3, 4));
  CHECK(choose_epsilon0(cube3(), make_vec({0, 0, 1})) == 1);
  // cube with one corner cut off: the gap shrinks to the cut depth
  std::vector<RVec> dirs;
  std::vector<Rat> h;
  for (Index i = 0; i < 3; ++i) {
    RVec e = RVec::Zero(3);
    e[i] = 1;
    dirs.push_back(e);
    dirs.push_back(RVec(-e));
    h.push_back(1);
    h.push_back(1);
  }
  dirs.push_back(make_vec({1, 1, 1}));
  h.push_back(2);
  Polytope cut = vertex_enumerate(HPoly::from_raw(3, dirs, h));
  CHECK(choose_epsilon0(cut, make_vec({0, 0, 1})) == rat(1, 2));
}

TEST_CASE("sections of the fixture are nested segments") {
  Polytope p = mono_fixture();
  auto frame = build_section(p.hrep.normals, find_minimal_conical_set(p.hrep.normals));
  auto acute = build_acute_form(frame);
  auto at0 = compute_sections(p, frame, acute, Rat(0));
  auto at1 = compute_sections(p, frame, acute, rat(3, 4));
  CHECK(at0.level == rat(1, 2));
  CHECK(at1.level == rat(-1, 4));
  for (const auto* s : {&at0.s1, &at0.s2, &at1.s1, &at1.s2}) {
    CHECK(s->vertices.size() == 2);
  }
  CHECK(at0.h1.size() == 2);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(at0.h1[j] < at1.h1[j]);
    CHECK(at0.h2[j] < at1.h2[j]);
  }
}

TEST_CASE("translation picks the extreme vertex pair") {
  Polytope seg = from_points(1, {make_vec_r({Rat(0)}), make_vec_r({Rat(1)})});
  CHECK(choose_translation(seg) == make_vec({1}));
  Polytope tri = from_points(2, {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})});
  CHECK(choose_translation(tri) == make_vec({0, 1}));
  Polytope pt = from_points(2, {make_vec({1, 1})});
  CHECK_THROWS_AS(choose_translation(pt), ZeroDimensional);
}

TEST_CASE("witness construction succeeds on the fixture") {
  Polytope p = mono_fixture();
  auto rep = construct_witness(p);
  CHECK(rep.verified);
  CHECK(!rep.fallback_used);
  CHECK(rep.eps0 == rat(3, 4));
  CHECK(!rep.t.isZero());
  CHECK(rep.frame.p.dot(rep.t) == 0);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  CHECK(verify_witness(p, rep.t));
}

TEST_CASE("witness construction succeeds on the sheared fixture") {
  std::vector<Rat> h = {1, 1, 1, 1, rat(1, 2), 1};
  Polytope p = vertex_enumerate(HPoly::from_raw(3, sheared_dirs(), h));
  auto rep = construct_witness(p);
  CHECK(rep.verified);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("witness construction rejects strongly monotypic input") {
  CHECK_THROWS_AS(construct_witness(cube3()), NotApplicable);
}

TEST_CASE("no translate of a cube certifies anything") {
  Polytope c = cube3();
  CHECK(!verify_witness(c, make_vec_r({rat(1, 2), Rat(0), Rat(0)})));
  CHECK(!verify_witness(c, make_vec({3, 0, 0})));
  CHECK(!verify_witness(c, make_vec({0, 0, 0})));
}
