#include <sstream>

#include "doctest.h"
#include "monotypic/io.hpp"

using namespace monotypic;
using nlohmann::json;

namespace {

json cube_instance() {
  return json{{"dimension", 3},
              {"normals",
               {{"1", "0", "0"},
                {"-1", "0", "0"},
                {"0", "1", "0"},
                {"0", "-1", "0"},
                {"0", "0", "1"},
                {"0", "0", "-1"}}},
              {"supports", {"1", "1", "1", "1", "1", "1"}}};
}

NormalSet cross_plus_corner() {
  std::vector<RVec> dirs;
  for (Index i = 0; i < 3; ++i) {
    RVec e = RVec::Zero(3);
    e[i] = 1;
    dirs.push_back(e);
    dirs.push_back(RVec(-e));
  }
  dirs.push_back(make_vec({1, 1, 1}));
  return NormalSet(3, dirs);
}

}  // namespace

TEST_CASE("instance round trip") {
  InstanceFile f = instance_from_json(cube_instance());
  CHECK(f.dimension == 3);
  CHECK(f.normals.size() == 6);
  REQUIRE(f.supports.has_value());
  CHECK((*f.supports)[0] == 1);
  InstanceFile g = instance_from_json(instance_to_json(f));
  CHECK(g.normals == f.normals);
  CHECK(*g.supports == *f.supports);
  CHECK(g.normal_set() == f.normal_set());
}

TEST_CASE("instance without supports") {
  json j = cube_instance();
  j.erase("supports");
  InstanceFile f = instance_from_json(j);
  CHECK(!f.supports.has_value());
  CHECK_THROWS_AS(f.hpoly(), ParseError);
}

TEST_CASE("malformed instances are rejected with field names") {
  json j = cube_instance();
  j["supports"][2] = "1/0";
  CHECK_THROWS_WITH_AS(instance_from_json(j), doctest::Contains("1/0"), ParseError);

  j = cube_instance();
  j["normals"][0][1] = "abc";
  CHECK_THROWS_AS(instance_from_json(j), ParseError);

  j = cube_instance();
  j.erase("dimension");
  CHECK_THROWS_WITH_AS(instance_from_json(j), doctest::Contains("dimension"), ParseError);

  j = cube_instance();
  j["supports"] = {"1", "1"};
  CHECK_THROWS_WITH_AS(instance_from_json(j), doctest::Contains("supports"), ParseError);
}

TEST_CASE("verdict round trip re-validates certificates") {
  NormalSet n = cross_plus_corner();
  Verdict d = check_condition_D(n);
  CHECK(!d.holds);
  json j = verdict_to_json(d);
  Verdict back = load_verdict(j, n);
  CHECK(back.condition == Condition::D);
  CHECK(back.holds == d.holds);
  CHECK(std::get<DViolation>(back.certificate).subset ==
        std::get<DViolation>(d.certificate).subset);

  // tampering with the separator breaks re-validation
  json bad = j;
  bad["certificate"]["conical"]["separator"][0] = "-100";
  CHECK_THROWS_AS(load_verdict(bad, n), ParseError);
}

TEST_CASE("M3 and holds certificates round trip") {
  NormalSet n = cross_plus_corner();
  Verdict m3 = check_M3prime(n);
  Verdict back = load_verdict(verdict_to_json(m3), n);
  CHECK(back.holds == m3.holds);
  CHECK(std::get<M3Violation>(back.certificate).point ==
        std::get<M3Violation>(m3.certificate).point);

  std::vector<RVec> square = {make_vec({1, 0}), make_vec({-1, 0}), make_vec({0, 1}),
                              make_vec({0, -1})};
  NormalSet sq(2, square);
  Verdict holds = check_condition_D(sq);
  CHECK(holds.holds);
  Verdict hback = load_verdict(verdict_to_json(holds), sq);
  CHECK(std::get<Holds>(hback.certificate).subsets_examined ==
        std::get<Holds>(holds.certificate).subsets_examined);
}

TEST_CASE("report serialization carries class and digest") {
  NormalSet n = cross_plus_corner();
  ReportFile r;
  r.input_digest = digest("sample");
  r.classification = classify(n);
  json j = report_to_json(r);
  CHECK(j["class"] == "not-monotypic");
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(load_verdict(j["verdicts"]["D"], n).holds == r.classification.d.holds);
}

TEST_CASE("digest is stable and input sensitive") {
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
  CHECK(digest("").size() == 16);
}

TEST_CASE("off export of the cube") {
  InstanceFile f = instance_from_json(cube_instance());
  Polytope p = vertex_enumerate(f.hpoly());
  std::ostringstream os;
  write_off(os, p, 6);
  std::istringstream in(os.str());
  std::string header, comment;
  std::getline(in, header);
  std::getline(in, comment);
  CHECK(header == "OFF");
  int nv = 0, nf = 0, ne = 0;
  in >> nv >> nf >> ne;
  CHECK(nv == 8);
  CHECK(nf == 6);
  CHECK(ne == 12);
  for (int i = 0; i < nv; ++i) {
    double x = 0, y = 0, z = 0;
    in >> x >> y >> z;
    CHECK(std::abs(x) == 1);
    CHECK(std::abs(y) == 1);
    CHECK(std::abs(z) == 1);
  }
  for (int i = 0; i < nf; ++i) {
    int k = 0;
    in >> k;
    CHECK(k == 4);
    for (int j = 0; j < k; ++j) {
      int vi = -1;
      in >> vi;
      CHECK(vi >= 0);
      CHECK(vi < nv);
    }
  }
  CHECK(in.good());
}

TEST_CASE("off export rejects other dimensions") {
  Polytope sq = from_points(2, {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1}),
                                make_vec({1, 1})});
  std::ostringstream os;
  CHECK_THROWS_AS(write_off(os, sq, 6), DimMismatch);
}
