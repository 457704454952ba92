#include "monotypic/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <cmath>

namespace monotypic {

namespace {

using nlohmann::json;

json vec_json(const RVec& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(rat_str(v[i]));
  return a;
}

RVec vec_from(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw ParseError(field + ": expected a nonempty array");
  RVec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(field + ": entries must be rational strings");
    v[static_cast<Index>(i)] = parse_rat(j[i].get<std::string>());
  }
  return v;
}

json vecs_json(const std::vector<RVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

std::vector<RVec> vecs_from(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array");
  std::vector<RVec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(vec_from(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json mat_json(const RMat& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i).transpose()));
  return rows;
}

json idx_json(const std::vector<Index>& idx) {
  json a = json::array();
  for (Index i : idx) a.push_back(i);
  return a;
}

std::vector<Index> idx_from(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an index array");
  std::vector<Index> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError(field + ": entries must be integers");
    out.push_back(e.get<Index>());
  }
  return out;
}

json conical_json(const ConicalCertificate& c) {
  return json{{"subset", idx_json(c.subset)},
              {"separator", vec_json(c.separator)},
              {"witnesses", vecs_json(c.witnesses)}};
}

ConicalCertificate conical_from(const json& j) {
  return ConicalCertificate{idx_from(j.at("subset"), "conical.subset"),
                            vec_from(j.at("separator"), "conical.separator"),
                            vecs_from(j.at("witnesses"), "conical.witnesses")};
}

json d_violation_json(const DViolation& v) {
  return json{{"type", "D_violation"},
              {"subset", idx_json(v.subset)},
              {"conical", conical_json(v.conical)},
              {"others", idx_json(v.others)},
              {"outside_witnesses", vecs_json(v.outside_witnesses)}};
}

DViolation d_violation_from(const json& j) {
  return DViolation{idx_from(j.at("subset"), "subset"), conical_from(j.at("conical")),
                    idx_from(j.at("others"), "others"),
                    vecs_from(j.at("outside_witnesses"), "outside_witnesses")};
}

json certificate_json(const Certificate& c) {
  if (const auto* h = std::get_if<Holds>(&c)) {
    return json{{"type", "holds"},
                {"subsets_examined", h->subsets_examined},
                {"pairs_examined", h->pairs_examined}};
  }
  if (const auto* d = std::get_if<DViolation>(&c)) return d_violation_json(*d);
  if (const auto* dd = std::get_if<DDViolation>(&c)) {
    return json{{"type", "DD_violation"},
                {"subset", idx_json(dd->subset)},
                {"conical", conical_json(dd->conical)}};
  }
  if (const auto* m = std::get_if<M3Violation>(&c)) {
    return json{{"type", "M3_violation"},
                {"v1", idx_json(m->v1)},
                {"v2", idx_json(m->v2)},
                {"point", vec_json(m->point)}};
  }
  const auto& s = std::get<S4Violation>(c);
  return json{{"type", "S4_violation"},
              {"subset", idx_json(s.subset)},
              {"inner", d_violation_json(s.inner)}};
}

Certificate certificate_from(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "holds") {
    Holds h;
    h.subsets_examined = j.at("subsets_examined").get<unsigned long long>();
    h.pairs_examined = j.at("pairs_examined").get<unsigned long long>();
    return h;
  }
  if (type == "D_violation") return d_violation_from(j);
  if (type == "DD_violation") {
    return DDViolation{idx_from(j.at("subset"), "subset"), conical_from(j.at("conical"))};
  }
  if (type == "M3_violation") {
    return M3Violation{idx_from(j.at("v1"), "v1"), idx_from(j.at("v2"), "v2"),
                       vec_from(j.at("point"), "point")};
  }
  if (type == "S4_violation") {
    return S4Violation{idx_from(j.at("subset"), "subset"), d_violation_from(j.at("inner"))};
  }
  throw ParseError("certificate: unknown type " + type);
}

Condition condition_from(const std::string& s) {
  if (s == "D") return Condition::D;
  if (s == "DD") return Condition::DD;
  if (s == "M3'") return Condition::M3prime;
  if (s == "S4'") return Condition::S4prime;
  throw ParseError("condition: unknown value " + s);
}

void check_indices(const std::vector<Index>& idx, Index bound, const std::string& field) {
  for (Index i : idx) {
    if (i < 0 || i >= bound) throw ParseError(field + ": index out of range");
  }
}

void revalidate(const Verdict& v, const NormalSet& n) {
  if (const auto* d = std::get_if<DViolation>(&v.certificate)) {
    check_indices(d->subset, n.size(), "subset");
    check_indices(d->others, n.size(), "others");
    if (!validate(d->conical, n.subset(d->subset))) {
      throw ParseError("certificate: conical certificate fails to validate");
    }
    if (d->others.size() != d->outside_witnesses.size()) {
      throw ParseError("certificate: witness count mismatch");
    }
    auto gens = n.subset(d->subset);
    for (std::size_t i = 0; i < d->others.size(); ++i) {
      const RVec& y = d->outside_witnesses[i];
      if (y.dot(n[d->others[i]]) < 1) throw ParseError("certificate: outside witness too weak");
      for (const auto& g : gens) {
        if (y.dot(g) > 0) throw ParseError("certificate: outside witness not separating");
      }
    }
  } else if (const auto* dd = std::get_if<DDViolation>(&v.certificate)) {
    check_indices(dd->subset, n.size(), "subset");
    if (!validate(dd->conical, n.subset(dd->subset))) {
      throw ParseError("certificate: conical certificate fails to validate");
    }
  } else if (const auto* m = std::get_if<M3Violation>(&v.certificate)) {
    check_indices(m->v1, n.size(), "v1");
    check_indices(m->v2, n.size(), "v2");
    if (m->point.isZero() || !cone_member(n.subset(m->v1), m->point) ||
        !cone_member(n.subset(m->v2), m->point)) {
      throw ParseError("certificate: shared point fails cone membership");
    }
  } else if (const auto* s = std::get_if<S4Violation>(&v.certificate)) {
    check_indices(s->subset, n.size(), "subset");
    NormalSet sub(n.dim(), n.subset(s->subset));
    revalidate(Verdict{Condition::D, false, s->inner}, sub);
  }
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

NormalSet InstanceFile::normal_set() const { return NormalSet(dimension, normals); }

HPoly InstanceFile::hpoly() const {
  if (!supports) throw ParseError("instance: supports required but missing");
  return HPoly::from_raw(dimension, normals, *supports);
}

InstanceFile instance_from_json(const nlohmann::json& j) {
  InstanceFile f;
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  if (!j.contains("dimension") || !j.at("dimension").is_number_integer()) {
    throw ParseError("dimension: missing or not an integer");
  }
  f.dimension = j.at("dimension").get<Index>();
  if (f.dimension < 1) throw ParseError("dimension: must be positive");
  if (!j.contains("normals")) throw ParseError("normals: missing");
  f.normals = vecs_from(j.at("normals"), "normals");
  for (std::size_t i = 0; i < f.normals.size(); ++i) {
    if (f.normals[i].size() != f.dimension) {
      throw ParseError("normals[" + std::to_string(i) + "]: wrong dimension");
    }
  }
  if (j.contains("supports") && !j.at("supports").is_null()) {
    const auto& s = j.at("supports");
    if (!s.is_array() || s.size() != f.normals.size()) {
      throw ParseError("supports: length must match normals");
    }
    std::vector<Rat> h;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].is_string()) throw ParseError("supports: entries must be rational strings");
      h.push_back(parse_rat(s[i].get<std::string>()));
    }
    f.supports = std::move(h);
  }
  return f;
}

nlohmann::json instance_to_json(const InstanceFile& f) {
  json j{{"dimension", f.dimension}, {"normals", vecs_json(f.normals)}};
  if (f.supports) {
    json s = json::array();
    for (const auto& h : *f.supports) s.push_back(rat_str(h));
    j["supports"] = s;
  }
  return j;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const InstanceFile& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << instance_to_json(f).dump(2) << "\n";
}

nlohmann::json verdict_to_json(const Verdict& v) {
  return json{{"condition", to_string(v.condition)},
              {"holds", v.holds},
              {"certificate", certificate_json(v.certificate)}};
}

Verdict verdict_from_json(const nlohmann::json& j) {
  return Verdict{condition_from(j.at("condition").get<std::string>()),
                 j.at("holds").get<bool>(), certificate_from(j.at("certificate"))};
}

Verdict load_verdict(const nlohmann::json& j, const NormalSet& n) {
  Verdict v = verdict_from_json(j);
  revalidate(v, n);
  return v;
}

nlohmann::json report_to_json(const ReportFile& r) {
  json j{{"tool_version", r.tool_version},
         {"input_digest", r.input_digest},
         {"class", to_string(r.classification.cls)},
         {"verdicts", json{{"D", verdict_to_json(r.classification.d)},
                           {"DD", verdict_to_json(r.classification.dd)}}}};
  if (!r.extra_verdicts.empty()) {
    json extra = json::array();
    for (const auto& v : r.extra_verdicts) extra.push_back(verdict_to_json(v));
    j["cross_checks"] = extra;
  }
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

nlohmann::json witness_to_json(const WitnessReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
  json simplices{{"s1_at_0", vecs_json(r.at0.s1.vertices)},
                 {"s2_at_0", vecs_json(r.at0.s2.vertices)},
                 {"s1_at_eps0", vecs_json(r.at_eps0.s1.vertices)},
                 {"s2_at_eps0", vecs_json(r.at_eps0.s2.vertices)}};
  return json{{"frame",
               json{{"x", idx_json(r.frame.x)},
                    {"separator", vec_json(r.frame.c)},
                    {"y", vecs_json(r.frame.y)},
                    {"p", vec_json(r.frame.p)},
                    {"p_normal", r.frame.p_normal},
                    {"y0", idx_json(r.frame.y0)},
                    {"y1", idx_json(r.frame.y1)},
                    {"y2", idx_json(r.frame.y2)}}},
              {"form", mat_json(r.acute.b.m)},
              {"eps0", rat_str(r.eps0)},
              {"simplices", simplices},
              {"t", vec_json(r.t)},
              {"fallback_used", r.fallback_used},
              {"checks", checks},
              {"verified", r.verified}};
}

std::string digest(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  return std::string(buf);
}

void write_off(std::ostream& os, const Polytope& p, int precision) {
  if (p.dim() != 3) throw DimMismatch("write_off: only 3-polytopes are exported");
  const auto es = edges(p);
  // only genuine facets; redundant directions of a merged H-rep are dropped
  std::vector<Index> facets;
  for (Index f = 0; f < p.hrep.size(); ++f) {
    std::vector<RVec> pts;
    for (Index vi : p.incidence[static_cast<std::size_t>(f)]) {
      pts.push_back(p.vertices[static_cast<std::size_t>(vi)]);
    }
    if (affine_rank(pts) == 2) facets.push_back(f);
  }
  os << "OFF\n";
  os << "# decimal approximation, exact values live in the JSON report\n";
  os << p.vertices.size() << " " << facets.size() << " " << es.size() << "\n";
  os << std::setprecision(precision);
  for (const auto& v : p.vertices) {
    os << v[0].get_d() << " " << v[1].get_d() << " " << v[2].get_d() << "\n";
  }
  for (Index f : facets) {
    const auto& inc = p.incidence[static_cast<std::size_t>(f)];
    const RVec& u = p.hrep.normals[f];
    // cyclic order in the facet plane, counterclockwise seen from outside
    RMat urow(1, 3);
    urow.row(0) = u;
    RMat basis = kernel_basis(urow);
    RVec b1 = basis.col(0), b2 = basis.col(1);
    RVec cr(3);
    cr << b1[1] * b2[2] - b1[2] * b2[1], b1[2] * b2[0] - b1[0] * b2[2],
        b1[0] * b2[1] - b1[1] * b2[0];
    if (cr.dot(u) < 0) std::swap(b1, b2);
    RVec center = RVec::Zero(3);
    for (Index vi : inc) center += p.vertices[static_cast<std::size_t>(vi)];
    center /= Rat(static_cast<long>(inc.size()));
    std::vector<std::pair<double, Index>> order;
    for (Index vi : inc) {
      RVec d = p.vertices[static_cast<std::size_t>(vi)] - center;
      order.emplace_back(std::atan2(Rat(b2.dot(d)).get_d(), Rat(b1.dot(d)).get_d()), vi);
    }
    std::sort(order.begin(), order.end());
    os << order.size();
    for (const auto& [ang, vi] : order) os << " " << vi;
    os << "\n";
  }
}

std::string rvec_str(const RVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

}  // namespace monotypic
