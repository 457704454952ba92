#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "monotypic/io.hpp"
#include "monotypic/search.hpp"

using namespace monotypic;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

Polytope load_polytope(const InstanceFile& f) { return vertex_enumerate(f.hpoly()); }

// index of the first direction whose attainers do not span the facet, or -1
Index redundant_direction(const Polytope& p) {
  for (Index f = 0; f < p.hrep.size(); ++f) {
    std::vector<RVec> pts;
    for (Index v : p.incidence[static_cast<std::size_t>(f)]) {
      pts.push_back(p.vertices[static_cast<std::size_t>(v)]);
    }
    if (affine_rank(pts) != p.dim() - 1) return f;
  }
  return -1;
}

void print_verdict(const Verdict& v) {
  std::cout << "  " << to_string(v.condition) << ": " << (v.holds ? "holds" : "fails");
  if (const auto* d = std::get_if<DViolation>(&v.certificate)) {
    std::cout << "  (conical subset:";
    for (Index i : d->subset) std::cout << " " << i;
    std::cout << ")";
  } else if (const auto* dd = std::get_if<DDViolation>(&v.certificate)) {
    std::cout << "  (conical subset:";
    for (Index i : dd->subset) std::cout << " " << i;
    std::cout << ")";
  } else if (const auto* m = std::get_if<M3Violation>(&v.certificate)) {
    std::cout << "  (shared ray " << rvec_str(m->point) << ")";
  } else if (const auto* s = std::get_if<S4Violation>(&v.certificate)) {
    std::cout << "  (positively spanning subset of size " << s->subset.size() << ")";
  }
  std::cout << "\n";
}

int cmd_analyze(const std::string& path, bool full, const std::string& json_out, Index cap) {
  const std::string raw = slurp(path);
  InstanceFile f = instance_from_json(json::parse(raw));
  NormalSet n = f.normal_set();
  ReportFile rep;
  rep.input_digest = digest(raw);
  rep.classification = classify(n);
  std::cout << "class: " << to_string(rep.classification.cls) << "\n";
  print_verdict(rep.classification.d);
  print_verdict(rep.classification.dd);
  if (full) {
    rep.extra_verdicts.push_back(check_M3prime(n));
    print_verdict(rep.extra_verdicts.back());
    try {
      rep.extra_verdicts.push_back(check_S4prime(n, cap));
      print_verdict(rep.extra_verdicts.back());
    } catch (const CapExceeded& e) {
      std::cout << "  S4': skipped (" << e.what() << ")\n";
    }
  }
  if (!json_out.empty()) write_json(json_out, report_to_json(rep));
  return 0;
}

void export_scene(const std::string& dir, const Polytope& p, const RVec& t, int precision) {
  std::filesystem::create_directories(dir);
  auto dump = [&](const std::string& name, const Polytope& q) {
    std::ofstream os(dir + "/" + name);
    if (!os) throw Error("cannot write " + dir + "/" + name);
    write_off(os, q, precision);
  };
  dump("P.off", p);
  Polytope shifted = p;
  for (auto& v : shifted.vertices) v += t;
  for (Index f = 0; f < shifted.hrep.size(); ++f) {
    shifted.hrep.supports[static_cast<std::size_t>(f)] += shifted.hrep.normals[f].dot(t);
  }
  dump("Pt.off", shifted);
  auto cap = intersect_translate(p, t);
  if (cap) dump("cap.off", *cap);
}

int cmd_witness(const std::string& path, const std::string& json_out, const std::string& export_dir,
                int precision) {
  const std::string raw = slurp(path);
  InstanceFile f = instance_from_json(json::parse(raw));
  Polytope p = load_polytope(f);
  Index bad = redundant_direction(p);
  if (bad >= 0) {
    std::cerr << "error: direction " << bad << " " << rvec_str(p.hrep.normals[bad])
              << " is not a facet of the instance\n";
    return 1;
  }
  ReportFile rep;
  rep.input_digest = digest(raw);
  rep.classification = classify(p.hrep.normals);
  std::cout << "class: " << to_string(rep.classification.cls) << "\n";
  if (rep.classification.cls != MonotypyClass::MonotypicNotStrong) {
    std::cout << "witness: not applicable\n";
    if (!json_out.empty()) write_json(json_out, report_to_json(rep));
    return 0;
  }
  WitnessReport w = construct_witness(p);
  std::cout << "translation t = " << rvec_str(w.t) << "\n";
  std::cout << "eps0 = " << rat_str(w.eps0) << (w.fallback_used ? "  (fallback path)" : "")
            << "\n";
  for (const auto& c : w.checks) {
    std::cout << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
  }
  std::cout << "verified: " << (w.verified ? "true" : "false") << "\n";
  rep.witness = witness_to_json(w);
  if (!json_out.empty()) write_json(json_out, report_to_json(rep));
  if (!export_dir.empty() && p.dim() == 3) export_scene(export_dir, p, w.t, precision);
  return 0;
}

int cmd_summand(const std::string& path_s, const std::string& path_p) {
  Polytope s = load_polytope(instance_from_json(json::parse(slurp(path_s))));
  Polytope p = load_polytope(instance_from_json(json::parse(slurp(path_p))));
  if (s.dim() != p.dim()) throw DimMismatch("summand: instances have different dimensions");
  SummandReport rep = is_summand(s, p);
  std::cout << "summand: " << (rep.is_summand ? "true" : "false") << "\n";
  for (const auto& e : rep.edge_table) {
    std::cout << "  edge (" << e.v << "," << e.w << ")  ratio " << rat_str(e.ratio) << "\n";
  }
  if (rep.failure_edge) {
    std::cout << "  failing edge (" << rep.failure_edge->first << ","
              << rep.failure_edge->second << ")\n";
  }
  return 0;
}

int cmd_search(Index dim, Index min_facets, Index max_facets, const std::string& cls,
               std::uint64_t seed, std::uint64_t budget, const std::string& out) {
  SearchSpec spec;
  spec.dim = dim;
  spec.min_facets = min_facets;
  spec.max_facets = max_facets;
  spec.seed = seed;
  spec.budget = budget;
  if (cls == "strongly-monotypic") {
    spec.target = MonotypyClass::StronglyMonotypic;
  } else if (cls == "monotypic-not-strong" || cls == "mono-not-strong") {
    spec.target = MonotypyClass::MonotypicNotStrong;
  } else if (cls == "not-monotypic") {
    spec.target = MonotypyClass::NotMonotypic;
  } else {
    throw Error("unknown class " + cls);
  }
  auto inst = find_example(spec);
  if (!inst) {
    std::cout << "found: 0\n";
    return 0;
  }
  std::cout << "found: 1  (index " << inst->index << ")\n";
  InstanceFile f;
  f.dimension = spec.dim;
  for (Index i = 0; i < inst->normals.size(); ++i) f.normals.push_back(inst->normals[i]);
  f.supports = inst->supports;
  if (!out.empty()) {
    save_instance(f, out);
    std::cout << "written: " << out << "\n";
  } else {
    std::cout << instance_to_json(f).dump(2) << "\n";
  }
  return 0;
}

int cmd_export(const std::string& path, const std::string& dir, int precision) {
  Polytope p = load_polytope(instance_from_json(json::parse(slurp(path))));
  std::filesystem::create_directories(dir);
  std::ofstream os(dir + "/P.off");
  if (!os) throw Error("cannot write " + dir + "/P.off");
  write_off(os, p, precision);
  std::cout << "written: " << dir << "/P.off\n";
  return 0;
}

int cmd_selftest() {
  std::vector<RVec> dirs = {make_vec({1, 1, 1}),  make_vec({-1, -1, 1}), make_vec({1, -1, 1}),
                            make_vec({-1, 1, 1}), make_vec({0, 0, 1}),   make_vec({0, 0, -1})};
  std::vector<Rat> h = {1, 1, 1, 1, rat(1, 2), 1};
  Polytope p = vertex_enumerate(HPoly::from_raw(3, dirs, h));
  if (classify(p.hrep.normals).cls != MonotypyClass::MonotypicNotStrong) {
    throw InternalError("selftest: built-in instance misclassified");
  }
  WitnessReport w = construct_witness(p);
  for (const auto& c : w.checks) {
    if (!c.pass) throw InternalError("selftest: check failed: " + c.name);
  }
  if (!w.verified || !verify_witness(p, w.t)) {
    throw InternalError("selftest: witness failed to verify");
  }
  NormalSet n = p.hrep.normals;
  if (load_verdict(verdict_to_json(check_condition_DD(n)), n).holds) {
    throw InternalError("selftest: DD round trip changed the verdict");
  }
  std::cout << "selftest: ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monotypy analysis for polytope normal sets"};
  app.require_subcommand(1);

  std::string path, path_p, json_out, export_dir, cls = "monotypic-not-strong", out;
  bool full = false;
  int precision = 9;
  Index cap = kDefaultSizeCap, dim = 3, min_facets = 5, max_facets = 8;
  std::uint64_t seed = 0, budget = 1000;

  auto* analyze = app.add_subcommand("analyze", "classify a normal set");
  analyze->add_option("instance", path)->required();
  analyze->add_flag("--full", full, "also run the M3'/S4' cross-checks");
  analyze->add_option("--json", json_out, "write the report to this path");
  analyze->add_option("--cap", cap, "S4' subset size cap");

  auto* witness = app.add_subcommand("witness", "construct a non-summand translate");
  witness->add_option("instance", path)->required();
  witness->add_option("--json", json_out);
  witness->add_option("--export", export_dir, "write OFF scenes to this directory");
  witness->add_option("--precision", precision, "OFF decimal digits");

  auto* summand = app.add_subcommand("summand", "test Minkowski summand");
  summand->add_option("candidate", path)->required();
  summand->add_option("container", path_p)->required();

  auto* search = app.add_subcommand("search", "mine instances by class");
  search->add_option("--dim", dim);
  search->add_option("--min-facets", min_facets);
  search->add_option("--max-facets", max_facets);
  search->add_option("--class", cls, "target class");
  search->add_option("--seed", seed);
  search->add_option("--budget", budget);
  search->add_option("--json", out, "write the found instance to this path");

  auto* exp = app.add_subcommand("export", "write an OFF scene of an instance");
  exp->add_option("instance", path)->required();
  exp->add_option("--export", export_dir)->required();
  exp->add_option("--precision", precision);

  auto* selftest = app.add_subcommand("selftest", "run the built-in battery");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(path, full, json_out, cap);
    if (witness->parsed()) return cmd_witness(path, json_out, export_dir, precision);
    if (summand->parsed()) return cmd_summand(path, path_p);
    if (search->parsed()) {
      return cmd_search(dim, min_facets, max_facets, cls, seed, budget, out);
    }
    if (exp->parsed()) return cmd_export(path, export_dir, precision);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
