#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "monotypic/criteria.hpp"
#include "monotypic/polytope.hpp"
#include "monotypic/witness.hpp"

namespace monotypic {

inline constexpr const char* kToolVersion = "1.0.0";

// On-disk instance: dimension, rational-string normals, optional supports.
struct InstanceFile {
  Index dimension = 0;
  std::vector<RVec> normals;
  std::optional<std::vector<Rat>> supports;

  NormalSet normal_set() const;
  // requires supports; redundant constraints are rejected by the caller
  HPoly hpoly() const;
};

InstanceFile instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const InstanceFile& f);
InstanceFile load_instance(const std::string& path);
void save_instance(const InstanceFile& f, const std::string& path);

struct ReportFile {
  std::string tool_version = kToolVersion;
  std::string input_digest;
  Classification classification;
  std::vector<Verdict> extra_verdicts;  // M3'/S4' cross-checks under --full
  std::optional<nlohmann::json> witness;
};

nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);
// re-validates every contained certificate against n; throws ParseError
Verdict load_verdict(const nlohmann::json& j, const NormalSet& n);

nlohmann::json report_to_json(const ReportFile& r);
nlohmann::json witness_to_json(const WitnessReport& r);

// FNV-1a 64-bit, hex string
std::string digest(const std::string& bytes);

// OFF scene of a 3-polytope; decimal approximations with the given digits
void write_off(std::ostream& os, const Polytope& p, int precision = 9);

std::string rvec_str(const RVec& v);

}  // namespace monotypic
