#pragma once

#include <variant>

#include "monotypic/cone.hpp"

namespace monotypic {

enum class Condition { D, DD, M3prime, S4prime };

enum class MonotypyClass { NotMonotypic, MonotypicNotStrong, StronglyMonotypic };

// A conical (n+1)-subset whose positive hull misses every other direction.
struct DViolation {
  std::vector<Index> subset;
  ConicalCertificate conical;           // for the subset's directions, in order
  std::vector<Index> others;            // remaining indices of N
  std::vector<RVec> outside_witnesses;  // per other: y, <y,other> >= 1, <y,subset> <= 0
};

struct DDViolation {
  std::vector<Index> subset;  // conical (n+1)-subset
  ConicalCertificate conical;
};

struct M3Violation {
  std::vector<Index> v1, v2;  // disjoint primitive subsets
  RVec point;                 // nonzero, in both positive hulls
};

struct S4Violation {
  std::vector<Index> subset;  // positively spanning M, as indices of N
  DViolation inner;           // indices relative to the subset list
};

struct Holds {
  unsigned long long subsets_examined = 0;
  unsigned long long pairs_examined = 0;
};

using Certificate = std::variant<DViolation, DDViolation, M3Violation, S4Violation, Holds>;

struct Verdict {
  Condition condition;
  bool holds;
  Certificate certificate;
};

inline constexpr Index kDefaultSizeCap = 20;

Verdict check_condition_D(const NormalSet& n);
Verdict check_condition_DD(const NormalSet& n);
Verdict check_M3prime(const NormalSet& n);
Verdict check_S4prime(const NormalSet& n, Index size_cap = kDefaultSizeCap);

struct Classification {
  MonotypyClass cls;
  Verdict d;
  Verdict dd;
};

// DD runs first; its failure certificate is the seed for the witness pipeline.
Classification classify(const NormalSet& n);

const char* to_string(MonotypyClass c);
const char* to_string(Condition c);

}  // namespace monotypic
