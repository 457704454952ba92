#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <vector>

#include "monotypic/common.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace monotypic {

using Rat = mpq_class;
using RVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision integers.
Rat parse_rat(const std::string& s);

// Canonical text form "p" or "p/q", q > 1.
std::string rat_str(const Rat& r);

RVec make_vec(std::initializer_list<long> coords);
RVec make_vec_r(std::initializer_list<Rat> coords);

// Columns from a list of vectors (all of equal dimension).
RMat cols_from(const std::vector<RVec>& vs);

bool lex_less(const RVec& a, const RVec& b);

// Scales v by a positive rational so that the entries become coprime
// integers.  Directions are oriented: no sign flip.  Throws on zero.
RVec primitive_direction(const RVec& v);

}  // namespace monotypic
