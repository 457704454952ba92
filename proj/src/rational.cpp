#include "monotypic/rational.hpp"

namespace monotypic {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class num(s);
      return Rat(num);
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal: " + s);
  }
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RVec make_vec(std::initializer_list<long> coords) {
  RVec v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (long c : coords) v[i++] = Rat(c);
  return v;
}

RVec make_vec_r(std::initializer_list<Rat> coords) {
  RVec v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (const Rat& c : coords) v[i++] = c;
  return v;
}

RMat cols_from(const std::vector<RVec>& vs) {
  if (vs.empty()) return RMat(0, 0);
  RMat m(vs.front().size(), static_cast<Index>(vs.size()));
  for (Index j = 0; j < m.cols(); ++j) {
    if (vs[j].size() != m.rows()) throw DimMismatch("cols_from: ragged input");
    m.col(j) = vs[j];
  }
  return m;
}

bool lex_less(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

RVec primitive_direction(const RVec& v) {
  if (v.size() == 0 || v.isZero()) throw Error("primitive_direction: zero vector");
  mpz_class den_lcm = 1;
  for (Index i = 0; i < v.size(); ++i) {
    mpz_class d = v[i].get_den();
    den_lcm = lcm(den_lcm, d);
  }
  mpz_class num_gcd = 0;
  for (Index i = 0; i < v.size(); ++i) {
    mpz_class scaled = v[i].get_num() * (den_lcm / v[i].get_den());
    num_gcd = gcd(num_gcd, scaled);
  }
  Rat scale(den_lcm, num_gcd);  // positive: num_gcd > 0 by gcd convention
  scale.canonicalize();
  RVec out = v * scale;
  return out;
}

}  // namespace monotypic
