#include "swcircle/swcalc.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace swc {

SW3Invariant make_sw3(OrbifoldPtr orbifold, GroupRingElem poly) {
  if (!orbifold) throw std::invalid_argument("make_sw3: null orbifold");
  if (poly.group() != pic_group(orbifold).group())
    throw std::invalid_argument("make_sw3: polynomial group is not Pic^t(Y)'s normal form");
  return SW3Invariant{std::move(orbifold), std::move(poly)};
}

std::string to_string(ChamberNote note) {
  switch (note) {
    case ChamberNote::kUnconditional: return "UNCONDITIONAL";
    case ChamberNote::kBPlusOnePullbackOnly: return "B_PLUS_ONE_PULLBACK_ONLY";
  }
  throw std::logic_error("unreachable");
}

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
  if (v_.rows() != v_.cols()) throw std::invalid_argument("SeifertMatrix: not square");
  if (v_.rows() % 2 != 0) throw std::invalid_argument("SeifertMatrix: odd size");
  IntMatrix skew = v_ - IntMatrix(v_.transpose());
  if (determinant(skew) != 1)
    throw std::invalid_argument("SeifertMatrix: det(V - V^T) != 1, not a valid Seifert pairing");
}

namespace {

// dense univariate polynomials over Z, coefficient of t^i at index i
using Poly = std::vector<Int>;

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(std::move(r));
}

// exact division (the Bareiss invariant guarantees divisibility)
Poly poly_divexact(Poly a, const Poly& b) {
  a = poly_trim(std::move(a));
  if (b.empty()) throw std::logic_error("poly_divexact: division by zero polynomial");
  if (a.empty()) return {};
  Poly q(a.size() - b.size() + 1, Int(0));
  for (size_t k = q.size(); k-- > 0;) {
    const Int& lead = a[b.size() - 1 + k];
    if (lead == 0) continue;
    if (!divides(b.back(), lead)) throw std::logic_error("poly_divexact: inexact division");
    q[k] = lead / b.back();
    for (size_t i = 0; i < b.size(); ++i) a[i + k] -= q[k] * b[i];
  }
  for (const Int& c : a)
    if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
  return poly_trim(std::move(q));
}

// fraction-free determinant over Z[t]
Poly poly_det(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) return Poly{Int(1)};
  int sign = 1;
  Poly prev{Int(1)};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      size_t p = k + 1;
      while (p < n && m[p][k].empty()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = poly_divexact(poly_sub(poly_mul(m[i][j], m[k][k]), poly_mul(m[i][k], m[k][j])),
                                prev);
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  if (sign < 0)
    for (Int& c : det) c = -c;
  return det;
}

FgAbGroup rank_one_group() { return FgAbGroup(1, {}); }

GroupEl exp_of(long k) {
  IntVector v(1);
  v[0] = k;
  return GroupEl{std::move(v), IntVector(0)};
}

}  // namespace

GroupRingElem alexander_from_seifert(const SeifertMatrix& v) {
  const Index n = v.matrix().rows();
  const Index g = v.genus();

  std::vector<std::vector<Poly>> m(static_cast<size_t>(n),
                                   std::vector<Poly>(static_cast<size_t>(n)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          poly_trim(Poly{-v.matrix()(j, i), v.matrix()(i, j)});  // -V^T + t V

  Poly det = poly_det(std::move(m));  // degree 2g, value 1 at t = 1

  Int at_one = 0;
  for (const Int& c : det) at_one += c;
  if (at_one != 1 && at_one != -1)
    throw std::logic_error("alexander_from_seifert: determinant at t=1 is not a unit");
  const Int sign = at_one;  // normalize Delta(1) = +1

  FgAbGroup z = rank_one_group();
  GroupRingElem delta(z);
  for (size_t k = 0; k < det.size(); ++k)
    delta.accumulate(exp_of(static_cast<long>(k) - static_cast<long>(g)), sign * det[k]);
  return delta;
}

OrbifoldPtr whitehead_orbifold() {
  const Index b1 = 2;
  std::vector<IntMatrix> cup(2, IntMatrix::Zero(b1, b1));
  return std::make_shared<const Orbifold3>(FgAbGroup(b1, {}), b1, std::vector<SingularLocus>{},
                                           IntMatrix::Identity(b1, b1), std::move(cup));
}

namespace {

void require_normalized_alexander(const GroupRingElem& delta, const char* which) {
  if (delta.group() != FgAbGroup(1, {}))
    throw std::invalid_argument(std::string("whitehead_construction: ") + which +
                                " must live over the rank-one group");
  if (!is_symmetric(delta))
    throw std::invalid_argument(std::string("whitehead_construction: ") + which +
                                " is not symmetric");
  if (delta.coefficient_sum() != 1)
    throw std::invalid_argument(std::string("whitehead_construction: ") + which +
                                " does not evaluate to 1 at t = 1");
}

// t^k -> (2k) * generator `axis` of Z^2
GroupRingElem substitute_doubled(const GroupRingElem& delta, const FgAbGroup& z2, Index axis) {
  GroupRingElem out(z2);
  for (const auto& [exp, coef] : delta.terms()) {
    IntVector free = IntVector::Zero(2);
    free[axis] = 2 * exp.free[0];
    out.accumulate(GroupEl{std::move(free), IntVector(0)}, coef);
  }
  return out;
}

}  // namespace

SW3Invariant whitehead_construction(const GroupRingElem& delta1, const GroupRingElem& delta2) {
  require_normalized_alexander(delta1, "delta1");
  require_normalized_alexander(delta2, "delta2");
  OrbifoldPtr y = whitehead_orbifold();
  FgAbGroup z2 = pic_group(y).group();
  GroupRingElem poly = mul(substitute_doubled(delta1, z2, 0), substitute_doubled(delta2, z2, 1));
  return make_sw3(std::move(y), std::move(poly));
}

SW4Invariant sw4_from_sw3(const CircleFourManifold& x, const SW3Invariant& sw3) {
  if (*sw3.orbifold != *x.base())
    throw std::invalid_argument("sw4_from_sw3: SW^3 data lives over a different orbifold");
  const CohomologyReport& report = x.cohomology_report();
  if (report.b_plus == 1 && x.base()->b1() == 1)
    throw std::invalid_argument(
        "sw4_from_sw3: b_+ = 1 with b_1(Y) = 1; the sum may depend on the chamber structure of Y");
  GroupRingElem folded = fold(sw3.poly, report.pullback_projection);
  ChamberNote note = report.b_plus == 1 ? ChamberNote::kBPlusOnePullbackOnly
                                        : ChamberNote::kUnconditional;
  return SW4Invariant{x, std::move(folded), note};
}

Int dimension_of_pullback(const CircleFourManifold& x, const GroupEl& xi_offset) {
  if (!x.cohomology_report().h2_pullback_part.contains(xi_offset))
    throw std::invalid_argument("dimension_of_pullback: class not in the pullback part");
  // d(xi) = c_1(xi)^2 / 4; lift the offset to an orbifold line bundle and square it
  PicardElem lift = x.picard().from_group(x.pullback_quotient().section(xi_offset));
  return square_of_pullback(x, lift) / 4;
}

bool check_simple_type(const SW4Invariant& sw4) {
  for (const auto& [exp, coef] : sw4.poly.terms())
    if (dimension_of_pullback(sw4.manifold, exp) != 0) return false;
  return true;
}

bool wall_crossing_invariant(const CircleFourManifold& x) {
  const CohomologyReport& report = x.cohomology_report();
  const Orbifold3& y = *x.base();
  if (report.b_plus != 1 || y.b1() != 2) return false;

  // a u b in H^2(|Y|) is recovered from <e_i u a u b> = pairing(e_i, a u b)
  // and must die in Pic^t(Y)/<chi> for every generator pair (a, b)
  const PicGroup& pic = x.picard();
  for (Index a = 0; a < y.b1(); ++a) {
    for (Index b = a + 1; b < y.b1(); ++b) {
      IntVector m(y.b1());
      for (Index i = 0; i < y.b1(); ++i) m[i] = y.cup(i, a, b);
      auto w = solve_linear(y.pairing(), m);
      if (!w) throw std::logic_error("wall_crossing_invariant: unimodular pairing failed to solve");
      IntVector tors = IntVector::Zero(y.h2().torsion_count());
      GroupEl cup_class = y.h2().element(std::move(*w), std::move(tors));
      GroupEl image = report.pullback_projection.apply(pic.h2_image(cup_class));
      if (!report.h2_pullback_part.is_zero(image)) return false;
    }
  }
  return true;
}

TheoremAValidation theorem_a_validate(const CircleFourManifold& x, const GroupRingElem& proposed) {
  const CohomologyReport& report = x.cohomology_report();
  if (proposed.group() != report.h2)
    throw std::invalid_argument("theorem_a_validate: table must live over the full H^2(X) model");

  TheoremAValidation result;
  result.strict = report.b_plus != 1;
  for (const auto& [exp, coef] : proposed.terms())
    if (!is_pullback_class(report, exp)) result.offenders.push_back(exp);

  if (result.strict) {
    result.accepted = result.offenders.empty();
    result.note = result.accepted
                      ? "all support is pulled back from Y"
                      : "nonzero invariant on a class that is not pulled back from Y";
  } else {
    result.accepted = true;
    result.note = result.offenders.empty()
                      ? "all support is pulled back from Y"
                      : "b_+ = 1: SW+ must vanish on the flagged classes; the other chamber "
                        "follows from the wall crossing formula";
  }
  return result;
}

}  // namespace swc
