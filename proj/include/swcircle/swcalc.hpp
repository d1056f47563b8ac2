#pragma once

#include <string>

#include "swcircle/fourman.hpp"
#include "swcircle/groupring.hpp"

namespace swc {

/// SW^3 of Y as a group-ring element over Pic^t(Y): the exponent g records
/// the invariant of xi_0 + g for an implicit basepoint Spin^c structure xi_0.
struct SW3Invariant {
  OrbifoldPtr orbifold;
  GroupRingElem poly;  // over pic_group(orbifold).group()
};

SW3Invariant make_sw3(OrbifoldPtr orbifold, GroupRingElem poly);

enum class ChamberNote {
  kUnconditional,            // b_+ != 1
  kBPlusOnePullbackOnly,     // b_+ = 1: valid for pulled-back Spin^c structures
};

std::string to_string(ChamberNote note);

/// SW^4 of X, supported on the pullback part of H^2(X) by construction.
struct SW4Invariant {
  CircleFourManifold manifold;
  GroupRingElem poly;  // over h2_pullback_part
  ChamberNote chamber_note;
};

/// Integer Seifert pairing of a knot: det(V - V^T) = 1.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(IntMatrix v);
  const IntMatrix& matrix() const { return v_; }
  Index genus() const { return v_.rows() / 2; }

 private:
  IntMatrix v_;
};

/// Alexander polynomial t^{-g} det(t V - V^T), sign-normalized to Delta(1) = +1.
/// Returned over Z (the rank-one group), exponent k standing for t^k.
GroupRingElem alexander_from_seifert(const SeifertMatrix& v);

/// The rank-two surgery presentation used for the doubled-knot construction:
/// b1 = 2, h2 = Z^2, no singular loci, identity pairing, zero cup form.
OrbifoldPtr whitehead_orbifold();

/// SW^3 candidate delta1(x^2) * delta2(y^2) on whitehead_orbifold(), where
/// x, y are the exponentials of the meridian duals. The product rule is
/// established for the doubled 6_3 pair; for other fibered pairs it is a
/// hypothesis, which is why the primary SW^3 input path is an explicit
/// polynomial. Inputs must be symmetric with coefficient sum 1.
SW3Invariant whitehead_construction(const GroupRingElem& delta1, const GroupRingElem& delta2);

/// SW^4_X = sum of SW^3_Y over Spin^c structures congruent mod chi, computed
/// as the fold of the SW^3 polynomial along the pullback projection. Refuses
/// b_+(X) = 1 with b_1(Y) = 1, where the right side may be chamber-dependent.
SW4Invariant sw4_from_sw3(const CircleFourManifold& x, const SW3Invariant& sw3);

/// Expected moduli dimension c_1^2 / 4 of a pulled-back class: always 0.
Int dimension_of_pullback(const CircleFourManifold& x, const GroupEl& xi_offset);

/// Every supported Spin^c structure has zero-dimensional moduli.
bool check_simple_type(const SW4Invariant& sw4);

/// True iff b_+ = 1, b_1(Y) = 2, and the cup product H^1 x H^1 -> H^2 of X
/// vanishes after pullback (every a u b lands in <chi>): the conditions under
/// which the wall crossing number is zero and the invariant is metric-independent.
bool wall_crossing_invariant(const CircleFourManifold& x);

struct TheoremAValidation {
  bool strict = true;    // false: b_+ = 1 advisory mode
  bool accepted = true;  // strict mode only; advisory never rejects
  std::vector<GroupEl> offenders;  // support outside the pullback part
  std::string note;
};

/// Checks a proposed invariant table over the full H^2(X) model against the
/// pullback restriction: strict for b_+ != 1, advisory for b_+ = 1 (offending
/// classes must have SW^+ = 0; the other chamber follows from wall crossing).
TheoremAValidation theorem_a_validate(const CircleFourManifold& x, const GroupRingElem& proposed);

}  // namespace swc
