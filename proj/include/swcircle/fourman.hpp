#pragma once

#include <optional>

#include "swcircle/orbifold.hpp"

namespace swc {

/// Integral cohomology of the total space X, assembled from the circle-bundle
/// structure over Y:
///   H^1(X) = H^1(|Y|) (+ Z when the Euler class is torsion),
///   H^2(X) = Pic^t(Y)/<chi>  (+)  ker(. u [chi]) on H^1(|Y|).
/// All torsion of H^2 sits in the pullback part. The model's h2 coordinates
/// are the pullback part's followed by h2_kernel_rank extra free coordinates.
struct CohomologyReport {
  FgAbGroup h1;
  FgAbGroup h2;
  FgAbGroup h2_pullback_part;
  GroupHom pullback_projection;  // pic_group(Y) -> h2_pullback_part
  Index h2_kernel_rank = 0;
  Index b_plus = 0;
  Index b_minus = 0;
  int signature = 0;   // always 0 for a fixed-point-free circle action
  int euler_char = 0;  // always 0: the action trivializes a tangent direction
  bool chi_is_torsion = false;
};

/// One hyperbolic-like block of the intersection form, spanned by a pullback
/// class of square zero and a dual class; the diagonal entry d on the dual
/// class is not determined by the orbifold data.
struct IntersectionFormBlock {
  int pullback_square = 0;
  int off_diagonal = 1;
  std::optional<Int> d;  // nullopt = UNDETERMINED
};

struct IntersectionForm {
  std::vector<IntersectionFormBlock> blocks;  // b_plus of them
};

/// X as the unit circle bundle of chi over chi's orbifold. Construction
/// requires a smooth total space and consistent pairing data (the derived
/// b_plus must satisfy rank H^2 = 2 b_plus); the Picard presentation and the
/// cohomology report are computed once and shared.
class CircleFourManifold {
 public:
  explicit CircleFourManifold(PicardElem chi);

  const OrbifoldPtr& base() const { return chi_.orbifold(); }
  const PicardElem& chi() const { return chi_; }
  const PicGroup& picard() const { return *picard_; }
  const CohomologyReport& cohomology_report() const { return *report_; }
  /// The quotient Pic^t(Y) -> Pic^t(Y)/<chi> with its section data.
  const QuotientResult& pullback_quotient() const { return *pullback_quotient_; }

  friend bool operator==(const CircleFourManifold& a, const CircleFourManifold& b) {
    return a.chi_ == b.chi_;
  }

 private:
  PicardElem chi_;
  std::shared_ptr<const PicGroup> picard_;
  std::shared_ptr<const QuotientResult> pullback_quotient_;
  std::shared_ptr<const CohomologyReport> report_;
};

CohomologyReport cohomology(const CircleFourManifold& x);

IntersectionForm intersection_form(const CircleFourManifold& x);

/// The projection Pic^t(Y) -> H^2(X)'s pullback part; chi maps to zero.
GroupHom pullback_map(const CircleFourManifold& x);

/// Self-intersection of a pulled-back class: always 0 (pullbacks pair through
/// the fiber direction, which the cup square kills).
Int square_of_pullback(const CircleFourManifold& x, const PicardElem& l);

/// Embeds a pullback-part element into the full h2 model (kernel coords 0).
GroupEl embed_pullback_class(const CohomologyReport& report, const GroupEl& q);
/// True iff the h2-model element has no component in the kernel summand.
bool is_pullback_class(const CohomologyReport& report, const GroupEl& el);
/// Drops the kernel coordinates of an h2-model element.
GroupEl pullback_component(const CohomologyReport& report, const GroupEl& el);

}  // namespace swc
