#include "swcircle/fourman.hpp"

#include <stdexcept>
#include <utility>

namespace swc {

namespace {

CohomologyReport build_report(const PicardElem& chi, const PicGroup& pic,
                              const QuotientResult& q) {
  const Orbifold3& y = *chi.orbifold();
  const Index b1 = y.b1();

  const bool torsion = is_torsion(pic.group(), pic.to_group(chi));

  FgAbGroup h1(torsion ? b1 + 1 : b1, {});

  // rank of ker(. u [chi]) on H^1(|Y|), against the free part of c_1(|L|)
  IntVector functional = y.pairing() * desingularize(chi).free;
  const Index kernel_rank = is_zero(functional) ? b1 : b1 - 1;

  FgAbGroup h2(q.group.free_rank() + kernel_rank, q.group.torsion());

  const Index rank_h2 = h2.free_rank();
  if (rank_h2 % 2 != 0)
    throw std::invalid_argument(
        "cohomology: rank H^2 is odd; pairing data is inconsistent with the Euler class");
  const Index b_plus = rank_h2 / 2;

  // chi(X) = 2 - 2 b_1(X) + b_2(X) must vanish
  if (2 - 2 * h1.free_rank() + rank_h2 != 0)
    throw std::invalid_argument("cohomology: Euler characteristic does not vanish; invalid input");

  return CohomologyReport{std::move(h1),
                          std::move(h2),
                          q.group,
                          q.projection,
                          kernel_rank,
                          b_plus,
                          b_plus,
                          0,
                          0,
                          torsion};
}

}  // namespace

CircleFourManifold::CircleFourManifold(PicardElem chi) : chi_(std::move(chi)) {
  if (!is_smooth_total_space(chi_))
    throw std::invalid_argument(
        "CircleFourManifold: chi has a locus with gcd(alpha, beta) != 1; total space not smooth");
  picard_ = std::make_shared<const PicGroup>(chi_.orbifold());
  pullback_quotient_ = std::make_shared<const QuotientResult>(
      quotient(picard_->group(), {picard_->to_group(chi_)}));
  report_ = std::make_shared<const CohomologyReport>(
      build_report(chi_, *picard_, *pullback_quotient_));
}

CohomologyReport cohomology(const CircleFourManifold& x) { return x.cohomology_report(); }

IntersectionForm intersection_form(const CircleFourManifold& x) {
  IntersectionForm form;
  form.blocks.assign(static_cast<size_t>(x.cohomology_report().b_plus), IntersectionFormBlock{});
  return form;
}

GroupHom pullback_map(const CircleFourManifold& x) {
  return x.cohomology_report().pullback_projection;
}

Int square_of_pullback(const CircleFourManifold& x, const PicardElem& l) {
  if (*l.orbifold() != *x.base())
    throw std::invalid_argument("square_of_pullback: class over a different orbifold");
  return 0;
}

GroupEl embed_pullback_class(const CohomologyReport& report, const GroupEl& q) {
  if (!report.h2_pullback_part.contains(q))
    throw std::invalid_argument("embed_pullback_class: element not in the pullback part");
  IntVector free = IntVector::Zero(report.h2.free_rank());
  free.head(report.h2_pullback_part.free_rank()) = q.free;
  return GroupEl{std::move(free), q.tors};
}

bool is_pullback_class(const CohomologyReport& report, const GroupEl& el) {
  if (!report.h2.contains(el))
    throw std::invalid_argument("is_pullback_class: element not in the h2 model");
  for (Index i = report.h2_pullback_part.free_rank(); i < report.h2.free_rank(); ++i)
    if (el.free[i] != 0) return false;
  return true;
}

GroupEl pullback_component(const CohomologyReport& report, const GroupEl& el) {
  if (!report.h2.contains(el))
    throw std::invalid_argument("pullback_component: element not in the h2 model");
  return GroupEl{el.free.head(report.h2_pullback_part.free_rank()), el.tors};
}

}  // namespace swc
