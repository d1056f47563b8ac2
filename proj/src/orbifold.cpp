#include "swcircle/orbifold.hpp"

#include <stdexcept>
#include <utility>

namespace swc {

Orbifold3::Orbifold3(FgAbGroup h2, Index b1, std::vector<SingularLocus> loci, IntMatrix pairing,
                     std::vector<IntMatrix> cup11)
    : h2_(std::move(h2)), b1_(b1), loci_(std::move(loci)), pairing_(std::move(pairing)),
      cup11_(std::move(cup11)) {
  if (b1_ < 0) throw std::invalid_argument("Orbifold3: negative b1");
  if (h2_.free_rank() != b1_)
    throw std::invalid_argument("Orbifold3: free rank of h2 must equal b1 (Poincare duality)");
  for (const SingularLocus& l : loci_) {
    if (l.alpha < 2) throw std::invalid_argument("Orbifold3: isotropy order below 2");
    if (!h2_.contains(l.kappa))
      throw std::invalid_argument("Orbifold3: carry class outside h2");
  }
  if (pairing_.rows() != b1_ || pairing_.cols() != b1_)
    throw std::invalid_argument("Orbifold3: pairing must be b1 x b1");
  if (b1_ > 0) {
    SmithDecomposition s = smith_normal_form(pairing_);
    for (Index i = 0; i < b1_; ++i)
      if (s.d(i, i) != 1)
        throw std::invalid_argument("Orbifold3: cup pairing is not unimodular");
  }
  if (static_cast<Index>(cup11_.size()) != b1_)
    throw std::invalid_argument("Orbifold3: cup11 must have b1 slices");
  for (const IntMatrix& slice : cup11_)
    if (slice.rows() != b1_ || slice.cols() != b1_)
      throw std::invalid_argument("Orbifold3: cup11 slices must be b1 x b1");
  for (Index i = 0; i < b1_; ++i)
    for (Index j = 0; j < b1_; ++j)
      for (Index k = 0; k < b1_; ++k)
        if (cup(i, j, k) != -cup(j, i, k))
          throw std::invalid_argument("Orbifold3: cup11 not antisymmetric in the first two slots");
}

bool Orbifold3::operator==(const Orbifold3& other) const {
  if (h2_ != other.h2_ || b1_ != other.b1_ || loci_.size() != other.loci_.size()) return false;
  for (size_t i = 0; i < loci_.size(); ++i)
    if (loci_[i].alpha != other.loci_[i].alpha || loci_[i].kappa != other.loci_[i].kappa)
      return false;
  if (!mat_eq(pairing_, other.pairing_)) return false;
  for (size_t i = 0; i < cup11_.size(); ++i)
    if (!mat_eq(cup11_[i], other.cup11_[i])) return false;
  return true;
}

namespace {

void require_orbifold(const OrbifoldPtr& orb) {
  if (!orb) throw std::invalid_argument("PicardElem: null orbifold");
}

void require_same_orbifold(const PicardElem& a, const PicardElem& b, const char* op) {
  if (*a.orbifold() != *b.orbifold())
    throw std::invalid_argument(std::string(op) + ": operands live over different orbifolds");
}

}  // namespace

PicardElem::PicardElem(OrbifoldPtr orbifold, GroupEl c, std::vector<Int> betas)
    : orbifold_(std::move(orbifold)), c_(std::move(c)), betas_(std::move(betas)) {
  require_orbifold(orbifold_);
  if (!orbifold_->h2().contains(c_))
    throw std::invalid_argument("PicardElem: c outside h2");
  if (static_cast<Index>(betas_.size()) != orbifold_->locus_count())
    throw std::invalid_argument("PicardElem: one beta per singular locus required");
  for (size_t i = 0; i < betas_.size(); ++i)
    if (betas_[i] < 0 || betas_[i] >= orbifold_->loci()[i].alpha)
      throw std::invalid_argument("PicardElem: beta out of range [0, alpha)");
}

PicardElem PicardElem::from_unreduced(OrbifoldPtr orbifold, GroupEl c, std::vector<Int> betas) {
  require_orbifold(orbifold);
  const auto& loci = orbifold->loci();
  if (betas.size() != loci.size())
    throw std::invalid_argument("PicardElem: one beta per singular locus required");
  GroupEl cc = orbifold->h2().reduce(std::move(c));
  for (size_t i = 0; i < betas.size(); ++i) {
    Int carry = floor_div(betas[i], loci[i].alpha);
    betas[i] -= carry * loci[i].alpha;
    if (carry != 0) cc = orbifold->h2().add(cc, orbifold->h2().scale(carry, loci[i].kappa));
  }
  return PicardElem(std::move(orbifold), std::move(cc), std::move(betas));
}

PicardElem PicardElem::zero(OrbifoldPtr orbifold) {
  require_orbifold(orbifold);
  GroupEl z = orbifold->h2().zero();
  std::vector<Int> betas(orbifold->loci().size(), Int(0));
  return PicardElem(std::move(orbifold), std::move(z), std::move(betas));
}

PicardElem PicardElem::locus_generator(OrbifoldPtr orbifold, Index i) {
  require_orbifold(orbifold);
  if (i < 0 || i >= orbifold->locus_count())
    throw std::invalid_argument("locus_generator: locus index out of range");
  GroupEl z = orbifold->h2().zero();
  std::vector<Int> betas(orbifold->loci().size(), Int(0));
  betas[static_cast<size_t>(i)] = 1;
  return PicardElem(std::move(orbifold), std::move(z), std::move(betas));
}

PicardElem pic_add(const PicardElem& l1, const PicardElem& l2) {
  require_same_orbifold(l1, l2, "pic_add");
  const Orbifold3& y = *l1.orbifold();
  std::vector<Int> betas(l1.betas().size());
  for (size_t i = 0; i < betas.size(); ++i) betas[i] = l1.betas()[i] + l2.betas()[i];
  return PicardElem::from_unreduced(l1.orbifold(), y.h2().add(l1.c(), l2.c()), std::move(betas));
}

PicardElem pic_neg(const PicardElem& l) {
  const Orbifold3& y = *l.orbifold();
  std::vector<Int> betas(l.betas().size());
  for (size_t i = 0; i < betas.size(); ++i) betas[i] = -l.betas()[i];
  return PicardElem::from_unreduced(l.orbifold(), y.h2().neg(l.c()), std::move(betas));
}

PicardElem pic_sub(const PicardElem& l1, const PicardElem& l2) {
  return pic_add(l1, pic_neg(l2));
}

PicardElem pic_scale(const Int& n, const PicardElem& l) {
  const Orbifold3& y = *l.orbifold();
  std::vector<Int> betas(l.betas().size());
  for (size_t i = 0; i < betas.size(); ++i) betas[i] = n * l.betas()[i];
  return PicardElem::from_unreduced(l.orbifold(), y.h2().scale(n, l.c()), std::move(betas));
}

GroupEl desingularize(const PicardElem& l) { return l.c(); }

GluingData unit_circle_gluing(const PicardElem& l) {
  GluingData out;
  const auto& loci = l.orbifold()->loci();
  out.reserve(loci.size());
  for (size_t i = 0; i < loci.size(); ++i) {
    Int d = gcd(loci[i].alpha, l.betas()[i]);  // gcd(alpha, 0) = alpha
    out.push_back(LocusGluing{loci[i].alpha / d, l.betas()[i] / d, d});
  }
  return out;
}

bool is_smooth_total_space(const PicardElem& l) {
  const auto& loci = l.orbifold()->loci();
  for (size_t i = 0; i < loci.size(); ++i)
    if (gcd(loci[i].alpha, l.betas()[i]) != 1) return false;
  return true;
}

namespace {

QuotientResult pic_presentation(const OrbifoldPtr& orb) {
  require_orbifold(orb);
  const FgAbGroup& h2 = orb->h2();
  const Index r = h2.free_rank();
  const Index k = h2.torsion_count();
  const Index n = orb->locus_count();
  FgAbGroup ambient(r + k + n, {});

  std::vector<GroupEl> relations;
  relations.reserve(static_cast<size_t>(k + n));
  // h2's own torsion
  for (Index j = 0; j < k; ++j) {
    IntVector v = IntVector::Zero(r + k + n);
    v[r + j] = h2.torsion()[static_cast<size_t>(j)];
    relations.push_back(GroupEl{std::move(v), IntVector(0)});
  }
  // alpha_i E_i - kappa_i = 0
  for (Index i = 0; i < n; ++i) {
    IntVector v = IntVector::Zero(r + k + n);
    v.head(r + k) = -h2.lift(orb->loci()[static_cast<size_t>(i)].kappa);
    v[r + k + i] = orb->loci()[static_cast<size_t>(i)].alpha;
    relations.push_back(GroupEl{std::move(v), IntVector(0)});
  }
  return quotient(ambient, relations);
}

}  // namespace

PicGroup::PicGroup(OrbifoldPtr orbifold)
    : orbifold_(std::move(orbifold)), presentation_(pic_presentation(orbifold_)) {}

GroupEl PicGroup::to_group(const PicardElem& l) const {
  if (*l.orbifold() != *orbifold_)
    throw std::invalid_argument("PicGroup::to_group: element of a different orbifold");
  const FgAbGroup& h2 = orbifold_->h2();
  const Index n = orbifold_->locus_count();
  IntVector v(h2.gen_count() + n);
  v.head(h2.gen_count()) = h2.lift(l.c());
  for (Index i = 0; i < n; ++i) v[h2.gen_count() + i] = l.betas()[static_cast<size_t>(i)];
  return presentation_.projection.apply(presentation_.domain.from_lift(v));
}

PicardElem PicGroup::from_group(const GroupEl& g) const {
  GroupEl pre = presentation_.section(g);
  const FgAbGroup& h2 = orbifold_->h2();
  const Index n = orbifold_->locus_count();
  IntVector x = presentation_.domain.lift(pre);
  GroupEl c = h2.from_lift(x.head(h2.gen_count()));
  std::vector<Int> betas(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) betas[static_cast<size_t>(i)] = x[h2.gen_count() + i];
  return PicardElem::from_unreduced(orbifold_, std::move(c), std::move(betas));
}

GroupEl PicGroup::h2_image(const GroupEl& c) const {
  std::vector<Int> betas(static_cast<size_t>(orbifold_->locus_count()), Int(0));
  return to_group(PicardElem(orbifold_, orbifold_->h2().reduce(c), std::move(betas)));
}

PicGroup pic_group(OrbifoldPtr orbifold) { return PicGroup(std::move(orbifold)); }

}  // namespace swc
