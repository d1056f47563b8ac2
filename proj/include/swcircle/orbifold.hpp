#pragma once

#include <memory>
#include <vector>

#include "swcircle/abelian.hpp"

namespace swc {

/// One singular circle: cyclic isotropy order alpha >= 2 and the carry class
/// kappa in H^2(|Y|;Z) that alpha copies of the local bundle E_i desingularize
/// to. For honest orbifold data kappa is the Poincare dual of the circle.
struct SingularLocus {
  Int alpha;
  GroupEl kappa;
};

/// Cohomological shadow of a closed oriented 3-orbifold with circle singular
/// loci: H^2 of the underlying manifold, its singular loci, the cup pairing
/// H^1 x H^2 -> H^3 = Z, and the triple cup form on H^1.
///
/// Construction validates:
///   - free_rank(h2) == b1  (Poincare duality),
///   - the pairing matrix is unimodular (its Smith form is the identity),
///   - cup11 is antisymmetric in its first two slots,
///   - every alpha_i >= 2 and every kappa_i lies in h2.
class Orbifold3 {
 public:
  Orbifold3(FgAbGroup h2, Index b1, std::vector<SingularLocus> loci, IntMatrix pairing,
            std::vector<IntMatrix> cup11);

  const FgAbGroup& h2() const { return h2_; }
  Index b1() const { return b1_; }
  const std::vector<SingularLocus>& loci() const { return loci_; }
  Index locus_count() const { return static_cast<Index>(loci_.size()); }
  const IntMatrix& pairing() const { return pairing_; }
  const std::vector<IntMatrix>& cup11() const { return cup11_; }
  /// mu(e_i, e_j, e_k) = <e_i u e_j u e_k, [|Y|]>.
  const Int& cup(Index i, Index j, Index k) const { return cup11_[static_cast<size_t>(i)](j, k); }

  bool operator==(const Orbifold3& other) const;
  bool operator!=(const Orbifold3& other) const { return !(*this == other); }

 private:
  FgAbGroup h2_;
  Index b1_ = 0;
  std::vector<SingularLocus> loci_;
  IntMatrix pairing_;
  std::vector<IntMatrix> cup11_;
};

using OrbifoldPtr = std::shared_ptr<const Orbifold3>;

/// Orbifold line bundle in Seifert coordinates (c_1(|L|), beta_1..beta_n),
/// with every beta_i reduced into [0, alpha_i).
class PicardElem {
 public:
  PicardElem(OrbifoldPtr orbifold, GroupEl c, std::vector<Int> betas);

  /// Coordinates with out-of-range betas: each full multiple of alpha_i is
  /// carried into c as kappa_i (the relation alpha_i E_i = kappa_i).
  static PicardElem from_unreduced(OrbifoldPtr orbifold, GroupEl c, std::vector<Int> betas);
  static PicardElem zero(OrbifoldPtr orbifold);
  /// E_i: isotropy weight 1 along locus i, trivial elsewhere.
  static PicardElem locus_generator(OrbifoldPtr orbifold, Index i);

  const OrbifoldPtr& orbifold() const { return orbifold_; }
  const GroupEl& c() const { return c_; }
  const std::vector<Int>& betas() const { return betas_; }

  friend bool operator==(const PicardElem& a, const PicardElem& b) {
    return *a.orbifold_ == *b.orbifold_ && a.c_ == b.c_ && a.betas_ == b.betas_;
  }
  friend bool operator!=(const PicardElem& a, const PicardElem& b) { return !(a == b); }

 private:
  OrbifoldPtr orbifold_;
  GroupEl c_;
  std::vector<Int> betas_;
};

/// Attaching coefficients of the unit circle bundle around one locus:
/// (phi_i)_*[m~_i] = (alpha_i/d) s_*[m'_i] + (beta_i/d) [f'], d = gcd(alpha_i, beta_i).
struct LocusGluing {
  Int meridian_coeff;  // alpha_i / d
  Int fiber_coeff;     // beta_i / d
  Int d;               // order of the residual isotropy on the total space

  friend bool operator==(const LocusGluing& a, const LocusGluing& b) {
    return a.meridian_coeff == b.meridian_coeff && a.fiber_coeff == b.fiber_coeff && a.d == b.d;
  }
};

using GluingData = std::vector<LocusGluing>;

/// Tensor product of orbifold line bundles in Seifert coordinates.
PicardElem pic_add(const PicardElem& l1, const PicardElem& l2);
PicardElem pic_neg(const PicardElem& l);
PicardElem pic_sub(const PicardElem& l1, const PicardElem& l2);
PicardElem pic_scale(const Int& n, const PicardElem& l);

/// c_1 of the desingularization |L| (the stored c coordinate).
GroupEl desingularize(const PicardElem& l);

GluingData unit_circle_gluing(const PicardElem& l);

/// True iff gcd(alpha_i, beta_i) = 1 at every locus, i.e. the unit circle
/// bundle of L is a smooth 4-manifold.
bool is_smooth_total_space(const PicardElem& l);

/// Pic^t(Y) presented by generators (h2 generators, E_1..E_n) and relations
/// (h2 torsion, alpha_i E_i = kappa_i), reduced to normal form by SNF.
/// to_group / from_group are mutually inverse isomorphisms onto canonical reps.
class PicGroup {
 public:
  explicit PicGroup(OrbifoldPtr orbifold);

  const FgAbGroup& group() const { return presentation_.group; }
  const OrbifoldPtr& orbifold() const { return orbifold_; }
  const QuotientResult& presentation() const { return presentation_; }

  GroupEl to_group(const PicardElem& l) const;
  PicardElem from_group(const GroupEl& g) const;
  /// Image of a class in H^2(|Y|), i.e. of the Picard element (c, 0, ..., 0).
  GroupEl h2_image(const GroupEl& c) const;

 private:
  OrbifoldPtr orbifold_;
  QuotientResult presentation_;  // free ambient group Z^{r+k+n} mod relations
};

PicGroup pic_group(OrbifoldPtr orbifold);

}  // namespace swc
