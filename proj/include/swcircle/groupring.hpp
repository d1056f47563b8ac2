#pragma once

#include <map>

#include "swcircle/abelian.hpp"

namespace swc {

/// Finitely supported Z-valued function on a FgAbGroup: the group ring Z[G].
/// Keys are canonical-form elements, stored coefficients are never zero, and
/// iteration order is the lexicographic term order used for serialization.
class GroupRingElem {
 public:
  using TermMap = std::map<GroupEl, Int>;

  explicit GroupRingElem(FgAbGroup group) : group_(std::move(group)) {}

  static GroupRingElem zero(const FgAbGroup& g) { return GroupRingElem(g); }
  static GroupRingElem one(const FgAbGroup& g) { return monomial(g, g.zero(), 1); }
  static GroupRingElem monomial(const FgAbGroup& g, const GroupEl& exp, const Int& coef);

  const FgAbGroup& group() const { return group_; }
  const TermMap& terms() const { return terms_; }
  Index term_count() const { return static_cast<Index>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient_sum() const;

  /// Accumulates coef at exp, pruning the term if it cancels to zero.
  void accumulate(const GroupEl& exp, const Int& coef);

  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElem& a, const GroupRingElem& b) { return !(a == b); }

 private:
  FgAbGroup group_;
  TermMap terms_;
};

GroupRingElem add(const GroupRingElem& p, const GroupRingElem& q);
GroupRingElem neg(const GroupRingElem& p);
GroupRingElem sub(const GroupRingElem& p, const GroupRingElem& q);
/// Convolution product: coefficient of g is sum over g1 + g2 = g of p(g1) q(g2).
GroupRingElem mul(const GroupRingElem& p, const GroupRingElem& q);
GroupRingElem scale(const Int& n, const GroupRingElem& p);

/// Pushforward along proj: coefficients of one fiber are summed into one term.
GroupRingElem fold(const GroupRingElem& p, const GroupHom& proj);

/// p(g) == p(-g) for all g.
bool is_symmetric(const GroupRingElem& p);

/// Stored coefficient at g, or 0.
Int coefficient(const GroupRingElem& p, const GroupEl& g);

inline GroupRingElem operator+(const GroupRingElem& p, const GroupRingElem& q) { return add(p, q); }
inline GroupRingElem operator-(const GroupRingElem& p, const GroupRingElem& q) { return sub(p, q); }
inline GroupRingElem operator-(const GroupRingElem& p) { return neg(p); }
inline GroupRingElem operator*(const GroupRingElem& p, const GroupRingElem& q) { return mul(p, q); }

}  // namespace swc
