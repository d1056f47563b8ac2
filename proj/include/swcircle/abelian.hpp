#pragma once

#include <optional>
#include <vector>

#include "swcircle/int_types.hpp"

namespace swc {

class FgAbGroup;

/// Element of a finitely generated abelian group, stored in the group's
/// coordinates: free coordinates first, then one coordinate per torsion
/// summand, always reduced into [0, d_i).
struct GroupEl {
  IntVector free;
  IntVector tors;

  friend bool operator==(const GroupEl& a, const GroupEl& b) {
    return vec_eq(a.free, b.free) && vec_eq(a.tors, b.tors);
  }
  friend bool operator!=(const GroupEl& a, const GroupEl& b) { return !(a == b); }
  // lexicographic on (free, tors); the canonical term order everywhere
  friend bool operator<(const GroupEl& a, const GroupEl& b) {
    int c = vec_cmp(a.free, b.free);
    if (c != 0) return c < 0;
    return vec_cmp(a.tors, b.tors) < 0;
  }
};

/// Z^r + Z/d_1 + ... + Z/d_k in normal form: every d_i >= 2 and d_1 | d_2 | ... | d_k.
class FgAbGroup {
 public:
  FgAbGroup() = default;  // trivial group
  FgAbGroup(Index free_rank, std::vector<Int> torsion);

  Index free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  Index torsion_count() const { return static_cast<Index>(torsion_.size()); }
  Index gen_count() const { return free_rank_ + torsion_count(); }
  /// Order of the torsion subgroup.
  Int torsion_order() const;
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  GroupEl zero() const;
  /// Builds an element from coordinates, reducing torsion coordinates.
  GroupEl element(IntVector free, IntVector tors) const;
  /// Reduces torsion coordinates into [0, d_i); identity on canonical forms.
  GroupEl reduce(GroupEl g) const;
  bool contains(const GroupEl& g) const;

  GroupEl add(const GroupEl& a, const GroupEl& b) const;
  GroupEl neg(const GroupEl& a) const;
  GroupEl sub(const GroupEl& a, const GroupEl& b) const;
  GroupEl scale(const Int& n, const GroupEl& a) const;
  bool is_zero(const GroupEl& a) const;

  /// Coordinates in the presentation lattice Z^{gen_count}, free part first.
  IntVector lift(const GroupEl& g) const;
  GroupEl from_lift(const IntVector& x) const;

  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const FgAbGroup& a, const FgAbGroup& b) { return !(a == b); }

 private:
  Index free_rank_ = 0;
  std::vector<Int> torsion_;
};

/// Homomorphism given on generators; matrix columns are the images of the
/// domain generators as lifts in the codomain. Construction checks that
/// torsion generators map to elements of compatible order.
class GroupHom {
 public:
  GroupHom(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix);

  static GroupHom identity(const FgAbGroup& g);

  const FgAbGroup& domain() const { return domain_; }
  const FgAbGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupEl apply(const GroupEl& g) const;

 private:
  FgAbGroup domain_;
  FgAbGroup codomain_;
  IntMatrix matrix_;
};

/// U * M * V = D with D diagonal, nonnegative, each entry dividing the next;
/// U, V unimodular. Inverses ride along for solving and sections.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;

  Index rank() const;
  Int diag(Index i) const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Solves A x = b over the integers; nullopt when b is not in the column span.
std::optional<IntVector> solve_linear(const IntMatrix& a, const IntVector& b);

struct QuotientResult {
  FgAbGroup group;      // G / <gens>
  GroupHom projection;  // G -> quotient, zero exactly on the generated subgroup

  /// Some preimage in G of a quotient element (a section of the projection).
  GroupEl section(const GroupEl& q) const;

  // presentation bookkeeping (relation matrix of G extended by the lifted gens)
  FgAbGroup domain;
  IntMatrix relations;
  SmithDecomposition snf;
  std::vector<Index> free_pos;  // rows of U*x carrying free coordinates
  std::vector<Index> tors_pos;  // rows of U*x carrying torsion coordinates
};

/// G modulo the subgroup generated by gens, in normal form.
QuotientResult quotient(const FgAbGroup& g, const std::vector<GroupEl>& gens);

/// True iff every free coordinate vanishes.
bool is_torsion(const FgAbGroup& g, const GroupEl& el);

/// The unique stored normal form of an element of proj's codomain; idempotent.
GroupEl canonical_rep(const GroupHom& proj, const GroupEl& q);

/// Coefficients expressing g as an integer combination of gens (modulo the
/// relations of G), or nullopt when g is outside the generated subgroup.
std::optional<std::vector<Int>> subgroup_membership(const FgAbGroup& g,
                                                    const std::vector<GroupEl>& gens,
                                                    const GroupEl& el);

}  // namespace swc
