#include "swcircle/abelian.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace swc {

Int determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = m.rows();
  if (n == 0) return 1;
  // Bareiss: every division below is exact.
  Int sign = 1;
  Int prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

FgAbGroup::FgAbGroup(Index free_rank, std::vector<Int> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw std::invalid_argument("FgAbGroup: negative free rank");
  for (size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw std::invalid_argument("FgAbGroup: torsion coefficient below 2");
    if (i + 1 < torsion_.size() && !divides(torsion_[i], torsion_[i + 1]))
      throw std::invalid_argument("FgAbGroup: torsion coefficients must form a divisibility chain");
  }
}

Int FgAbGroup::torsion_order() const {
  Int n = 1;
  for (const Int& d : torsion_) n *= d;
  return n;
}

GroupEl FgAbGroup::zero() const {
  return GroupEl{IntVector::Zero(free_rank_), IntVector::Zero(torsion_count())};
}

GroupEl FgAbGroup::element(IntVector free, IntVector tors) const {
  if (free.size() != free_rank_ || tors.size() != torsion_count())
    throw std::invalid_argument("FgAbGroup::element: coordinate count mismatch");
  return reduce(GroupEl{std::move(free), std::move(tors)});
}

GroupEl FgAbGroup::reduce(GroupEl g) const {
  for (Index i = 0; i < g.tors.size(); ++i) g.tors[i] = floor_mod(g.tors[i], torsion_[i]);
  return g;
}

bool FgAbGroup::contains(const GroupEl& g) const {
  if (g.free.size() != free_rank_ || g.tors.size() != torsion_count()) return false;
  for (Index i = 0; i < g.tors.size(); ++i)
    if (g.tors[i] < 0 || g.tors[i] >= torsion_[i]) return false;
  return true;
}

GroupEl FgAbGroup::add(const GroupEl& a, const GroupEl& b) const {
  return reduce(GroupEl{a.free + b.free, a.tors + b.tors});
}

GroupEl FgAbGroup::neg(const GroupEl& a) const {
  return reduce(GroupEl{-a.free, -a.tors});
}

GroupEl FgAbGroup::sub(const GroupEl& a, const GroupEl& b) const {
  return reduce(GroupEl{a.free - b.free, a.tors - b.tors});
}

GroupEl FgAbGroup::scale(const Int& n, const GroupEl& a) const {
  return reduce(GroupEl{a.free * n, a.tors * n});
}

bool FgAbGroup::is_zero(const GroupEl& a) const {
  return swc::is_zero(a.free) && swc::is_zero(reduce(a).tors);
}

IntVector FgAbGroup::lift(const GroupEl& g) const {
  IntVector x(gen_count());
  x.head(free_rank_) = g.free;
  x.tail(torsion_count()) = g.tors;
  return x;
}

GroupEl FgAbGroup::from_lift(const IntVector& x) const {
  if (x.size() != gen_count())
    throw std::invalid_argument("FgAbGroup::from_lift: coordinate count mismatch");
  return reduce(GroupEl{x.head(free_rank_), x.tail(torsion_count())});
}

GroupHom::GroupHom(FgAbGroup domain, FgAbGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.gen_count() || matrix_.cols() != domain_.gen_count())
    throw std::invalid_argument("GroupHom: matrix shape does not match domain/codomain");
  // a generator of order d must map to an element killed by d
  for (Index j = 0; j < domain_.torsion_count(); ++j) {
    const Int& d = domain_.torsion()[j];
    IntVector image = matrix_.col(domain_.free_rank() + j) * d;
    if (!codomain_.is_zero(codomain_.from_lift(image)))
      throw std::invalid_argument("GroupHom: matrix does not respect torsion");
  }
}

GroupHom GroupHom::identity(const FgAbGroup& g) {
  return GroupHom(g, g, IntMatrix::Identity(g.gen_count(), g.gen_count()));
}

GroupEl GroupHom::apply(const GroupEl& g) const {
  if (!domain_.contains(g))
    throw std::invalid_argument("GroupHom::apply: element not in domain");
  return codomain_.from_lift(matrix_ * domain_.lift(g));
}

Index SmithDecomposition::rank() const {
  Index r = 0;
  const Index n = std::min(d.rows(), d.cols());
  for (Index i = 0; i < n; ++i)
    if (d(i, i) != 0) ++r;
  return r;
}

Int SmithDecomposition::diag(Index i) const {
  if (i < std::min(d.rows(), d.cols())) return d(i, i);
  return 0;
}

namespace {

struct SnfWorkspace {
  IntMatrix a, u, v, u_inv, v_inv;

  explicit SnfWorkspace(const IntMatrix& m)
      : a(m),
        u(IntMatrix::Identity(m.rows(), m.rows())),
        v(IntMatrix::Identity(m.cols(), m.cols())),
        u_inv(IntMatrix::Identity(m.rows(), m.rows())),
        v_inv(IntMatrix::Identity(m.cols(), m.cols())) {}

  void swap_rows(Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    u.row(i).swap(u.row(j));
    u_inv.col(i).swap(u_inv.col(j));
  }
  void swap_cols(Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    v.col(i).swap(v.col(j));
    v_inv.row(i).swap(v_inv.row(j));
  }
  // row i -= q * row t
  void row_sub(Index i, const Int& q, Index t) {
    if (q == 0) return;
    a.row(i) -= a.row(t) * q;
    u.row(i) -= u.row(t) * q;
    u_inv.col(t) += u_inv.col(i) * q;
  }
  void row_add(Index i, Index t) { row_sub(i, Int(-1), t); }
  // col j -= q * col t
  void col_sub(Index j, const Int& q, Index t) {
    if (q == 0) return;
    a.col(j) -= a.col(t) * q;
    v.col(j) -= v.col(t) * q;
    v_inv.row(t) += v_inv.row(j) * q;
  }
  void negate_row(Index i) {
    a.row(i) = -a.row(i);
    u.row(i) = -u.row(i);
    u_inv.col(i) = -u_inv.col(i);
  }
};

// smallest nonzero |entry| of a(t.., t..); false when that block is zero
bool find_pivot(const IntMatrix& a, Index t, Index& pi, Index& pj) {
  bool found = false;
  Int best = 0;
  for (Index i = t; i < a.rows(); ++i) {
    for (Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int mag = abs(a(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SnfWorkspace w(m);
  const Index rows = m.rows(), cols = m.cols();
  const Index steps = std::min(rows, cols);

  for (Index t = 0; t < steps; ++t) {
    Index pi, pj;
    if (!find_pivot(w.a, t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        w.row_sub(i, trunc_div(w.a(i, t), w.a(t, t)), t);
        if (w.a(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        w.col_sub(j, trunc_div(w.a(t, j), w.a(t, t)), t);
        if (w.a(t, j) != 0) clean = false;
      }
      if (!clean) {
        Index qi, qj;
        find_pivot(w.a, t, qi, qj);  // remainders shrink; a smaller pivot exists
        w.swap_rows(t, qi);
        w.swap_cols(t, qj);
        continue;
      }
      // pivot must divide the whole remaining block for the chain to hold
      Index bi = -1;
      for (Index i = t + 1; i < rows && bi < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (!divides(w.a(t, t), w.a(i, j))) {
            bi = i;
            break;
          }
      if (bi < 0) break;
      w.row_add(t, bi);
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }

  return SmithDecomposition{std::move(w.u), std::move(w.a), std::move(w.v),
                            std::move(w.u_inv), std::move(w.v_inv)};
}

std::optional<IntVector> solve_linear(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
  SmithDecomposition s = smith_normal_form(a);
  IntVector y = s.u * b;
  IntVector w = IntVector::Zero(a.cols());
  const Index diag_len = std::min(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    const Int d = i < diag_len ? s.d(i, i) : Int(0);
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (!divides(d, y[i])) return std::nullopt;
      w[i] = y[i] / d;
    }
  }
  return IntVector(s.v * w);
}

namespace {

// relation matrix of G itself: one column d_i * e_{free_rank + i} per torsion summand
IntMatrix torsion_relations(const FgAbGroup& g) {
  IntMatrix t = IntMatrix::Zero(g.gen_count(), g.torsion_count());
  for (Index i = 0; i < g.torsion_count(); ++i) t(g.free_rank() + i, i) = g.torsion()[i];
  return t;
}

IntMatrix relation_matrix_with(const FgAbGroup& g, const std::vector<GroupEl>& gens) {
  IntMatrix rel(g.gen_count(), g.torsion_count() + static_cast<Index>(gens.size()));
  rel.leftCols(g.torsion_count()) = torsion_relations(g);
  for (size_t j = 0; j < gens.size(); ++j) {
    if (!g.contains(gens[j]))
      throw std::invalid_argument("quotient: generator not an element of the group");
    rel.col(g.torsion_count() + static_cast<Index>(j)) = g.lift(gens[j]);
  }
  return rel;
}

}  // namespace

QuotientResult quotient(const FgAbGroup& g, const std::vector<GroupEl>& gens) {
  const Index n = g.gen_count();
  IntMatrix rel = relation_matrix_with(g, gens);
  SmithDecomposition s = smith_normal_form(rel);

  std::vector<Index> free_pos, tors_pos;
  std::vector<Int> torsion;
  for (Index i = 0; i < n; ++i) {
    const Int d = s.diag(i);
    if (d == 0) {
      free_pos.push_back(i);
    } else if (d >= 2) {
      tors_pos.push_back(i);
      torsion.push_back(d);
    }
  }
  FgAbGroup q(static_cast<Index>(free_pos.size()), torsion);

  IntMatrix proj_mat(q.gen_count(), n);
  for (Index j = 0; j < n; ++j) {
    for (size_t i = 0; i < free_pos.size(); ++i)
      proj_mat(static_cast<Index>(i), j) = s.u(free_pos[i], j);
    for (size_t i = 0; i < tors_pos.size(); ++i)
      proj_mat(q.free_rank() + static_cast<Index>(i), j) = s.u(tors_pos[i], j);
  }

  return QuotientResult{q,
                        GroupHom(g, q, std::move(proj_mat)),
                        g,
                        std::move(rel),
                        std::move(s),
                        std::move(free_pos),
                        std::move(tors_pos)};
}

GroupEl QuotientResult::section(const GroupEl& q) const {
  if (!group.contains(q))
    throw std::invalid_argument("QuotientResult::section: element not in quotient");
  IntVector y = IntVector::Zero(domain.gen_count());
  for (size_t i = 0; i < free_pos.size(); ++i) y[free_pos[i]] = q.free[static_cast<Index>(i)];
  for (size_t i = 0; i < tors_pos.size(); ++i) y[tors_pos[i]] = q.tors[static_cast<Index>(i)];
  return domain.from_lift(snf.u_inv * y);
}

bool is_torsion(const FgAbGroup& g, const GroupEl& el) {
  if (!g.contains(el)) throw std::invalid_argument("is_torsion: element not in group");
  return is_zero(el.free);
}

GroupEl canonical_rep(const GroupHom& proj, const GroupEl& q) {
  return proj.codomain().reduce(q);
}

std::optional<std::vector<Int>> subgroup_membership(const FgAbGroup& g,
                                                    const std::vector<GroupEl>& gens,
                                                    const GroupEl& el) {
  if (!g.contains(el)) throw std::invalid_argument("subgroup_membership: element not in group");
  IntMatrix rel = relation_matrix_with(g, gens);
  auto sol = solve_linear(rel, g.lift(el));
  if (!sol) return std::nullopt;
  std::vector<Int> coeffs(gens.size());
  for (size_t j = 0; j < gens.size(); ++j)
    coeffs[j] = (*sol)[g.torsion_count() + static_cast<Index>(j)];
  return coeffs;
}

}  // namespace swc
