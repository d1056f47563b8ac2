#include "swcircle/groupring.hpp"

#include <stdexcept>

namespace swc {

namespace {

void require_same_group(const GroupRingElem& p, const GroupRingElem& q, const char* op) {
  if (p.group() != q.group())
    throw std::invalid_argument(std::string(op) + ": operands live over different groups");
}

}  // namespace

GroupRingElem GroupRingElem::monomial(const FgAbGroup& g, const GroupEl& exp, const Int& coef) {
  GroupRingElem p(g);
  if (!g.contains(exp)) throw std::invalid_argument("monomial: exponent not in group");
  p.accumulate(exp, coef);
  return p;
}

Int GroupRingElem::coefficient_sum() const {
  Int s = 0;
  for (const auto& [exp, coef] : terms_) s += coef;
  return s;
}

void GroupRingElem::accumulate(const GroupEl& exp, const Int& coef) {
  if (coef == 0) return;
  GroupEl key = group_.reduce(exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElem add(const GroupRingElem& p, const GroupRingElem& q) {
  require_same_group(p, q, "add");
  GroupRingElem r = p;
  for (const auto& [exp, coef] : q.terms()) r.accumulate(exp, coef);
  return r;
}

GroupRingElem neg(const GroupRingElem& p) {
  GroupRingElem r(p.group());
  for (const auto& [exp, coef] : p.terms()) r.accumulate(exp, -coef);
  return r;
}

GroupRingElem sub(const GroupRingElem& p, const GroupRingElem& q) {
  require_same_group(p, q, "sub");
  return add(p, neg(q));
}

GroupRingElem mul(const GroupRingElem& p, const GroupRingElem& q) {
  require_same_group(p, q, "mul");
  const FgAbGroup& g = p.group();
  GroupRingElem r(g);
  for (const auto& [e1, c1] : p.terms())
    for (const auto& [e2, c2] : q.terms()) r.accumulate(g.add(e1, e2), c1 * c2);
  return r;
}

GroupRingElem scale(const Int& n, const GroupRingElem& p) {
  GroupRingElem r(p.group());
  for (const auto& [exp, coef] : p.terms()) r.accumulate(exp, n * coef);
  return r;
}

GroupRingElem fold(const GroupRingElem& p, const GroupHom& proj) {
  if (p.group() != proj.domain())
    throw std::invalid_argument("fold: polynomial group does not match projection domain");
  GroupRingElem r(proj.codomain());
  for (const auto& [exp, coef] : p.terms()) r.accumulate(proj.apply(exp), coef);
  return r;
}

bool is_symmetric(const GroupRingElem& p) {
  const FgAbGroup& g = p.group();
  for (const auto& [exp, coef] : p.terms())
    if (coefficient(p, g.neg(exp)) != coef) return false;
  return true;
}

Int coefficient(const GroupRingElem& p, const GroupEl& g) {
  auto it = p.terms().find(p.group().reduce(g));
  return it == p.terms().end() ? Int(0) : it->second;
}

}  // namespace swc
