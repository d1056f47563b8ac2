#include "swcircle/serialize.hpp"

#include <utility>

namespace swc {

namespace {

std::string at(const std::string& path, const char* key) { return path + "." + key; }
std::string at(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

const Json& require_field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing required field");
  return *it;
}

Int parse_int(const Json& j, const std::string& path) {
  if (j.is_number_unsigned())
    return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw SchemaError(path, "not a decimal integer string");
    }
  }
  throw SchemaError(path, "expected an integer or a decimal string");
}

IntVector parse_int_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of integers");
  IntVector v(static_cast<Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = parse_int(j[i], at(path, i));
  return v;
}

IntMatrix parse_int_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of rows");
  const size_t rows = j.size();
  size_t cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw SchemaError(at(path, size_t(0)), "expected a row array");
    cols = j[0].size();
  }
  IntMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw SchemaError(at(path, i), "rows must be arrays of equal length");
    for (size_t k = 0; k < cols; ++k)
      m(static_cast<Index>(i), static_cast<Index>(k)) = parse_int(j[i][k], at(at(path, i), k));
  }
  return m;
}

FgAbGroup parse_group(const Json& j, const std::string& path) {
  const Json& rank = require_field(j, "rank", path);
  if (!rank.is_number_integer() || rank.get<long long>() < 0)
    throw SchemaError(at(path, "rank"), "expected a nonnegative integer");
  const Json& tors = require_field(j, "torsion", path);
  if (!tors.is_array()) throw SchemaError(at(path, "torsion"), "expected an array");
  std::vector<Int> torsion;
  torsion.reserve(tors.size());
  for (size_t i = 0; i < tors.size(); ++i)
    torsion.push_back(parse_int(tors[i], at(at(path, "torsion"), i)));
  return FgAbGroup(static_cast<Index>(rank.get<long long>()), std::move(torsion));
}

GroupEl parse_element(const FgAbGroup& g, const Json& j, const std::string& path) {
  IntVector free = parse_int_vector(require_field(j, "free", path), at(path, "free"));
  IntVector tors = parse_int_vector(require_field(j, "tors", path), at(path, "tors"));
  if (free.size() != g.free_rank())
    throw SchemaError(at(path, "free"), "wrong number of free coordinates");
  if (tors.size() != g.torsion_count())
    throw SchemaError(at(path, "tors"), "wrong number of torsion coordinates");
  return g.reduce(GroupEl{std::move(free), std::move(tors)});
}

GroupRingElem parse_poly(const Json& j, const std::string& path) {
  FgAbGroup g = parse_group(require_field(j, "group", path), at(path, "group"));
  const Json& terms = require_field(j, "terms", path);
  if (!terms.is_array()) throw SchemaError(at(path, "terms"), "expected an array of terms");
  GroupRingElem p(g);
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string tpath = at(at(path, "terms"), i);
    GroupEl exp = parse_element(g, require_field(terms[i], "exp", tpath), at(tpath, "exp"));
    Int coef = parse_int(require_field(terms[i], "coef", tpath), at(tpath, "coef"));
    p.accumulate(exp, coef);
  }
  return p;
}

OrbifoldPtr parse_orbifold(const Json& j, const std::string& path) {
  const Json& b1j = require_field(j, "b1", path);
  if (!b1j.is_number_integer() || b1j.get<long long>() < 0)
    throw SchemaError(at(path, "b1"), "expected a nonnegative integer");
  const Index b1 = static_cast<Index>(b1j.get<long long>());

  FgAbGroup h2 = parse_group(require_field(j, "h2", path), at(path, "h2"));

  const Json& locij = require_field(j, "loci", path);
  if (!locij.is_array()) throw SchemaError(at(path, "loci"), "expected an array");
  std::vector<SingularLocus> loci;
  loci.reserve(locij.size());
  for (size_t i = 0; i < locij.size(); ++i) {
    const std::string lpath = at(at(path, "loci"), i);
    Int alpha = parse_int(require_field(locij[i], "alpha", lpath), at(lpath, "alpha"));
    GroupEl kappa =
        parse_element(h2, require_field(locij[i], "kappa", lpath), at(lpath, "kappa"));
    loci.push_back(SingularLocus{std::move(alpha), std::move(kappa)});
  }

  IntMatrix pairing = parse_int_matrix(require_field(j, "pairing", path), at(path, "pairing"));

  const Json& cupj = require_field(j, "cup11", path);
  if (!cupj.is_array()) throw SchemaError(at(path, "cup11"), "expected an array of matrices");
  std::vector<IntMatrix> cup;
  cup.reserve(cupj.size());
  for (size_t i = 0; i < cupj.size(); ++i)
    cup.push_back(parse_int_matrix(cupj[i], at(at(path, "cup11"), i)));

  return std::make_shared<const Orbifold3>(std::move(h2), b1, std::move(loci), std::move(pairing),
                                           std::move(cup));
}

PicardElem parse_picard(OrbifoldPtr orbifold, const Json& j, const std::string& path) {
  GroupEl c = parse_element(orbifold->h2(), require_field(j, "c", path), at(path, "c"));
  const Json& betasj = require_field(j, "betas", path);
  if (!betasj.is_array()) throw SchemaError(at(path, "betas"), "expected an array");
  std::vector<Int> betas;
  betas.reserve(betasj.size());
  for (size_t i = 0; i < betasj.size(); ++i)
    betas.push_back(parse_int(betasj[i], at(at(path, "betas"), i)));
  return PicardElem(std::move(orbifold), std::move(c), std::move(betas));
}

SeifertMatrix parse_seifert(const Json& j, const std::string& path) {
  return SeifertMatrix(parse_int_matrix(j, path));
}

Json int_to_json(const Int& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json int_string_to_json(const Int& n) { return Json(n.get_str()); }

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(int_to_json(v[i]));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json group_to_json(const FgAbGroup& g) {
  Json torsion = Json::array();
  for (const Int& d : g.torsion()) torsion.push_back(int_to_json(d));
  return Json{{"rank", g.free_rank()}, {"torsion", std::move(torsion)}};
}

Json element_to_json(const GroupEl& el) {
  return Json{{"free", vector_to_json(el.free)}, {"tors", vector_to_json(el.tors)}};
}

Json poly_to_json(const GroupRingElem& p) {
  Json terms = Json::array();
  for (const auto& [exp, coef] : p.terms())
    terms.push_back(Json{{"exp", element_to_json(exp)}, {"coef", int_string_to_json(coef)}});
  return Json{{"group", group_to_json(p.group())}, {"terms", std::move(terms)}};
}

Json orbifold_to_json(const Orbifold3& y) {
  Json loci = Json::array();
  for (const SingularLocus& l : y.loci())
    loci.push_back(Json{{"alpha", int_to_json(l.alpha)}, {"kappa", element_to_json(l.kappa)}});
  Json cup = Json::array();
  for (const IntMatrix& slice : y.cup11()) cup.push_back(matrix_to_json(slice));
  return Json{{"b1", y.b1()},
              {"h2", group_to_json(y.h2())},
              {"loci", std::move(loci)},
              {"pairing", matrix_to_json(y.pairing())},
              {"cup11", std::move(cup)}};
}

Json picard_to_json(const PicardElem& l) {
  Json betas = Json::array();
  for (const Int& b : l.betas()) betas.push_back(int_to_json(b));
  return Json{{"c", element_to_json(l.c())}, {"betas", std::move(betas)}};
}

Json gluing_to_json(const GluingData& g) {
  Json out = Json::array();
  for (const LocusGluing& l : g)
    out.push_back(Json{{"meridian_coeff", int_to_json(l.meridian_coeff)},
                       {"fiber_coeff", int_to_json(l.fiber_coeff)},
                       {"d", int_to_json(l.d)}});
  return out;
}

Json cohomology_to_json(const CohomologyReport& report) {
  return Json{{"h1", group_to_json(report.h1)},
              {"h2", group_to_json(report.h2)},
              {"h2_pullback_part", group_to_json(report.h2_pullback_part)},
              {"h2_kernel_rank", report.h2_kernel_rank},
              {"b_plus", report.b_plus},
              {"b_minus", report.b_minus},
              {"signature", report.signature},
              {"euler_char", report.euler_char},
              {"chi_is_torsion", report.chi_is_torsion}};
}

Json intersection_form_to_json(const IntersectionForm& form) {
  Json blocks = Json::array();
  for (const IntersectionFormBlock& b : form.blocks)
    blocks.push_back(Json{{"pullback_square", b.pullback_square},
                          {"off_diagonal", b.off_diagonal},
                          {"d", b.d ? int_to_json(*b.d) : Json("UNDETERMINED")}});
  return Json{{"blocks", std::move(blocks)}};
}

Json validation_to_json(const TheoremAValidation& v) {
  Json offenders = Json::array();
  for (const GroupEl& el : v.offenders) offenders.push_back(element_to_json(el));
  return Json{{"mode", v.strict ? "strict" : "advisory"},
              {"accepted", v.accepted},
              {"offenders", std::move(offenders)},
              {"note", v.note}};
}

}  // namespace swc
