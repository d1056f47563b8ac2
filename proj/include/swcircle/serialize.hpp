#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "swcircle/fourman.hpp"
#include "swcircle/swcalc.hpp"

namespace swc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input document; `path` points at the offending field ("$.a.b[2]").
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// ---- parsing (throws SchemaError on malformed documents) ----

Int parse_int(const Json& j, const std::string& path);
IntVector parse_int_vector(const Json& j, const std::string& path);
IntMatrix parse_int_matrix(const Json& j, const std::string& path);
FgAbGroup parse_group(const Json& j, const std::string& path);
/// Coordinates are reduced into the group; sizes must match.
GroupEl parse_element(const FgAbGroup& g, const Json& j, const std::string& path);
GroupRingElem parse_poly(const Json& j, const std::string& path);
OrbifoldPtr parse_orbifold(const Json& j, const std::string& path);
PicardElem parse_picard(OrbifoldPtr orbifold, const Json& j, const std::string& path);
SeifertMatrix parse_seifert(const Json& j, const std::string& path);

const Json& require_field(const Json& j, const char* key, const std::string& path);

// ---- emission (deterministic: canonical term order, fixed key order) ----

Json int_to_json(const Int& n);          // number when it fits, decimal string otherwise
Json int_string_to_json(const Int& n);   // always a decimal string (coefficients)
Json vector_to_json(const IntVector& v);
Json matrix_to_json(const IntMatrix& m);
Json group_to_json(const FgAbGroup& g);
Json element_to_json(const GroupEl& el);
Json poly_to_json(const GroupRingElem& p);
Json orbifold_to_json(const Orbifold3& y);
Json picard_to_json(const PicardElem& l);
Json gluing_to_json(const GluingData& g);
Json cohomology_to_json(const CohomologyReport& report);
Json intersection_form_to_json(const IntersectionForm& form);
Json validation_to_json(const TheoremAValidation& v);

}  // namespace swc
