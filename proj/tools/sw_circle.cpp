// sw-circle: JSON-in / JSON-out front end for the circle-action
// Seiberg-Witten pipeline. Exit codes: 0 success, 1 validation error,
// 2 schema or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "swcircle/serialize.hpp"

namespace {

using swc::Json;

struct JobSpec {
  std::string command;
  std::string input_path;   // file path, "-" for stdin, or an inline document
  std::string output_path;  // file path or "-" for stdout
  bool pretty = false;
};

std::string read_input(const JobSpec& job) {
  if (!job.input_path.empty() && job.input_path.front() == '{') return job.input_path;
  if (job.input_path.empty() || job.input_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(job.input_path);
  if (!in) throw swc::SchemaError("$", "cannot open input file: " + job.input_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const JobSpec& job, const Json& doc) {
  std::string text = job.pretty ? doc.dump(2) : doc.dump();
  text.push_back('\n');
  if (job.output_path.empty() || job.output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(job.output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + job.output_path);
  out << text;
}

Json parse_document(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw swc::SchemaError("$", "input is not valid JSON");
  return doc;
}

Json with_schema(Json body) {
  Json out;
  out["schema_version"] = swc::kSchemaVersion;
  for (auto& [key, value] : body.items()) out[key] = std::move(value);
  return out;
}

// ---- subcommands ----

Json run_picard(const Json& in) {
  swc::OrbifoldPtr y = swc::parse_orbifold(swc::require_field(in, "orbifold", "$"), "$.orbifold");
  const Json& elems = swc::require_field(in, "elements", "$");
  if (!elems.is_array()) throw swc::SchemaError("$.elements", "expected an array");

  swc::PicGroup pic = swc::pic_group(y);
  swc::PicardElem sum = swc::PicardElem::zero(y);
  Json images = Json::array(), desing = Json::array(), gluing = Json::array(),
       smooth = Json::array();
  for (size_t i = 0; i < elems.size(); ++i) {
    swc::PicardElem l =
        swc::parse_picard(y, elems[i], "$.elements[" + std::to_string(i) + "]");
    images.push_back(swc::element_to_json(pic.to_group(l)));
    desing.push_back(swc::element_to_json(swc::desingularize(l)));
    gluing.push_back(swc::gluing_to_json(swc::unit_circle_gluing(l)));
    smooth.push_back(swc::is_smooth_total_space(l));
    sum = swc::pic_add(sum, l);
  }
  return with_schema(Json{{"group", swc::group_to_json(pic.group())},
                          {"images", std::move(images)},
                          {"sum", swc::picard_to_json(sum)},
                          {"desingularization", std::move(desing)},
                          {"gluing", std::move(gluing)},
                          {"smooth", std::move(smooth)}});
}

Json run_cohomology(const Json& in) {
  swc::OrbifoldPtr y = swc::parse_orbifold(swc::require_field(in, "orbifold", "$"), "$.orbifold");
  swc::PicardElem chi = swc::parse_picard(y, swc::require_field(in, "chi", "$"), "$.chi");
  swc::CircleFourManifold x(chi);
  Json body = swc::cohomology_to_json(x.cohomology_report());
  body["intersection_form"] = swc::intersection_form_to_json(swc::intersection_form(x));
  return with_schema(std::move(body));
}

Json run_sw3(const Json& in) {
  if (in.contains("whitehead")) {
    const Json& w = in["whitehead"];
    swc::GroupRingElem d1 =
        swc::parse_poly(swc::require_field(w, "delta1", "$.whitehead"), "$.whitehead.delta1");
    swc::GroupRingElem d2 =
        swc::parse_poly(swc::require_field(w, "delta2", "$.whitehead"), "$.whitehead.delta2");
    swc::SW3Invariant sw3 = swc::whitehead_construction(d1, d2);
    return with_schema(Json{{"orbifold", swc::orbifold_to_json(*sw3.orbifold)},
                            {"poly", swc::poly_to_json(sw3.poly)},
                            {"symmetric", swc::is_symmetric(sw3.poly)}});
  }
  swc::OrbifoldPtr y = swc::parse_orbifold(swc::require_field(in, "orbifold", "$"), "$.orbifold");
  swc::GroupRingElem poly = swc::parse_poly(swc::require_field(in, "poly", "$"), "$.poly");
  swc::SW3Invariant sw3 = swc::make_sw3(y, std::move(poly));
  return with_schema(Json{{"orbifold", swc::orbifold_to_json(*sw3.orbifold)},
                          {"poly", swc::poly_to_json(sw3.poly)},
                          {"symmetric", swc::is_symmetric(sw3.poly)}});
}

Json run_sw4(const Json& in) {
  swc::OrbifoldPtr y = swc::parse_orbifold(swc::require_field(in, "orbifold", "$"), "$.orbifold");
  swc::PicardElem chi = swc::parse_picard(y, swc::require_field(in, "chi", "$"), "$.chi");
  swc::GroupRingElem poly = swc::parse_poly(swc::require_field(in, "sw3", "$"), "$.sw3");
  swc::CircleFourManifold x(chi);
  swc::SW4Invariant sw4 = swc::sw4_from_sw3(x, swc::make_sw3(y, std::move(poly)));
  return with_schema(Json{{"group", swc::group_to_json(sw4.poly.group())},
                          {"poly", swc::poly_to_json(sw4.poly)},
                          {"chamber_note", swc::to_string(sw4.chamber_note)},
                          {"b_plus", x.cohomology_report().b_plus},
                          {"simple_type", swc::check_simple_type(sw4)}});
}

Json run_alexander(const Json& in) {
  swc::SeifertMatrix v =
      swc::parse_seifert(swc::require_field(in, "seifert", "$"), "$.seifert");
  return with_schema(Json{{"alexander", swc::poly_to_json(swc::alexander_from_seifert(v))}});
}

Json run_example_63(const Json&) {
  swc::IntMatrix v(4, 4);
  v << -1, 0, -1, -1,
       -1, -1, -1, -1,
       -1, -1, 0, 0,
       -1, -1, -1, 0;
  swc::GroupRingElem delta = swc::alexander_from_seifert(swc::SeifertMatrix(v));
  swc::SW3Invariant sw3 = swc::whitehead_construction(delta, delta);

  // chi = 4 PD(m_1): the first meridian dual, four times
  swc::OrbifoldPtr y = sw3.orbifold;
  swc::IntVector c_free(2);
  c_free << 4, 0;
  swc::PicardElem chi(y, y->h2().element(std::move(c_free), swc::IntVector(0)), {});
  swc::CircleFourManifold x(chi);
  swc::SW4Invariant sw4 = swc::sw4_from_sw3(x, sw3);

  return with_schema(Json{{"seifert", swc::matrix_to_json(v)},
                          {"alexander", swc::poly_to_json(delta)},
                          {"orbifold", swc::orbifold_to_json(*y)},
                          {"chi", swc::picard_to_json(chi)},
                          {"sw3", swc::poly_to_json(sw3.poly)},
                          {"sw4", swc::poly_to_json(sw4.poly)},
                          {"sw4_group", swc::group_to_json(sw4.poly.group())},
                          {"chamber_note", swc::to_string(sw4.chamber_note)},
                          {"b_plus", x.cohomology_report().b_plus},
                          {"wall_crossing", swc::wall_crossing_invariant(x)}});
}

Json run_validate(const Json& in, bool& rejected) {
  swc::OrbifoldPtr y = swc::parse_orbifold(swc::require_field(in, "orbifold", "$"), "$.orbifold");
  swc::PicardElem chi = swc::parse_picard(y, swc::require_field(in, "chi", "$"), "$.chi");
  swc::GroupRingElem table = swc::parse_poly(swc::require_field(in, "table", "$"), "$.table");
  swc::CircleFourManifold x(chi);
  swc::TheoremAValidation result = swc::theorem_a_validate(x, table);
  rejected = result.strict && !result.accepted;
  return with_schema(swc::validation_to_json(result));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seiberg-Witten invariants of 4-manifolds with fixed-point-free circle actions"};
  app.set_version_flag("--version",
                       "sw-circle 1.0.0 (schema " + std::to_string(swc::kSchemaVersion) + ")");
  app.require_subcommand(1);

  JobSpec job;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"picard", "Picard-group arithmetic for a 3-orbifold"},
      {"cohomology", "cohomology of the unit circle bundle of chi"},
      {"sw3", "assemble/validate an SW^3 polynomial (explicit or doubled-knot form)"},
      {"sw4", "fold an SW^3 polynomial modulo chi into SW^4"},
      {"alexander", "Alexander polynomial of a Seifert matrix"},
      {"example-63", "built-in reproduction of the doubled 6_3 example"},
      {"validate", "check a proposed invariant table against the pullback restriction"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--input,-i", job.input_path,
                    "input file, '-' for stdin, or an inline JSON document");
    sub->add_option("--output,-o", job.output_path, "output file ('-' or empty for stdout)");
    sub->add_flag("--pretty", job.pretty, "pretty-print the output document");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed invocations count as schema errors
  }
  job.command = app.get_subcommands().front()->get_name();

  try {
    Json in;
    if (job.command != "example-63") in = parse_document(read_input(job));

    bool rejected = false;
    Json out;
    if (job.command == "picard") out = run_picard(in);
    else if (job.command == "cohomology") out = run_cohomology(in);
    else if (job.command == "sw3") out = run_sw3(in);
    else if (job.command == "sw4") out = run_sw4(in);
    else if (job.command == "alexander") out = run_alexander(in);
    else if (job.command == "example-63") out = run_example_63(in);
    else if (job.command == "validate") out = run_validate(in, rejected);

    write_output(job, out);
    return rejected ? 1 : 0;
  } catch (const swc::SchemaError& e) {
    Json err{{"error", {{"kind", "schema"}, {"path", e.path()}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json err{{"error", {{"kind", "validation"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
