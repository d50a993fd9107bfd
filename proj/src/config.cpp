#include "reprings/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "reprings/errors.hpp"

namespace reprings {

using nlohmann::json;

RootDatum builtin_datum(const std::string& type, std::size_t rank, const std::string& variant) {
  if (type == "GL") return gl_datum(rank);
  if (type == "T") return torus_datum(rank);
  return standard_datum(type, rank, parse_variant(variant));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

RootDatum datum_from_json(const json& j) {
  if (j.contains("type")) {
    const auto rank = j.at("rank").get<std::int64_t>();
    if (rank < 0) throw InputError("negative rank");
    return builtin_datum(j.at("type").get<std::string>(), static_cast<std::size_t>(rank),
                         j.value("variant", std::string("simply_connected")));
  }
  return datum_from_json_text(j.dump());
}

Presentation presentation_from_json(const json& j, std::size_t rank) {
  Presentation p;
  p.num_gens = j.at("num_gens").get<std::size_t>();
  for (const auto& s : j.at("generator_images"))
    p.generator_images.push_back(parse_laurent(s.get<std::string>(), rank, "x"));
  for (const auto& s : j.value("relations", json::array()))
    p.relations.push_back(parse_laurent(s.get<std::string>(), p.num_gens, "y"));
  p.inverted_gens = j.value("inverted_gens", std::vector<std::size_t>{});
  p.check();
  return p;
}

}  // namespace

RootDatum datum_from_spec_text(const std::string& json_text) {
  const json j = parse_json(json_text, "root datum");
  try {
    return datum_from_json(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("root datum: ") + e.what());
  }
}

Presentation presentation_from_json_text(const std::string& json_text, std::size_t rank) {
  const json j = parse_json(json_text, "presentation");
  try {
    return presentation_from_json(j, rank);
  } catch (const json::exception& e) {
    throw InputError(std::string("presentation: ") + e.what());
  }
}

CuratedCase curated_case_from_json_text(const std::string& json_text) {
  const json j = parse_json(json_text, "curated case");
  try {
    CuratedCase c;
    c.datum = datum_from_json(j.at("datum"));
    c.point = parse_point(j.at("point").get<std::vector<std::string>>());
    if (c.point.rank() != c.datum.rank()) throw InputError("curated case: point rank mismatch");
    c.presentation_g = presentation_from_json(j.at("presentation_G"), c.datum.rank());
    c.presentation_z = presentation_from_json(j.at("presentation_Z"), c.datum.rank());
    for (const auto& s : j.at("restriction"))
      c.restriction.push_back(parse_laurent(s.get<std::string>(), c.presentation_z.num_gens, "y"));
    c.j_max = j.at("j_max").get<std::size_t>();
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("curated case: ") + e.what());
  }
}

CuratedCase load_curated_case(const std::string& path) {
  return curated_case_from_json_text(read_text_file(path));
}

}  // namespace reprings
