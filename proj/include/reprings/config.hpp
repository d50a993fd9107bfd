#pragma once

// Loading of built-in datum labels, datum files and curated completion cases.

#include <cstddef>
#include <string>
#include <vector>

#include "reprings/completion.hpp"
#include "reprings/laurent.hpp"
#include "reprings/root_datum.hpp"
#include "reprings/spectrum.hpp"

namespace reprings {

// type in {A, B, C, D, G2, GL, T}; variant is ignored for GL and T.
RootDatum builtin_datum(const std::string& type, std::size_t rank, const std::string& variant);

std::string read_text_file(const std::string& path);

// Either {"type", "rank", "variant"} or {"rank", "simple_roots", "simple_coroots"}.
RootDatum datum_from_spec_text(const std::string& json_text);

// {"num_gens", "generator_images", "relations", "inverted_gens"}; images are
// parsed in the variables x1..x{rank}, relations in y1..y{num_gens}.
Presentation presentation_from_json_text(const std::string& json_text, std::size_t rank);

struct CuratedCase {
  RootDatum datum;
  EvalPoint point;
  Presentation presentation_g;
  Presentation presentation_z;
  std::vector<LaurentPoly> restriction;  // in the generators of presentation_z
  std::size_t j_max = 1;
};

CuratedCase curated_case_from_json_text(const std::string& json_text);
CuratedCase load_curated_case(const std::string& path);

}  // namespace reprings
