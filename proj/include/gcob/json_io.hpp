#pragma once

#include <string>

#include <json.hpp>

#include "gcob/catalog.hpp"
#include "gcob/cospan.hpp"
#include "gcob/fin.hpp"
#include "gcob/gaf.hpp"
#include "gcob/generators.hpp"
#include "gcob/grading.hpp"
#include "gcob/morphism.hpp"
#include "gcob/normalize.hpp"

namespace gcob {

using Json = nlohmann::json;

// Serialization. Keys are emitted in alphabetical order by the json type,
// which keeps output byte-stable across runs.
Json encode(const Gaf& g);
Json encode(const FinMap& f);
Json encode(const GafMorphism& f);
Json encode(const Coloring& c);
Json encode(const ColoredMorphism& cm);
Json encode(const CospanNF& nf);
Json encode(const NerveData& nerve);
Json encode(const Reduction& red);
Json encode(const std::vector<AxiomReport>& reports);

// Parsing. Unknown keys are ignored; missing keys, wrong types and negative
// numbers throw MalformedJson. Parsed objects are NOT validated here.
Gaf parse_gaf(const Json& j);
FinMap parse_finmap(const Json& j);
GafMorphism parse_morphism(const Json& j);
Coloring parse_coloring(const Json& j);
ColoredMorphism parse_colored_morphism(const Json& j);

// Parses text to a Json value, mapping parse failures to MalformedJson.
Json parse_text(const std::string& text);

}  // namespace gcob
