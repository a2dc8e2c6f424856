#include "gcob/json_io.hpp"

namespace gcob {

namespace {

std::size_t get_u(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError("MalformedJson", std::string("missing key ") + key);
  }
  const Json& v = j[key];
  if (!v.is_number_unsigned()) {
    throw DomainError("MalformedJson",
                      std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> get_uvec(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError("MalformedJson", std::string("missing key ") + key);
  }
  const Json& v = j[key];
  if (!v.is_array()) {
    throw DomainError("MalformedJson", std::string(key) + " must be an array");
  }
  std::vector<std::size_t> out;
  out.reserve(v.size());
  for (const Json& x : v) {
    if (!x.is_number_unsigned()) {
      throw DomainError("MalformedJson",
                        std::string(key) +
                            " entries must be non-negative integers");
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

const Json& get_obj(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError("MalformedJson", std::string("missing key ") + key);
  }
  return j[key];
}

}  // namespace

Json encode(const Gaf& g) {
  return Json{{"a", g.a_size},   {"b", g.b_size},       {"v", g.v_size},
              {"h", g.h_size},   {"rho", g.rho},        {"sigma", g.sigma},
              {"upsilon", g.upsilon}};
}

Json encode(const FinMap& f) {
  return Json{{"domain", f.domain_size},
              {"codomain", f.codomain_size},
              {"values", f.values}};
}

Json encode(const GafMorphism& f) {
  return Json{{"source", encode(f.source)}, {"target", encode(f.target)},
              {"map_a", f.map_a},           {"map_b", f.map_b},
              {"map_v", f.map_v},           {"map_h", f.map_h}};
}

Json encode(const Coloring& c) {
  std::vector<std::size_t> color_v(c.color.values.begin(),
                                   c.color.values.begin() + c.base.v_size);
  std::vector<std::size_t> color_e(c.color.values.begin() + c.base.v_size,
                                   c.color.values.end());
  return Json{{"gaf", encode(c.base)},
              {"palette", c.palette_size},
              {"color_v", color_v},
              {"color_e", color_e}};
}

Json encode(const ColoredMorphism& cm) {
  return Json{{"morphism", encode(cm.underlying)},
              {"palette", cm.marking.codomain_size},
              {"mark", cm.marking.values}};
}

Json encode(const CospanNF& nf) {
  Json comps = Json::array();
  for (const NFComponent& c : nf.components) {
    comps.push_back(Json{
        {"a_legs", c.a_legs}, {"b_legs", c.b_legs}, {"rank", c.rank}});
  }
  return Json{{"components", comps}};
}

Json encode(const NerveData& nerve) {
  Json objects = Json::array();
  for (const Gaf& g : nerve.objects) objects.push_back(encode(g));
  Json morphisms = Json::array();
  for (const NerveMorphism& m : nerve.morphisms) {
    morphisms.push_back(
        Json{{"src", m.src}, {"tgt", m.tgt}, {"map", encode(m.map)}});
  }
  Json compose = Json::array();
  for (const auto& row : nerve.compose) {
    compose.push_back(Json::array({row[0], row[1], row[2]}));
  }
  return Json{{"objects", objects},
              {"morphisms", morphisms},
              {"compose", compose},
              {"identities", nerve.identities}};
}

Json encode(const Reduction& red) {
  return Json{{"result", encode(red.result)},
              {"morphism", encode(red.morphism)}};
}

Json encode(const std::vector<AxiomReport>& reports) {
  Json out = Json::array();
  for (const AxiomReport& r : reports) {
    out.push_back(Json{{"axiom", r.axiom},
                       {"pass", r.pass},
                       {"witness", Json{{"detail", r.detail}}}});
  }
  return out;
}

Gaf parse_gaf(const Json& j) {
  Gaf g;
  g.a_size = get_u(j, "a");
  g.b_size = get_u(j, "b");
  g.v_size = get_u(j, "v");
  g.h_size = get_u(j, "h");
  g.rho = get_uvec(j, "rho");
  g.sigma = get_uvec(j, "sigma");
  g.upsilon = get_uvec(j, "upsilon");
  return g;
}

FinMap parse_finmap(const Json& j) {
  FinMap f;
  f.domain_size = get_u(j, "domain");
  f.codomain_size = get_u(j, "codomain");
  f.values = get_uvec(j, "values");
  return f;
}

GafMorphism parse_morphism(const Json& j) {
  GafMorphism f;
  f.source = parse_gaf(get_obj(j, "source"));
  f.target = parse_gaf(get_obj(j, "target"));
  f.map_a = get_uvec(j, "map_a");
  f.map_b = get_uvec(j, "map_b");
  f.map_v = get_uvec(j, "map_v");
  f.map_h = get_uvec(j, "map_h");
  return f;
}

Coloring parse_coloring(const Json& j) {
  Coloring c;
  c.base = parse_gaf(get_obj(j, "gaf"));
  c.palette_size = get_u(j, "palette");
  std::vector<std::size_t> color_v = get_uvec(j, "color_v");
  std::vector<std::size_t> color_e = get_uvec(j, "color_e");
  c.color.domain_size = color_v.size() + color_e.size();
  c.color.codomain_size = c.palette_size;
  c.color.values = std::move(color_v);
  c.color.values.insert(c.color.values.end(), color_e.begin(), color_e.end());
  return c;
}

ColoredMorphism parse_colored_morphism(const Json& j) {
  ColoredMorphism cm;
  cm.underlying = parse_morphism(get_obj(j, "morphism"));
  cm.marking.values = get_uvec(j, "mark");
  cm.marking.domain_size = cm.marking.values.size();
  cm.marking.codomain_size = get_u(j, "palette");
  return cm;
}

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw DomainError("MalformedJson", "input is not valid JSON");
  }
  return j;
}

}  // namespace gcob
