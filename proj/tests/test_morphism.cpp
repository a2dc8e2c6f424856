#include <doctest.h>

#include <functional>
#include <set>

#include "gcob/catalog.hpp"
#include "gcob/grading.hpp"
#include "gcob/monoidal.hpp"
#include "gcob/morphism.hpp"
#include "helpers.hpp"

using gcob::DomainError;
using gcob::Gaf;
using gcob::GafMorphism;
using namespace fixtures;

namespace {

std::string error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  return "";
}

Gaf beta_source() { return Gaf{1, 1, 1, 2, {1}, {0, 1}, {1, 0}}; }

// The collapse of the marked segment onto its attaching point.
GafMorphism beta_collapse() {
  GafMorphism f;
  f.source = beta_source();
  f.target = gcob::identity_gaf(1);
  f.map_a = {0};
  f.map_b = {0};
  f.map_v = {0};
  f.map_h = {0, 0};
  return f;
}

}  // namespace

TEST_CASE("validate_morphism accepts collapses and identities") {
  CHECK_NOTHROW(gcob::validate_morphism(beta_collapse()));
  CHECK_NOTHROW(gcob::identity_morphism(loop()));
  CHECK_NOTHROW(gcob::identity_morphism(dumbbell()));
  CHECK(gcob::identity_morphism(loop()).map_h ==
        std::vector<std::size_t>{1, 2});
}

TEST_CASE("collapsing a loop is not a tree collapse") {
  GafMorphism f;
  f.source = loop();
  f.target = point();
  f.map_v = {0};
  f.map_h = {0, 0};
  CHECK(error_code([&] { gcob::validate_morphism(f); }) == "PreimageNotTree");
  auto err = gcob::morphism_error(f);
  REQUIRE(err.has_value());
  CHECK(err->first == "PreimageNotTree");
}

TEST_CASE("each morphism condition has its own error code") {
  // Wrong map length.
  GafMorphism f = beta_collapse();
  f.map_h = {0};
  CHECK(error_code([&] { gcob::validate_morphism(f); }) ==
        "RestrictionViolated");

  // Swapping one edge's halves without permission from sigma.
  GafMorphism g = gcob::identity_morphism(segment());
  std::swap(g.map_h[0], g.map_h[1]);
  CHECK(error_code([&] { gcob::validate_morphism(g); }) == "NotEquivariant");

  // Two parallel edges onto one edge: the spare edge has nowhere to go.
  GafMorphism h = gcob::identity_morphism(two_cycle());
  h.map_h = {2, 3, 2, 3};
  CHECK(error_code([&] { gcob::validate_morphism(h); }) ==
        "HalfEdgeNotSingleton");

  // An isolated inner vertex dropped onto the attaching point is a second
  // component of its fiber, with no attaching vertex of its own.
  GafMorphism k;
  k.source = Gaf{1, 0, 1, 0, {}, {}, {}};
  k.target = Gaf{1, 0, 0, 0, {}, {}, {}};
  k.map_a = {0};
  k.map_v = {0};
  CHECK(error_code([&] { gcob::validate_morphism(k); }) ==
        "PreimageWrongBasing");
}

TEST_CASE("vertical composition is validated function composition") {
  GafMorphism idc = gcob::identity_morphism(two_cycle());
  auto coll = gcob::collapse_edges(two_cycle(), {0});
  CHECK(gcob::compose_v(coll.proj, idc) == coll.proj);
  CHECK(gcob::compose_v(gcob::identity_morphism(coll.quotient), coll.proj) ==
        coll.proj);

  CHECK(error_code([&] { gcob::compose_v(coll.proj, coll.proj); }) ==
        "SourceTargetMismatch");
}

TEST_CASE("two single edge collapses of a path compose to the full collapse") {
  Gaf p = path_gaf(2);
  auto first = gcob::collapse_edges(p, {0});
  auto second = gcob::collapse_edges(first.quotient, {0});
  GafMorphism both = gcob::compose_v(second.proj, first.proj);
  auto direct = gcob::collapse_edges(p, {0, 1});
  CHECK(both == direct.proj);
  CHECK(direct.quotient == point());
}

TEST_CASE("collapse_edges on the marked segment produces the based collapse") {
  auto c = gcob::collapse_edges(beta_source(), {0});
  CHECK(c.quotient == gcob::identity_gaf(1));
  CHECK(c.proj == beta_collapse());
}

TEST_CASE("collapse_edges edge cases") {
  auto none = gcob::collapse_edges(dumbbell(), {});
  CHECK(none.quotient == dumbbell());
  CHECK(none.proj == gcob::identity_morphism(dumbbell()));

  CHECK(error_code([&] { gcob::collapse_edges(two_cycle(), {0, 1}); }) ==
        "NotAForest");
  CHECK(error_code([&] { gcob::collapse_edges(loop(), {0}); }) ==
        "NotAForest");

  Gaf bridge_between_attachings{2, 0, 0, 2, {}, {0, 1}, {1, 0}};
  CHECK(error_code([&] {
          gcob::collapse_edges(bridge_between_attachings, {0});
        }) == "TwoAttachingVerticesInTree");
}

TEST_CASE("fresh class vertices come after surviving inner vertices") {
  // Path v0-v1-v2: collapsing the first edge leaves v2, then appends the
  // merged class, so the quotient segment reads {class, v2} = {1, 0}.
  auto c = gcob::collapse_edges(path_gaf(2), {0});
  CHECK(c.quotient.v_size == 2);
  CHECK(c.quotient.sigma == std::vector<std::size_t>{1, 0});
  CHECK(c.proj.map_v == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("morphism counts between the smallest gafs") {
  // One of the two parallel edges collapses, the survivor wraps the loop
  // either way around: four morphisms over two collapse sites.
  auto ms = gcob::morphisms_between(two_cycle(), loop());
  CHECK(ms.size() == 4);
  std::set<std::vector<std::size_t>> collapse_sets;
  for (const GafMorphism& f : ms) collapse_sets.insert(gcob::ce(f));
  CHECK(collapse_sets ==
        std::set<std::vector<std::size_t>>{{0}, {1}});

  CHECK(gcob::morphisms_between(loop(), loop()).size() == 2);
  CHECK(gcob::morphisms_between(loop(), point()).empty());
}

TEST_CASE("composable collapse projections stay valid") {
  // Closure of the five conditions under composition, on every admissible
  // single-edge collapse of the small closed and boundary sweeps.
  std::vector<Gaf> universe = gcob::enumerate_gafs(0, 0, 3, 2);
  for (Gaf& g : gcob::enumerate_gafs(1, 1, 2, 2)) {
    universe.push_back(std::move(g));
  }
  std::size_t composed = 0;
  for (const Gaf& g : universe) {
    auto es = gcob::edges(g);
    for (std::size_t e = 0; e < es.size(); ++e) {
      gcob::Collapse first;
      try {
        first = gcob::collapse_edges(g, {e});
      } catch (const DomainError&) {
        continue;
      }
      auto es2 = gcob::edges(first.quotient);
      for (std::size_t e2 = 0; e2 < es2.size(); ++e2) {
        try {
          auto second = gcob::collapse_edges(first.quotient, {e2});
          // compose_v revalidates; a throw here would fail the test.
          GafMorphism both = gcob::compose_v(second.proj, first.proj);
          CHECK(both.source == g);
          CHECK(both.target == second.quotient);
          ++composed;
        } catch (const DomainError& err) {
          CHECK(err.code() == "NotAForest");
        }
      }
    }
  }
  CHECK(composed > 0);
}

TEST_CASE("collapsing disjoint forests in stages matches one stage") {
  Gaf p = path_gaf(3);
  auto staged = gcob::collapse_edges(p, {0, 2});
  // Edge 1 survives as the quotient's only edge.
  auto rest = gcob::collapse_edges(staged.quotient, {0});
  auto direct = gcob::collapse_edges(p, {0, 1, 2});
  CHECK(gcob::compose_v(rest.proj, staged.proj) == direct.proj);
  CHECK(rest.quotient == direct.quotient);
}

TEST_CASE("edge counts balance across any valid morphism") {
  Gaf two_loop_wedge{0, 0, 1, 4, {}, {0, 0, 0, 0}, {1, 0, 3, 2}};
  std::vector<std::pair<Gaf, Gaf>> pairs = {
      {two_cycle(), loop()},
      {loop(), loop()},
      {path_gaf(2), point()},
      {theta(), two_loop_wedge},
  };
  for (const auto& [src, tgt] : pairs) {
    auto ms = gcob::morphisms_between(src, tgt);
    CHECK(!ms.empty());
    for (const GafMorphism& f : ms) {
      CHECK(src.num_edges() == gcob::ce(f).size() + tgt.num_edges());
    }
  }
}

TEST_CASE("isomorphisms collapse nothing and preserve realization data") {
  for (const Gaf& g : {loop(), two_cycle(), dumbbell(), theta()}) {
    for (const GafMorphism& f : gcob::automorphisms(g)) {
      CHECK(gcob::ce(f).empty());
      auto rs = gcob::realization_invariants(f.source);
      auto rt = gcob::realization_invariants(f.target);
      CHECK(rs.num_components == rt.num_components);
      CHECK(rs.euler_char_per_component == rt.euler_char_per_component);
    }
  }
}
