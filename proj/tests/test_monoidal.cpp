#include <doctest.h>

#include <array>
#include <functional>

#include "gcob/generators.hpp"
#include "gcob/grading.hpp"
#include "gcob/monoidal.hpp"
#include "gcob/morphism.hpp"
#include "helpers.hpp"

using gcob::DomainError;
using gcob::FinMap;
using gcob::Gaf;
using gcob::GafMorphism;
using namespace fixtures;

namespace {

FinMap fold2() { return FinMap{2, 1, {0, 0}}; }

// The twice-marked vertex: gen_ft glued onto the fold map.
Gaf marked_cup() {
  return gcob::compose_h(gcob::gen_ft(), gcob::embed_finmap(fold2()));
}

}  // namespace

TEST_CASE("tensor with the empty gaf is the identity on the nose") {
  for (const Gaf& g : {loop(), dumbbell(), gcob::gen_G_beta1()}) {
    CHECK(gcob::tensor(Gaf{}, g) == g);
    CHECK(gcob::tensor(g, Gaf{}) == g);
  }
}

TEST_CASE("tensor lays out blocks left factor first") {
  Gaf tt = gcob::tensor(gcob::gen_ft(), gcob::gen_ft());
  CHECK(tt.a_size == 0);
  CHECK(tt.b_size == 2);
  CHECK(tt.v_size == 2);
  CHECK(tt.rho == std::vector<std::size_t>{0, 1});

  // Attaching blocks shift inner vertex indices of both factors.
  Gaf le = gcob::tensor(loop(), gcob::gen_fe());
  CHECK(le.a_size == 2);
  CHECK(le.sigma == std::vector<std::size_t>{2, 2, 0, 1});
}

TEST_CASE("tensor of morphisms is blockwise and grades add") {
  GafMorphism f =
      gcob::tensor_m(gcob::gen_beta(), gcob::identity_morphism(gcob::gen_ft()));
  CHECK_NOTHROW(gcob::validate_morphism(f));
  CHECK(gcob::grade(f) == 1);
  CHECK(f.source == gcob::tensor(gcob::gen_G_beta1(), gcob::gen_ft()));
  CHECK(f.target == gcob::tensor(gcob::gen_G_beta2(), gcob::gen_ft()));

  GafMorphism ff = gcob::tensor_m(gcob::gen_beta(), gcob::gen_beta());
  CHECK(gcob::grade(ff) == 2);
}

TEST_CASE("gluing the twice-marked vertex onto the edge closes a loop") {
  Gaf c = marked_cup();
  CHECK(c == gcob::gen_G_tbeta2());
  CHECK(gcob::compose_h(c, gcob::gen_fe()) == loop());
}

TEST_CASE("horizontal units are strict in this encoding") {
  for (const Gaf& g :
       {gcob::gen_G_beta1(), gcob::gen_G_tbeta1(), marked_cup(),
        gcob::embed_finmap(FinMap{3, 2, {0, 0, 1}})}) {
    CHECK(gcob::compose_h(gcob::identity_gaf(g.a_size), g) == g);
    CHECK(gcob::compose_h(g, gcob::identity_gaf(g.b_size)) == g);
  }
}

TEST_CASE("boundary mismatch is rejected") {
  CHECK_THROWS_WITH_AS(gcob::compose_h(gcob::gen_ft(), gcob::gen_fe()),
                       doctest::Contains("BoundaryMismatch"), DomainError);
}

TEST_CASE("the snake composite is isomorphic to the marked segment") {
  Gaf i1 = gcob::identity_gaf(1);
  Gaf snake = gcob::compose_h(gcob::tensor(marked_cup(), i1),
                              gcob::tensor(i1, gcob::gen_fe()));
  CHECK(snake.a_size == 1);
  CHECK(snake.b_size == 1);
  CHECK(snake != gcob::gen_G_beta1());
  CHECK(gcob::is_isomorphic(snake, gcob::gen_G_beta1()).has_value());

  // The mirrored snake needs no relabeling at all.
  Gaf other = gcob::compose_h(gcob::tensor(i1, marked_cup()),
                              gcob::tensor(gcob::gen_fe(), i1));
  CHECK(other == gcob::gen_G_beta1());
}

TEST_CASE("horizontal composition is strictly associative here") {
  Gaf b1 = gcob::gen_G_beta1();
  std::vector<std::array<Gaf, 3>> triples = {
      {gcob::gen_ft(), gcob::embed_finmap(fold2()), gcob::gen_fe()},
      {b1, b1, b1},
      {gcob::tensor(b1, b1), gcob::tensor(b1, b1), gcob::tensor(b1, b1)},
  };
  for (const auto& [x, y, z] : triples) {
    CHECK(gcob::compose_h(gcob::compose_h(x, y), z) ==
          gcob::compose_h(x, gcob::compose_h(y, z)));
  }
}

TEST_CASE("interchange of tensor and gluing holds up to isomorphism") {
  Gaf b1 = gcob::gen_G_beta1();
  Gaf lhs = gcob::compose_h(gcob::tensor(b1, b1), gcob::tensor(b1, b1));
  Gaf rhs = gcob::tensor(gcob::compose_h(b1, b1), gcob::compose_h(b1, b1));
  // Inner vertex blocks land in a different order, so only isomorphic.
  CHECK(lhs != rhs);
  CHECK(gcob::is_isomorphic(lhs, rhs).has_value());

  Gaf c = marked_cup();
  Gaf lhs2 = gcob::compose_h(gcob::tensor(gcob::gen_ft(), gcob::gen_ft()),
                             gcob::tensor(gcob::embed_finmap(fold2()),
                                          gcob::embed_finmap(fold2())));
  Gaf rhs2 = gcob::tensor(c, c);
  CHECK(gcob::is_isomorphic(lhs2, rhs2).has_value());
}

TEST_CASE("gluing preserves inner vertex and half edge counts exactly") {
  Gaf b1 = gcob::gen_G_beta1();
  Gaf glued = gcob::compose_h(b1, b1);
  CHECK(glued.v_size == 2 * b1.v_size);
  CHECK(glued.h_size == 2 * b1.h_size);
  Gaf tri = gcob::compose_h(glued, b1);
  CHECK(tri.v_size == 3 * b1.v_size);
  CHECK(tri.h_size == 3 * b1.h_size);
}

TEST_CASE("horizontal composition of identity morphisms is the identity") {
  Gaf b1 = gcob::gen_G_beta1();
  GafMorphism idid = gcob::compose_h_m(gcob::identity_morphism(b1),
                                       gcob::identity_morphism(b1));
  CHECK(idid == gcob::identity_morphism(gcob::compose_h(b1, b1)));
}

TEST_CASE("gluing two based collapses collapses the glued path") {
  GafMorphism glued = gcob::compose_h_m(gcob::gen_beta(), gcob::gen_beta());
  Gaf path2 = gcob::compose_h(gcob::gen_G_beta1(), gcob::gen_G_beta1());
  CHECK(glued.source == path2);
  CHECK(glued.target == gcob::identity_gaf(1));
  CHECK(gcob::grade(glued) == 2);
  CHECK(glued == gcob::collapse_edges(path2, {0, 1}).proj);
}

TEST_CASE("compose_h_m rejects incompatible boundaries and markings") {
  CHECK_THROWS_WITH_AS(
      gcob::compose_h_m(gcob::identity_morphism(gcob::gen_ft()),
                        gcob::identity_morphism(gcob::gen_ft())),
      doctest::Contains("BoundaryMismatch"), DomainError);
}

TEST_CASE("gluing is functorial for vertical composition, strictly") {
  Gaf p = gcob::compose_h(gcob::gen_G_beta1(), gcob::gen_G_beta1());
  // Left factor: collapse the two path edges one at a time.
  auto f1 = gcob::collapse_edges(p, {0});
  CHECK(f1.quotient == gcob::gen_G_beta1());
  GafMorphism g1 = gcob::gen_beta();
  // Right factor: identity then the based collapse.
  GafMorphism f2 = gcob::identity_morphism(gcob::gen_G_beta1());
  GafMorphism g2 = gcob::gen_beta();

  GafMorphism lhs = gcob::compose_h_m(gcob::compose_v(g1, f1.proj),
                                      gcob::compose_v(g2, f2));
  GafMorphism rhs = gcob::compose_v(gcob::compose_h_m(g1, g2),
                                    gcob::compose_h_m(f1.proj, f2));
  CHECK(lhs == rhs);
}

TEST_CASE("embedded finite set maps") {
  Gaf mu = gcob::embed_finmap(fold2());
  CHECK(mu.a_size == 1);
  CHECK(mu.b_size == 2);
  CHECK(mu.v_size == 0);
  CHECK(mu.h_size == 0);
  CHECK(mu.rho == std::vector<std::size_t>{0, 0});

  CHECK(gcob::embed_finmap(FinMap{0, 0, {}}) == Gaf{});
  CHECK(gcob::identity_gaf(2) ==
        gcob::embed_finmap(FinMap{2, 2, {0, 1}}));

  // Embedding is functorial for every composable pair of maps 2 -> 2.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      FinMap phi{2, 2, {i / 2, i % 2}};
      FinMap psi{2, 2, {j / 2, j % 2}};
      CHECK(gcob::compose_h(gcob::embed_finmap(phi), gcob::embed_finmap(psi)) ==
            gcob::embed_finmap(gcob::compose(phi, psi)));
    }
  }
  FinMap wide{3, 2, {1, 0, 1}};
  FinMap narrow{2, 3, {2, 0}};
  CHECK(gcob::compose_h(gcob::embed_finmap(wide), gcob::embed_finmap(narrow)) ==
        gcob::embed_finmap(gcob::compose(wide, narrow)));
}
