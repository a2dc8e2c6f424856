#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcob/gaf.hpp"

namespace gcob {

// Tree collapse between gafs. The four maps cover the four sorts of the
// source; map_v and map_h land in the flattened codomains
//   map_v: V -> A' + V'          (vertex indices of the target)
//   map_h: H -> A' + V' + H'     (A' first, V' second, H' third)
// so a half-edge is collapsed exactly when its image is below
// target.num_vertices().
//
// Validity (checked by validate_morphism):
//   (1) each map lands in its stated codomain
//   (2) equivariance with rho, sigma, upsilon (the latter two extended by
//       the identity on vertices)
//   (3) the preimage of an inner vertex is a nonempty tree without
//       attaching vertices
//   (4) the preimage of an attaching vertex is a disjoint union of trees,
//       each containing exactly one attaching vertex
//   (5) each target half-edge has exactly one preimage half-edge
// Conditions (3)-(5) only inspect data that (2) already forces to be closed
// under sigma and upsilon, which is what makes the fiber checks well posed.
struct GafMorphism {
  Gaf source;
  Gaf target;
  std::vector<std::size_t> map_a;
  std::vector<std::size_t> map_b;
  std::vector<std::size_t> map_v;
  std::vector<std::size_t> map_h;

  // Image of a source vertex (flattened index).
  std::size_t vertex_image(std::size_t x) const {
    return x < source.a_size ? map_a[x] : map_v[x - source.a_size];
  }

  bool collapses_half(std::size_t k) const {
    return map_h[k] < target.num_vertices();
  }

  friend bool operator==(const GafMorphism&, const GafMorphism&) = default;
};

GafMorphism identity_morphism(const Gaf& g);

// Nullopt when all five conditions hold, otherwise the (code, detail) of the
// first violated one. The throwing validate_morphism wraps this; enumeration
// loops call it directly to avoid exception traffic.
std::optional<std::pair<std::string, std::string>> morphism_error(
    const GafMorphism& f);

// Errors: RestrictionViolated (condition 1, shapes and ranges),
// NotEquivariant(map, index), PreimageNotTree(vertex),
// PreimageWrongBasing(vertex), HalfEdgeNotSingleton(half-edge).
GafMorphism validate_morphism(GafMorphism f);

// g after f. Requires f.target == g.source on the nose
// (SourceTargetMismatch); the result is re-validated rather than trusted,
// since closure of the morphism conditions under composition is a theorem we
// test, not an assumption.
GafMorphism compose_v(const GafMorphism& g, const GafMorphism& f);

struct Collapse {
  Gaf quotient;
  GafMorphism proj;
};

// Collapse every edge in X (edge indices into edges(g)) at once. Each
// connected component spanned by X must be a tree (NotAForest) containing at
// most one attaching vertex (TwoAttachingVerticesInTree). A component
// containing an attaching vertex collapses onto it; the others become fresh
// inner vertices, appended after the surviving inner vertices in order of
// their smallest original member. proj is the identity on everything else.
Collapse collapse_edges(const Gaf& g, const std::vector<std::size_t>& x);

// All morphisms g -> g2 that are the identity on A and B, in lexicographic
// order of (map_v, map_h). Empty when the boundaries differ.
std::vector<GafMorphism> morphisms_between(const Gaf& g, const Gaf& g2);

// First isomorphism g -> g2 fixing A and B pointwise (in the same
// lexicographic order), or nullopt.
std::optional<GafMorphism> is_isomorphic(const Gaf& g, const Gaf& g2);

// The automorphism group as a list, sorted by (map_a, map_b, map_v, map_h).
// With fix_a (resp. fix_b) false, map_a (resp. map_b) ranges over all
// permutations instead of being pinned to the identity.
std::vector<GafMorphism> automorphisms(const Gaf& g, bool fix_a = true,
                                       bool fix_b = true);

}  // namespace gcob
