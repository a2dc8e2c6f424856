#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcob/fin.hpp"
#include "gcob/gaf.hpp"
#include "gcob/morphism.hpp"

namespace gcob {

// Size of V + E: inner vertices plus edges. Additive under tensor and under
// horizontal composition, exactly.
std::size_t ve(const Gaf& g);

// Indices (ascending) of the source edges collapsed by f, in canonical edge
// order. An edge is collapsed when its half-edges map to vertices.
std::vector<std::size_t> ce(const GafMorphism& f);

// Number of collapsed edges. Additive under compose_v, tensor_m and
// compose_h_m.
std::size_t grade(const GafMorphism& f);

// A coloring of a gaf's inner vertices and edges by a finite palette.
// color's domain is V followed by E in canonical edge order.
struct Coloring {
  Gaf base;
  std::size_t palette_size = 0;
  FinMap color;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};
Coloring validate_coloring(Coloring c);

// A morphism whose collapsed edges are marked with palette colors. marking's
// domain is CE(underlying) in ascending edge order; its codomain is the
// palette. The distinguished color is the last palette index.
struct ColoredMorphism {
  GafMorphism underlying;
  FinMap marking;
  std::size_t palette_size() const { return marking.codomain_size; }
  friend bool operator==(const ColoredMorphism&, const ColoredMorphism&) =
      default;
};
ColoredMorphism validate_colored_morphism(ColoredMorphism cm);

// Per-color cardinalities of the marking fibers, indexed by the palette.
std::vector<std::size_t> grade_s(const ColoredMorphism& cm);

// The orientations of edge e exhibiting it as a leaf: half-edges h in e whose
// endpoint is inner of valence 1. Size 0 (not a leaf), 1, or 2 (a bare
// segment on two inner vertices).
std::vector<std::size_t> leaf_orientations(const Gaf& g, std::size_t edge);
bool is_leaf(const Gaf& g, std::size_t edge);

struct LeafLikeInfo {
  bool leaf_like = false;
  std::string reason;
  // Set when leaf_like: the distinguished edge, its chosen orientation
  // (smallest qualifying half-edge), and the valence-1 inner endpoint.
  std::size_t edge = 0;
  std::size_t half = 0;
  std::size_t vertex = 0;
};

// True iff the fiber of the distinguished (last) color is a single edge e
// and e is a leaf of the subtree collapsed onto its image vertex: the
// connected component of the preimage of that vertex containing e. Valence
// is counted within that component's collapsed edges only. Throws
// NoDistinguishedColor when the palette is empty.
LeafLikeInfo is_leaf_like(const ColoredMorphism& cm);

struct SpineFactorization {
  std::vector<std::size_t> spine_edges;
  GafMorphism f_b;
  GafMorphism f_s;
};

// Factors a leaf-like collapse of a tree onto a single-vertex gaf through
// its spine. Preconditions (PreconditionViolated): cm is leaf-like, the
// target has one vertex and no edges, the source is a tree. The spine is the
// distinguished edge alone when the target vertex is inner, and the unique
// path from the attaching vertex to the leaf endpoint when it is attaching.
// f_b collapses everything off the spine, f_s collapses the spine, and
// compose_v(f_s, f_b) == cm.underlying exactly.
SpineFactorization spine(const ColoredMorphism& cm);

}  // namespace gcob
