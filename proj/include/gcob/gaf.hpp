#pragma once

#include <cstddef>
#include <vector>

#include "gcob/fin.hpp"

namespace gcob {

// A marked graph attached to a finite set: the 1-morphisms of the cobordism
// 2-category built here. A is the attaching set (target object), B the
// marking set (source object), V the inner vertices, H the half-edges.
//
// Index conventions, used everywhere:
//   vertices  = A then V, flattened to 0..a_size+v_size-1 with A first
//   rho[m]    = vertex carrying marking m
//   sigma[k]  = vertex carrying half-edge k
//   upsilon   = fixed-point-free involution of H pairing halves into edges
//
// Edges are derived from upsilon on demand and never stored. The empty gaf
// (all sizes zero) is valid and is the monoidal unit. Loops and multi-edges
// are allowed.
struct Gaf {
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::size_t v_size = 0;
  std::size_t h_size = 0;
  std::vector<std::size_t> rho;      // length b_size, values in A+V
  std::vector<std::size_t> sigma;    // length h_size, values in A+V
  std::vector<std::size_t> upsilon;  // length h_size, values in H

  std::size_t num_vertices() const { return a_size + v_size; }
  std::size_t num_edges() const { return h_size / 2; }
  bool is_attaching(std::size_t vertex) const { return vertex < a_size; }

  friend bool operator==(const Gaf&, const Gaf&) = default;
};

// Unordered pair of half-edges with half[0] < half[1].
struct Edge {
  std::size_t half[2];

  friend bool operator==(const Edge& x, const Edge& y) {
    return x.half[0] == y.half[0] && x.half[1] == y.half[1];
  }
};

// Shape and range checks first (IndexOutOfRange), then upsilon must have no
// fixed point (InvolutionHasFixedPoint) and be self-inverse
// (InvolutionNotSelfInverse), in that order.
Gaf validate_gaf(Gaf g);

// Upsilon orbits in canonical order: sorted by smaller half-edge index.
std::vector<Edge> edges(const Gaf& g);

// For each half-edge, the index of its edge in edges(g).
std::vector<std::size_t> edge_index_by_half(const Gaf& g);

bool is_loop(const Gaf& g, const Edge& e);

// Number of half-edges at the vertex; a loop contributes 2. Markings do not
// count. Throws IndexOutOfRange on a bad vertex index.
std::size_t valence(const Gaf& g, std::size_t vertex);

// valence for all vertices at once.
std::vector<std::size_t> valences(const Gaf& g);

// Homotopy data of the realization: connected components (indexed by least
// contained vertex, in increasing order), Euler characteristic and rank
// (first Betti number) per component.
struct RealizationInvariants {
  FinMap component_of;  // vertices -> components
  std::size_t num_components = 0;
  std::vector<long> euler_char_per_component;
  std::vector<std::size_t> rank_per_component;

  long total_euler_char() const {
    long t = 0;
    for (long c : euler_char_per_component) t += c;
    return t;
  }
};

RealizationInvariants realization_invariants(const Gaf& g);

// Tree: connected, nonempty, rank 0. Based: additionally exactly one
// attaching vertex; non-based: no attaching vertex.
bool is_tree(const Gaf& g);
bool is_based_tree(const Gaf& g);
bool is_nonbased_tree(const Gaf& g);

// Restriction to the selected attaching vertices, markings, inner vertices
// and half-edges, each mask indexed over its own sort. Kept items are
// reindexed in order. Throws NotClosed when a kept marking or half-edge
// touches a dropped vertex, or a kept half-edge's partner is dropped.
Gaf sub_gaf(const Gaf& g, const std::vector<bool>& keep_a,
            const std::vector<bool>& keep_b, const std::vector<bool>& keep_v,
            const std::vector<bool>& keep_h);

}  // namespace gcob
