#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "gcob/gaf.hpp"
#include "gcob/morphism.hpp"

namespace gcob {

// Total order on the raw encoding (a, b, v, h, rho, sigma, upsilon),
// lexicographic. Canonical forms are minima under this order.
bool encoding_less(const Gaf& x, const Gaf& y);

// The lexicographically least relabeling of inner vertices and half-edges,
// attaching vertices and markings fixed pointwise. Two gafs have equal
// canonical forms exactly when is_isomorphic finds an isomorphism.
Gaf canonical_form(const Gaf& g);

// canonical_form together with the relabeling that produced it.
// vertex_map is over flattened vertex indices, half_map over half-edges.
struct CanonicalIndexed {
  Gaf canon;
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> half_map;
};
CanonicalIndexed canonical_form_indexed(const Gaf& g);

// Every isomorphism class with the given boundary, at most max_v inner
// vertices and at most max_e edges, as canonical forms in encoding order.
std::vector<Gaf> enumerate_gafs(std::size_t a, std::size_t b,
                                std::size_t max_v, std::size_t max_e);

struct NerveMorphism {
  std::size_t src = 0;
  std::size_t tgt = 0;
  GafMorphism map;
};

// A finite truncation of the morphism category over one boundary: all
// objects within bounds, all morphisms between them, the full composition
// table and the identity indices. compose entries [i, j, k] say that
// morphism j after morphism i is morphism k.
struct NerveData {
  std::vector<Gaf> objects;
  std::vector<NerveMorphism> morphisms;
  std::vector<std::array<std::size_t, 3>> compose;
  std::vector<std::size_t> identities;
};

// Throws BudgetExceeded once more than morphism_budget morphisms exist.
NerveData nerve_export(std::size_t a, std::size_t b, std::size_t max_v,
                       std::size_t max_e, std::size_t morphism_budget = 20000);

struct Expansion {
  Gaf expanded;
  GafMorphism collapse_back;  // target is the input gaf, grade 1
};

// All ways to split one vertex along a fresh edge, up to isomorphism
// respecting the fresh edge. At an inner vertex every bipartition of its
// incident half-edges and markings is used; at an attaching vertex every
// subset moves onto a fresh inner vertex. The fresh vertex and half-edges
// take the largest indices, so the input's labels are untouched.
std::vector<Expansion> expansions(const Gaf& g);

struct ZigzagMove {
  bool expand = false;
  Gaf state;  // canonical form after the move
};

std::size_t default_zigzag_budget(const Gaf& g, const Gaf& g2);

// Breadth-first search through single-edge collapses and expansions between
// canonical forms, where expansions are only taken while the edge count
// stays within edge_budget. Returns the move sequence from canonical_form(g)
// to canonical_form(g2), empty when they already agree, or nullopt when no
// path exists within budget (always, when the boundaries differ).
std::optional<std::vector<ZigzagMove>> zigzag_connected(
    const Gaf& g, const Gaf& g2, std::size_t edge_budget);

}  // namespace gcob
