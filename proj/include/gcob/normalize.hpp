#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcob/gaf.hpp"
#include "gcob/morphism.hpp"

namespace gcob {

struct Reduction {
  Gaf result;
  GafMorphism morphism;  // accumulated collapse, source is the input gaf
};

// An unmarked leaf is an edge with an inner endpoint of valence 1 that no
// marking sits on. Attaching vertices are always protected. Returns the
// smallest such edge index.
std::optional<std::size_t> find_unmarked_leaf(const Gaf& g);

// A bridge is a non-loop edge, both endpoints inner and unmarked, whose
// removal disconnects its component.
bool is_bridge(const Gaf& g, std::size_t edge);
std::optional<std::size_t> find_bridge(const Gaf& g);

// Edges e for which collapse_edges(g, {e}) succeeds: non-loops not joining
// two attaching vertices.
std::vector<std::size_t> collapsible_edges(const Gaf& g);

// Each procedure repeatedly collapses the smallest qualifying edge until
// none remains and accumulates the projections into one validated morphism.
// All three are idempotent (the fresh-name policy is deterministic) and
// preserve the realized normal form.
Reduction collapse_unmarked_leaves(const Gaf& g);
Reduction collapse_bridges(const Gaf& g);
Reduction reduce(const Gaf& g);

}  // namespace gcob
