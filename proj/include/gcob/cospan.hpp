#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "gcob/gaf.hpp"

namespace gcob {

// One connected piece of the realized 1-complex: which attaching vertices
// and which markings land on it, and its first Betti number.
struct NFComponent {
  std::vector<std::size_t> a_legs;
  std::vector<std::size_t> b_legs;
  std::size_t rank = 0;
  friend auto operator<=>(const NFComponent&, const NFComponent&) = default;
};

// Homotopy normal form of a cospan of finite 1-complexes with discrete
// boundary: the component partition of both boundaries plus ranks is a
// complete invariant, so nothing else is stored. Components are kept sorted.
struct CospanNF {
  std::vector<NFComponent> components;
  friend bool operator==(const CospanNF&, const CospanNF&) = default;
};

CospanNF realize_nf(const Gaf& g);

// Pushout along the shared boundary: outer's b-legs are glued to inner's
// a-legs point by point. Both leg families must enumerate the same finite
// set exactly once each (BoundaryMismatch). Ranks combine by the Euler
// characteristic rule chi(union) = sum chi - gluing points.
CospanNF compose_nf(const CospanNF& outer, const CospanNF& inner);

// realize_nf(compose_h(g, g2)) == compose_nf(realize_nf(g), realize_nf(g2)).
bool verify_re_functorial(const Gaf& g, const Gaf& g2);

}  // namespace gcob
