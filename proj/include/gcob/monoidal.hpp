#pragma once

#include "gcob/fin.hpp"
#include "gcob/gaf.hpp"
#include "gcob/morphism.hpp"

namespace gcob {

// The gaf with n attaching vertices, n markings placed by the identity, and
// no inner structure. Unit for horizontal composition on both sides, exactly.
Gaf identity_gaf(std::size_t n);

// A finite-set map mu as an edgeless gaf: one attaching vertex per element
// of the codomain, one marking per element of the domain, placed by mu.
Gaf embed_finmap(const FinMap& mu);

// Disjoint union. Block order everywhere: g first, then g2. Attaching
// vertices of g2 are shifted by g.a_size, inner vertices additionally past
// g's inner block, half-edges by g.h_size.
Gaf tensor(const Gaf& g, const Gaf& g2);
GafMorphism tensor_m(const GafMorphism& f, const GafMorphism& f2);

// Gluing: each marking m of g is identified with attaching vertex m of g2.
// Requires g.b_size == g2.a_size (BoundaryMismatch). The result keeps g's
// attaching vertices and g2's markings; inner vertices are g's then g2's,
// half-edges g's then g2's. Unit laws against identity_gaf hold exactly;
// associativity holds up to isomorphism.
Gaf compose_h(const Gaf& g, const Gaf& g2);

// Horizontal composition of morphisms over matching gluings. Requires the
// sources and the targets to be h-composable and f.map_b == f2.map_a
// (BoundaryMismatch), i.e. the two morphisms agree on the glued boundary.
GafMorphism compose_h_m(const GafMorphism& f, const GafMorphism& f2);

}  // namespace gcob
