#pragma once

#include <string>
#include <vector>

#include "gcob/gaf.hpp"
#include "gcob/morphism.hpp"

namespace gcob {

// The once-marked point: no attaching vertices, one inner vertex carrying
// the single marking.
Gaf gen_ft();

// The bare edge spanning two attaching vertices, no markings.
Gaf gen_fe();

// A segment from an attaching vertex to a marked inner vertex.
Gaf gen_G_beta1();
// Its collapse target: the identity gaf on one point.
Gaf gen_G_beta2();

// A twice-marked segment on two inner vertices, attached to nothing.
Gaf gen_G_tbeta1();
// Its collapse target: a twice-marked inner vertex.
Gaf gen_G_tbeta2();

// The collapse of the unique edge of gen_G_beta1 onto gen_G_beta2.
GafMorphism gen_beta();

// The collapse gen_G_tbeta1 => gen_G_tbeta2. Built by whiskering gen_beta
// horizontally (gen_tbeta_whiskered) and matched against the direct
// single-edge collapse; the direct form is returned.
GafMorphism gen_tbeta();

// The whiskered construction itself. Its source is isomorphic to
// gen_G_tbeta1 but uses the labels produced by horizontal composition.
GafMorphism gen_tbeta_whiskered();

// The order-two symmetries exchanging the two markings (and the matching
// inner data) of the tbeta gafs, and the one exchanging the two attaching
// vertices of the bare edge.
GafMorphism tbeta1_swap();
GafMorphism tbeta2_swap();
GafMorphism fe_swap();

struct AxiomReport {
  std::string axiom;
  bool pass = false;
  std::string detail;
};

// Machine-checks the five structural identities the generator family is
// required to satisfy:
//   (i)   the source of gen_beta is isomorphic to the snake composite
//         ((ft . I(mu)) (+) Id) .h (Id (+) fe);
//   (ii)  the two composite formulas for the tbeta source agree up to
//         isomorphism;
//   (iii) the attaching-and-half swap on the bare edge is an automorphism,
//         the full automorphism group has order 2, and fixing A kills it;
//   (iv)  the whiskered boundary swap equals tbeta1_swap literally, and
//         conjugating gen_tbeta by the swaps returns gen_tbeta;
//   (v)   the mirrored snake admits exactly one morphism onto the identity
//         gaf, collapsing exactly one edge.
// Isomorphism checks fix attaching vertices and markings pointwise.
std::vector<AxiomReport> verify_graphlike_axioms();

}  // namespace gcob
