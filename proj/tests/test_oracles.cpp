#include <doctest.h>

#include "gcob/catalog.hpp"
#include "gcob/morphism.hpp"
#include "oracles.hpp"

using gcob::Gaf;

namespace {

Gaf loop() { return Gaf{0, 0, 1, 2, {}, {0, 0}, {1, 0}}; }
Gaf point() { return Gaf{0, 0, 1, 0, {}, {}, {}}; }
Gaf two_cycle() { return Gaf{0, 0, 2, 4, {}, {0, 1, 0, 1}, {1, 0, 3, 2}}; }

}  // namespace

TEST_CASE("raw involution filter accepts exactly the edge pairings") {
  // 2 halves: one pairing. 4 halves: 3 pairings, each under 4^2 sigma choices
  // for two inner vertices.
  CHECK(oracle::all_gafs_exact(0, 0, 1, 1).size() == 1);
  CHECK(oracle::all_gafs_exact(0, 0, 2, 2).size() == 3 * 16);
}

TEST_CASE("pairwise raw isomorphism buckets small closed gafs") {
  // v,e <= 1 closed: empty, point, loop.
  CHECK(oracle::count_classes(0, 0, 1, 1) == 3);
  // One attaching point: bare, plus isolated inner, plus loop at the
  // attaching, plus that with an isolated inner, plus a segment to an inner
  // vertex, plus a loop at an inner vertex.
  CHECK(oracle::count_classes(1, 0, 1, 1) == 6);
  CHECK(oracle::count_classes(0, 0, 0, 0) == 1);
}

TEST_CASE("raw assignment search counts collapses between small gafs") {
  // Two-cycle onto loop: one of the two edges must collapse (its partner
  // follows by equivariance), the survivor covers the loop edge either way
  // around: 2 x 2.
  CHECK(oracle::count_morphisms(two_cycle(), loop()) == 4);
  // The loop cannot collapse to a point: its fiber would be a circle.
  CHECK(oracle::count_morphisms(loop(), point()) == 0);
  // Loop onto itself: identity and the half swap.
  CHECK(oracle::count_morphisms(loop(), loop()) == 2);
}

TEST_CASE("raw permutation search counts automorphisms") {
  CHECK(oracle::count_automorphisms(loop()) == 2);
  CHECK(oracle::count_automorphisms(point()) == 1);
  // Two-cycle: dihedral on a 2-gon. Fixing or swapping the vertices leaves
  // exactly two half-edge alignments each.
  CHECK(oracle::count_automorphisms(two_cycle()) == 4);
}

TEST_CASE("optimized search agrees with the raw counts") {
  CHECK(gcob::morphisms_between(two_cycle(), loop()).size() ==
        oracle::count_morphisms(two_cycle(), loop()));
  CHECK(gcob::morphisms_between(loop(), point()).size() ==
        oracle::count_morphisms(loop(), point()));
  CHECK(gcob::morphisms_between(loop(), loop()).size() ==
        oracle::count_morphisms(loop(), loop()));
  CHECK(gcob::automorphisms(loop()).size() ==
        oracle::count_automorphisms(loop()));
  CHECK(gcob::automorphisms(two_cycle()).size() ==
        oracle::count_automorphisms(two_cycle()));
}

TEST_CASE("canonical enumeration agrees with raw class counts") {
  CHECK(gcob::enumerate_gafs(0, 0, 1, 1).size() ==
        oracle::count_classes(0, 0, 1, 1));
  CHECK(gcob::enumerate_gafs(1, 0, 1, 1).size() ==
        oracle::count_classes(1, 0, 1, 1));
  CHECK(gcob::enumerate_gafs(0, 0, 0, 0).size() ==
        oracle::count_classes(0, 0, 0, 0));
  CHECK(gcob::enumerate_gafs(0, 1, 1, 1).size() ==
        oracle::count_classes(0, 1, 1, 1));
  CHECK(gcob::enumerate_gafs(1, 1, 1, 1).size() ==
        oracle::count_classes(1, 1, 1, 1));
  CHECK(gcob::enumerate_gafs(0, 0, 2, 2).size() ==
        oracle::count_classes(0, 0, 2, 2));
}
