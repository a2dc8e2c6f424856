#pragma once

// Literal gafs the suites keep reaching for. All closed (a=b=0) unless the
// name says otherwise; index conventions as in gaf.hpp.

#include <cstddef>

#include "gcob/gaf.hpp"

namespace fixtures {

using gcob::Gaf;

inline Gaf empty_gaf() { return Gaf{}; }

inline Gaf point() { return Gaf{0, 0, 1, 0, {}, {}, {}}; }

inline Gaf loop() { return Gaf{0, 0, 1, 2, {}, {0, 0}, {1, 0}}; }

inline Gaf segment() { return Gaf{0, 0, 2, 2, {}, {0, 1}, {1, 0}}; }

inline Gaf two_cycle() { return Gaf{0, 0, 2, 4, {}, {0, 1, 0, 1}, {1, 0, 3, 2}}; }

// k inner vertices in a cycle, edge i joining vertex i to vertex i+1 mod k.
inline Gaf k_cycle(std::size_t k) {
  Gaf g;
  g.v_size = k;
  g.h_size = 2 * k;
  g.sigma.resize(2 * k);
  g.upsilon.resize(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    g.sigma[2 * i] = i;
    g.sigma[2 * i + 1] = (i + 1) % k;
    g.upsilon[2 * i] = 2 * i + 1;
    g.upsilon[2 * i + 1] = 2 * i;
  }
  return g;
}

// Linear tree on k+1 inner vertices, k edges.
inline Gaf path_gaf(std::size_t k) {
  Gaf g;
  g.v_size = k + 1;
  g.h_size = 2 * k;
  g.sigma.resize(2 * k);
  g.upsilon.resize(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    g.sigma[2 * i] = i;
    g.sigma[2 * i + 1] = i + 1;
    g.upsilon[2 * i] = 2 * i + 1;
    g.upsilon[2 * i + 1] = 2 * i;
  }
  return g;
}

// Two loops joined by an edge.
inline Gaf dumbbell() {
  return Gaf{0, 0, 2, 6, {}, {0, 0, 1, 1, 0, 1}, {1, 0, 3, 2, 5, 4}};
}

// Two vertices joined by three parallel edges.
inline Gaf theta() {
  return Gaf{0, 0, 2, 6, {}, {0, 1, 0, 1, 0, 1}, {1, 0, 3, 2, 5, 4}};
}

}  // namespace fixtures
