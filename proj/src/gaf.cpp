#include "gcob/gaf.hpp"

#include <algorithm>
#include <string>

#include "gcob/union_find.hpp"

namespace gcob {

namespace {

void check_map(const std::vector<std::size_t>& values, std::size_t expected_len,
               std::size_t bound, const char* name) {
  if (values.size() != expected_len) {
    throw DomainError("IndexOutOfRange",
                      std::string(name) + " has " +
                          std::to_string(values.size()) +
                          " entries, expected " + std::to_string(expected_len));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= bound) {
      throw DomainError("IndexOutOfRange",
                        std::string(name) + "(" + std::to_string(i) + ") = " +
                            std::to_string(values[i]) + " is not below " +
                            std::to_string(bound));
    }
  }
}

}  // namespace

Gaf validate_gaf(Gaf g) {
  check_map(g.rho, g.b_size, g.num_vertices(), "rho");
  check_map(g.sigma, g.h_size, g.num_vertices(), "sigma");
  check_map(g.upsilon, g.h_size, g.h_size, "upsilon");
  // Fixed points are reported before failures of self-inverseness; together
  // the two conditions force h_size to be even, so parity needs no check.
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (g.upsilon[k] == k) {
      throw DomainError("InvolutionHasFixedPoint",
                        "upsilon(" + std::to_string(k) + ") = " +
                            std::to_string(k));
    }
  }
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (g.upsilon[g.upsilon[k]] != k) {
      throw DomainError("InvolutionNotSelfInverse",
                        "upsilon^2(" + std::to_string(k) + ") = " +
                            std::to_string(g.upsilon[g.upsilon[k]]));
    }
  }
  return g;
}

std::vector<Edge> edges(const Gaf& g) {
  std::vector<Edge> out;
  out.reserve(g.num_edges());
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (k < g.upsilon[k]) out.push_back(Edge{{k, g.upsilon[k]}});
  }
  return out;
}

std::vector<std::size_t> edge_index_by_half(const Gaf& g) {
  std::vector<std::size_t> out(g.h_size, 0);
  std::size_t e = 0;
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (k < g.upsilon[k]) {
      out[k] = e;
      out[g.upsilon[k]] = e;
      ++e;
    }
  }
  return out;
}

bool is_loop(const Gaf& g, const Edge& e) {
  return g.sigma[e.half[0]] == g.sigma[e.half[1]];
}

std::size_t valence(const Gaf& g, std::size_t vertex) {
  if (vertex >= g.num_vertices()) {
    throw DomainError("IndexOutOfRange",
                      "vertex " + std::to_string(vertex) + " is not below " +
                          std::to_string(g.num_vertices()));
  }
  std::size_t n = 0;
  for (std::size_t x : g.sigma) {
    if (x == vertex) ++n;
  }
  return n;
}

std::vector<std::size_t> valences(const Gaf& g) {
  std::vector<std::size_t> out(g.num_vertices(), 0);
  for (std::size_t x : g.sigma) ++out[x];
  return out;
}

RealizationInvariants realization_invariants(const Gaf& g) {
  const std::size_t n = g.num_vertices();
  UnionFind uf(n);
  for (std::size_t k = 0; k < g.h_size; ++k) {
    uf.unite(g.sigma[k], g.sigma[g.upsilon[k]]);
  }
  // Component ids in order of least contained vertex.
  RealizationInvariants out;
  out.component_of = FinMap{n, 0, std::vector<std::size_t>(n)};
  std::vector<std::size_t> id_of_root(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = uf.find(x);
    if (r == x) id_of_root[x] = out.num_components++;
    out.component_of.values[x] = id_of_root[r];
  }
  out.component_of.codomain_size = out.num_components;

  std::vector<long> verts(out.num_components, 0);
  std::vector<long> edge_count(out.num_components, 0);
  for (std::size_t x = 0; x < n; ++x) ++verts[out.component_of(x)];
  for (const Edge& e : edges(g)) ++edge_count[out.component_of(g.sigma[e.half[0]])];

  out.euler_char_per_component.resize(out.num_components);
  out.rank_per_component.resize(out.num_components);
  for (std::size_t c = 0; c < out.num_components; ++c) {
    long chi = verts[c] - edge_count[c];
    out.euler_char_per_component[c] = chi;
    // Each component is connected and nonempty, so chi <= 1.
    out.rank_per_component[c] = static_cast<std::size_t>(1 - chi);
  }
  return out;
}

bool is_tree(const Gaf& g) {
  RealizationInvariants ri = realization_invariants(g);
  return ri.num_components == 1 && ri.rank_per_component[0] == 0;
}

bool is_based_tree(const Gaf& g) { return is_tree(g) && g.a_size == 1; }

bool is_nonbased_tree(const Gaf& g) { return is_tree(g) && g.a_size == 0; }

Gaf sub_gaf(const Gaf& g, const std::vector<bool>& keep_a,
            const std::vector<bool>& keep_b, const std::vector<bool>& keep_v,
            const std::vector<bool>& keep_h) {
  if (keep_a.size() != g.a_size || keep_b.size() != g.b_size ||
      keep_v.size() != g.v_size || keep_h.size() != g.h_size) {
    throw DomainError("IndexOutOfRange", "selection masks have wrong sizes");
  }
  auto keep_vertex = [&](std::size_t x) {
    return x < g.a_size ? keep_a[x] : keep_v[x - g.a_size];
  };
  // Closure of the selection under rho, sigma, upsilon.
  for (std::size_t m = 0; m < g.b_size; ++m) {
    if (keep_b[m] && !keep_vertex(g.rho[m])) {
      throw DomainError("NotClosed",
                        "rho does not restrict at marking " + std::to_string(m));
    }
  }
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (!keep_h[k]) continue;
    if (!keep_vertex(g.sigma[k])) {
      throw DomainError(
          "NotClosed", "sigma does not restrict at half-edge " + std::to_string(k));
    }
    if (!keep_h[g.upsilon[k]]) {
      throw DomainError(
          "NotClosed",
          "upsilon does not restrict at half-edge " + std::to_string(k));
    }
  }

  std::vector<std::size_t> new_vertex(g.num_vertices(), 0);
  Gaf out;
  for (std::size_t x = 0; x < g.a_size; ++x) {
    if (keep_a[x]) new_vertex[x] = out.a_size++;
  }
  for (std::size_t x = 0; x < g.v_size; ++x) {
    if (keep_v[x]) new_vertex[g.a_size + x] = out.a_size + out.v_size++;
  }
  std::vector<std::size_t> new_half(g.h_size, 0);
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (keep_h[k]) new_half[k] = out.h_size++;
  }
  for (std::size_t m = 0; m < g.b_size; ++m) {
    if (keep_b[m]) {
      ++out.b_size;
      out.rho.push_back(new_vertex[g.rho[m]]);
    }
  }
  out.sigma.resize(out.h_size);
  out.upsilon.resize(out.h_size);
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (keep_h[k]) {
      out.sigma[new_half[k]] = new_vertex[g.sigma[k]];
      out.upsilon[new_half[k]] = new_half[g.upsilon[k]];
    }
  }
  return out;
}

}  // namespace gcob
