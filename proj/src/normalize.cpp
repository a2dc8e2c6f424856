#include "gcob/normalize.hpp"

#include <functional>

#include "gcob/union_find.hpp"

namespace gcob {

namespace {

std::vector<bool> marked_vertices(const Gaf& g) {
  std::vector<bool> m(g.num_vertices(), false);
  for (std::size_t r : g.rho) m[r] = true;
  return m;
}

Reduction iterate_collapse(
    const Gaf& g,
    const std::function<std::optional<std::size_t>(const Gaf&)>& pick) {
  Reduction red{g, identity_morphism(g)};
  while (auto e = pick(red.result)) {
    Collapse step = collapse_edges(red.result, {*e});
    red.morphism = compose_v(step.proj, red.morphism);
    red.result = std::move(step.quotient);
  }
  return red;
}

}  // namespace

std::optional<std::size_t> find_unmarked_leaf(const Gaf& g) {
  const std::vector<Edge> all = edges(g);
  const std::vector<bool> marked = marked_vertices(g);
  const std::vector<std::size_t> val = valences(g);
  for (std::size_t e = 0; e < all.size(); ++e) {
    for (std::size_t h : all[e].half) {
      std::size_t v = g.sigma[h];
      if (v >= g.a_size && val[v] == 1 && !marked[v]) return e;
    }
  }
  return std::nullopt;
}

bool is_bridge(const Gaf& g, std::size_t edge) {
  const std::vector<Edge> all = edges(g);
  if (edge >= all.size()) {
    throw DomainError("IndexOutOfRange",
                      "edge index " + std::to_string(edge) + " is not below " +
                          std::to_string(all.size()));
  }
  const std::vector<bool> marked = marked_vertices(g);
  std::size_t p = g.sigma[all[edge].half[0]];
  std::size_t q = g.sigma[all[edge].half[1]];
  if (p == q) return false;
  if (p < g.a_size || q < g.a_size || marked[p] || marked[q]) return false;
  UnionFind uf(g.num_vertices());
  for (std::size_t e = 0; e < all.size(); ++e) {
    if (e != edge) uf.unite(g.sigma[all[e].half[0]], g.sigma[all[e].half[1]]);
  }
  return uf.find(p) != uf.find(q);
}

std::optional<std::size_t> find_bridge(const Gaf& g) {
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (is_bridge(g, e)) return e;
  }
  return std::nullopt;
}

std::vector<std::size_t> collapsible_edges(const Gaf& g) {
  const std::vector<Edge> all = edges(g);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < all.size(); ++e) {
    std::size_t p = g.sigma[all[e].half[0]];
    std::size_t q = g.sigma[all[e].half[1]];
    if (p != q && (p >= g.a_size || q >= g.a_size)) out.push_back(e);
  }
  return out;
}

Reduction collapse_unmarked_leaves(const Gaf& g) {
  return iterate_collapse(g, find_unmarked_leaf);
}

Reduction collapse_bridges(const Gaf& g) {
  return iterate_collapse(g, find_bridge);
}

Reduction reduce(const Gaf& g) {
  return iterate_collapse(g, [](const Gaf& cur) -> std::optional<std::size_t> {
    std::vector<std::size_t> cands = collapsible_edges(cur);
    if (cands.empty()) return std::nullopt;
    return cands.front();
  });
}

}  // namespace gcob
