#include "gcob/grading.hpp"

#include <algorithm>
#include <queue>

namespace gcob {

std::size_t ve(const Gaf& g) { return g.v_size + g.h_size / 2; }

std::vector<std::size_t> ce(const GafMorphism& f) {
  std::vector<std::size_t> out;
  const std::vector<Edge> all = edges(f.source);
  for (std::size_t e = 0; e < all.size(); ++e) {
    if (f.collapses_half(all[e].half[0])) out.push_back(e);
  }
  return out;
}

std::size_t grade(const GafMorphism& f) { return ce(f).size(); }

Coloring validate_coloring(Coloring c) {
  c.base = validate_gaf(std::move(c.base));
  if (c.color.domain_size != c.base.v_size + c.base.num_edges()) {
    throw DomainError("RestrictionViolated",
                      "color domain must be inner vertices plus edges");
  }
  if (c.color.codomain_size != c.palette_size) {
    throw DomainError("RestrictionViolated",
                      "color codomain must be the palette");
  }
  validate_finmap(c.color);
  return c;
}

ColoredMorphism validate_colored_morphism(ColoredMorphism cm) {
  cm.underlying = validate_morphism(std::move(cm.underlying));
  if (cm.marking.domain_size != grade(cm.underlying)) {
    throw DomainError("RestrictionViolated",
                      "marking domain must be the collapsed edge set");
  }
  validate_finmap(cm.marking);
  return cm;
}

std::vector<std::size_t> grade_s(const ColoredMorphism& cm) {
  std::vector<std::size_t> out(cm.marking.codomain_size, 0);
  for (std::size_t s : cm.marking.values) ++out[s];
  return out;
}

std::vector<std::size_t> leaf_orientations(const Gaf& g, std::size_t edge) {
  const std::vector<Edge> all = edges(g);
  if (edge >= all.size()) {
    throw DomainError("IndexOutOfRange",
                      "edge index " + std::to_string(edge) + " is not below " +
                          std::to_string(all.size()));
  }
  std::vector<std::size_t> out;
  for (std::size_t h : all[edge].half) {
    std::size_t v = g.sigma[h];
    if (v >= g.a_size && valence(g, v) == 1) out.push_back(h);
  }
  return out;
}

bool is_leaf(const Gaf& g, std::size_t edge) {
  return !leaf_orientations(g, edge).empty();
}

LeafLikeInfo is_leaf_like(const ColoredMorphism& cm) {
  if (cm.palette_size() == 0) {
    throw DomainError("NoDistinguishedColor", "palette is empty");
  }
  const std::vector<std::size_t> collapsed = ce(cm.underlying);
  if (cm.marking.domain_size != collapsed.size() ||
      cm.marking.values.size() != collapsed.size()) {
    throw DomainError("RestrictionViolated",
                      "marking domain must be the collapsed edge set");
  }
  const std::size_t bullet = cm.palette_size() - 1;
  LeafLikeInfo info;
  std::vector<std::size_t> fiber;
  for (std::size_t i = 0; i < cm.marking.values.size(); ++i) {
    if (cm.marking.values[i] == bullet) fiber.push_back(collapsed[i]);
  }
  if (fiber.size() != 1) {
    info.reason = "distinguished fiber has " + std::to_string(fiber.size()) +
                  " edges, need exactly 1";
    return info;
  }
  const Gaf& src = cm.underlying.source;
  const Edge e = edges(src)[fiber[0]];
  // Valence within the collapsed subtree through a vertex counts only its
  // collapsed half-edges; every collapsed half at a fiber vertex belongs to
  // that vertex's own preimage component.
  auto subtree_valence = [&](std::size_t v) {
    std::size_t n = 0;
    for (std::size_t k = 0; k < src.h_size; ++k) {
      if (src.sigma[k] == v && cm.underlying.collapses_half(k)) ++n;
    }
    return n;
  };
  for (std::size_t h : e.half) {
    std::size_t v = src.sigma[h];
    if (v >= src.a_size && subtree_valence(v) == 1) {
      info.leaf_like = true;
      info.edge = fiber[0];
      info.half = h;
      info.vertex = v;
      return info;
    }
  }
  info.reason = "distinguished edge is not a leaf of its collapsed subtree";
  return info;
}

SpineFactorization spine(const ColoredMorphism& cm) {
  LeafLikeInfo info = is_leaf_like(cm);
  if (!info.leaf_like) {
    throw DomainError("PreconditionViolated", "not leaf-like: " + info.reason);
  }
  const GafMorphism& f = cm.underlying;
  const Gaf& src = f.source;
  const Gaf& tgt = f.target;
  if (tgt.num_vertices() != 1 || tgt.h_size != 0) {
    throw DomainError("PreconditionViolated",
                      "target is not a single vertex without edges");
  }
  if (!is_tree(src)) {
    throw DomainError("PreconditionViolated", "source is not a tree");
  }

  const std::vector<Edge> all = edges(src);
  std::vector<std::size_t> spine_edges;
  if (tgt.a_size == 0) {
    spine_edges.push_back(info.edge);
  } else {
    // Unique path from the attaching vertex to the leaf endpoint.
    const std::size_t nv = src.num_vertices();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
    for (std::size_t e = 0; e < all.size(); ++e) {
      std::size_t p = src.sigma[all[e].half[0]];
      std::size_t q = src.sigma[all[e].half[1]];
      adj[p].push_back({q, e});
      adj[q].push_back({p, e});
    }
    std::vector<std::size_t> prev_vertex(nv, nv), prev_edge(nv, all.size());
    std::vector<bool> seen(nv, false);
    std::queue<std::size_t> bfs;
    bfs.push(0);
    seen[0] = true;
    while (!bfs.empty()) {
      std::size_t v = bfs.front();
      bfs.pop();
      for (auto [w, e] : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          prev_vertex[w] = v;
          prev_edge[w] = e;
          bfs.push(w);
        }
      }
    }
    for (std::size_t v = info.vertex; v != 0; v = prev_vertex[v]) {
      spine_edges.push_back(prev_edge[v]);
    }
    std::sort(spine_edges.begin(), spine_edges.end());
  }

  std::vector<bool> on_spine(all.size(), false);
  for (std::size_t e : spine_edges) on_spine[e] = true;
  std::vector<std::size_t> off_spine;
  for (std::size_t e = 0; e < all.size(); ++e) {
    if (!on_spine[e]) off_spine.push_back(e);
  }
  Collapse branch = collapse_edges(src, off_spine);
  GafMorphism f_s = validate_morphism(GafMorphism{
      branch.quotient, tgt, f.map_a, f.map_b,
      std::vector<std::size_t>(branch.quotient.v_size, 0),
      std::vector<std::size_t>(branch.quotient.h_size, 0)});
  if (!(compose_v(f_s, branch.proj) == f)) {
    throw DomainError("PreconditionViolated",
                      "spine factorization does not recompose");
  }
  return SpineFactorization{std::move(spine_edges), std::move(branch.proj),
                            std::move(f_s)};
}

}  // namespace gcob
