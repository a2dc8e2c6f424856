#include "gcob/cospan.hpp"

#include <algorithm>

#include "gcob/monoidal.hpp"
#include "gcob/union_find.hpp"

namespace gcob {

CospanNF realize_nf(const Gaf& g) {
  RealizationInvariants inv = realization_invariants(g);
  CospanNF nf;
  nf.components.resize(inv.num_components);
  for (std::size_t c = 0; c < inv.num_components; ++c) {
    nf.components[c].rank = inv.rank_per_component[c];
  }
  for (std::size_t x = 0; x < g.a_size; ++x) {
    nf.components[inv.component_of(x)].a_legs.push_back(x);
  }
  for (std::size_t m = 0; m < g.b_size; ++m) {
    nf.components[inv.component_of(g.rho[m])].b_legs.push_back(m);
  }
  std::sort(nf.components.begin(), nf.components.end());
  return nf;
}

CospanNF compose_nf(const CospanNF& outer, const CospanNF& inner) {
  // The glued boundary: outer's b-legs and inner's a-legs must each hit
  // every point of it exactly once.
  std::size_t boundary = 0;
  for (const NFComponent& c : outer.components) boundary += c.b_legs.size();
  std::size_t boundary2 = 0;
  for (const NFComponent& c : inner.components) boundary2 += c.a_legs.size();
  if (boundary != boundary2) {
    throw DomainError("BoundaryMismatch",
                      "glued boundary sizes " + std::to_string(boundary) +
                          " and " + std::to_string(boundary2) + " differ");
  }
  const std::size_t none = outer.components.size() + inner.components.size();
  std::vector<std::size_t> outer_at(boundary, none), inner_at(boundary, none);
  for (std::size_t i = 0; i < outer.components.size(); ++i) {
    for (std::size_t x : outer.components[i].b_legs) {
      if (x >= boundary || outer_at[x] != none) {
        throw DomainError("BoundaryMismatch",
                          "outer b-legs do not partition the glued boundary");
      }
      outer_at[x] = i;
    }
  }
  for (std::size_t i = 0; i < inner.components.size(); ++i) {
    for (std::size_t x : inner.components[i].a_legs) {
      if (x >= boundary || inner_at[x] != none) {
        throw DomainError("BoundaryMismatch",
                          "inner a-legs do not partition the glued boundary");
      }
      inner_at[x] = i;
    }
  }

  const std::size_t n1 = outer.components.size();
  UnionFind uf(n1 + inner.components.size());
  for (std::size_t x = 0; x < boundary; ++x) {
    uf.unite(outer_at[x], n1 + inner_at[x]);
  }

  std::vector<std::size_t> group_of(n1 + inner.components.size());
  std::vector<NFComponent> merged;
  std::vector<long> chi;
  for (std::size_t i = 0; i < group_of.size(); ++i) {
    std::size_t r = uf.find(i);
    if (r == i) {
      group_of[i] = merged.size();
      merged.emplace_back();
      chi.push_back(0);
    }
  }
  for (std::size_t i = 0; i < group_of.size(); ++i) {
    std::size_t gidx = group_of[uf.find(i)];
    const NFComponent& c =
        i < n1 ? outer.components[i] : inner.components[i - n1];
    chi[gidx] += 1 - static_cast<long>(c.rank);
    if (i < n1) {
      merged[gidx].a_legs.insert(merged[gidx].a_legs.end(), c.a_legs.begin(),
                                 c.a_legs.end());
    } else {
      merged[gidx].b_legs.insert(merged[gidx].b_legs.end(), c.b_legs.begin(),
                                 c.b_legs.end());
    }
  }
  for (std::size_t x = 0; x < boundary; ++x) {
    --chi[group_of[uf.find(outer_at[x])]];
  }
  CospanNF out;
  for (std::size_t gidx = 0; gidx < merged.size(); ++gidx) {
    NFComponent& c = merged[gidx];
    std::sort(c.a_legs.begin(), c.a_legs.end());
    std::sort(c.b_legs.begin(), c.b_legs.end());
    c.rank = static_cast<std::size_t>(1 - chi[gidx]);
    out.components.push_back(std::move(c));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

bool verify_re_functorial(const Gaf& g, const Gaf& g2) {
  return realize_nf(compose_h(g, g2)) == compose_nf(realize_nf(g), realize_nf(g2));
}

}  // namespace gcob
