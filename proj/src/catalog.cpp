#include "gcob/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

#include "gcob/normalize.hpp"

namespace gcob {

namespace {

auto encoding_tuple(const Gaf& g) {
  return std::tie(g.a_size, g.b_size, g.v_size, g.h_size, g.rho, g.sigma,
                  g.upsilon);
}

struct EncodingLess {
  bool operator()(const Gaf& x, const Gaf& y) const {
    return encoding_tuple(x) < encoding_tuple(y);
  }
};

// Minimal upsilon sequence compatible with a fixed vertex relabeling, by
// greedy matching. Positions within one sigma block are interchangeable
// slots, so pairing position p with the smallest later position whose block
// pair still has an unused edge is exact, not heuristic. Also records which
// original half lands on which position.
struct HalfLayout {
  std::vector<std::size_t> upsilon_c;
  std::vector<std::size_t> half_map;
};

HalfLayout minimal_upsilon(const Gaf& g,
                           const std::vector<std::size_t>& new_label,
                           const std::vector<std::size_t>& sigma_c) {
  const std::size_t h = g.h_size;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>
      edges_of_type;
  for (std::size_t k = 0; k < h; ++k) {
    std::size_t p = g.upsilon[k];
    if (k < p) {
      std::size_t x = new_label[g.sigma[k]];
      std::size_t y = new_label[g.sigma[p]];
      edges_of_type[{std::min(x, y), std::max(x, y)}].push_back(k);
    }
  }
  // Queues consumed front-first: smallest original half first keeps the
  // produced relabeling deterministic.
  HalfLayout out;
  out.upsilon_c.assign(h, h);
  out.half_map.assign(h, h);
  for (std::size_t p = 0; p < h; ++p) {
    if (out.upsilon_c[p] != h) continue;
    std::size_t x = sigma_c[p];
    bool found = false;
    for (std::size_t q = p + 1; q < h && !found; ++q) {
      if (out.upsilon_c[q] != h) continue;
      std::size_t y = sigma_c[q];
      auto it = edges_of_type.find({std::min(x, y), std::max(x, y)});
      if (it == edges_of_type.end() || it->second.empty()) continue;
      std::size_t k = it->second.front();
      it->second.erase(it->second.begin());
      std::size_t k2 = g.upsilon[k];
      out.upsilon_c[p] = q;
      out.upsilon_c[q] = p;
      // Loops fill both slots from one block; k is the smaller half then.
      bool k_at_p = x == y || new_label[g.sigma[k]] == x;
      out.half_map[k] = k_at_p ? p : q;
      out.half_map[k2] = k_at_p ? q : p;
      found = true;
    }
    if (!found) {
      throw DomainError("PreconditionViolated",
                        "half-edge matching ran out of slots");
    }
  }
  return out;
}

}  // namespace

bool encoding_less(const Gaf& x, const Gaf& y) {
  return encoding_tuple(x) < encoding_tuple(y);
}

CanonicalIndexed canonical_form_indexed(const Gaf& g) {
  const std::size_t a = g.a_size;
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> perm(g.v_size);
  std::iota(perm.begin(), perm.end(), a);

  bool have_best = false;
  std::vector<std::size_t> best_rho, best_sigma, best_upsilon;
  std::vector<std::size_t> best_vertex_map, best_half_map;

  std::vector<std::size_t> new_label(n);
  std::iota(new_label.begin(), new_label.end(), std::size_t{0});
  do {
    for (std::size_t j = 0; j < perm.size(); ++j) new_label[perm[j]] = a + j;

    std::vector<std::size_t> rho_c(g.b_size);
    for (std::size_t m = 0; m < g.b_size; ++m) {
      rho_c[m] = new_label[g.rho[m]];
    }
    std::vector<std::size_t> count(n, 0);
    for (std::size_t s : g.sigma) ++count[new_label[s]];
    std::vector<std::size_t> sigma_c;
    sigma_c.reserve(g.h_size);
    for (std::size_t x = 0; x < n; ++x) {
      sigma_c.insert(sigma_c.end(), count[x], x);
    }
    if (have_best) {
      auto prefix = std::tie(rho_c, sigma_c);
      auto best_prefix = std::tie(best_rho, best_sigma);
      if (best_prefix < prefix) continue;
      if (prefix < best_prefix) have_best = false;  // strictly better
    }
    HalfLayout layout = minimal_upsilon(g, new_label, sigma_c);
    if (have_best && !(layout.upsilon_c < best_upsilon)) continue;
    have_best = true;
    best_rho = std::move(rho_c);
    best_sigma = std::move(sigma_c);
    best_upsilon = std::move(layout.upsilon_c);
    best_half_map = std::move(layout.half_map);
    best_vertex_map = new_label;
  } while (std::next_permutation(perm.begin(), perm.end()));

  CanonicalIndexed out;
  out.canon.a_size = g.a_size;
  out.canon.b_size = g.b_size;
  out.canon.v_size = g.v_size;
  out.canon.h_size = g.h_size;
  out.canon.rho = std::move(best_rho);
  out.canon.sigma = std::move(best_sigma);
  out.canon.upsilon = std::move(best_upsilon);
  out.vertex_map = std::move(best_vertex_map);
  out.half_map = std::move(best_half_map);
  return out;
}

Gaf canonical_form(const Gaf& g) { return canonical_form_indexed(g).canon; }

std::vector<Gaf> enumerate_gafs(std::size_t a, std::size_t b,
                                std::size_t max_v, std::size_t max_e) {
  std::set<Gaf, EncodingLess> classes;
  for (std::size_t v = 0; v <= max_v; ++v) {
    const std::size_t n = a + v;
    if (n == 0 && b > 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> pair_types;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) pair_types.push_back({x, y});
    }
    for (std::size_t e = 0; e <= max_e; ++e) {
      if (e > 0 && pair_types.empty()) break;
      // Non-decreasing pair-type selections: every multigraph once.
      std::vector<std::size_t> sel(e, 0);
      bool more = true;
      while (more) {
        Gaf cand;
        cand.a_size = a;
        cand.b_size = b;
        cand.v_size = v;
        cand.h_size = 2 * e;
        cand.sigma.resize(2 * e);
        cand.upsilon.resize(2 * e);
        for (std::size_t i = 0; i < e; ++i) {
          cand.sigma[2 * i] = pair_types[sel[i]].first;
          cand.sigma[2 * i + 1] = pair_types[sel[i]].second;
          cand.upsilon[2 * i] = 2 * i + 1;
          cand.upsilon[2 * i + 1] = 2 * i;
        }
        cand.rho.assign(b, 0);
        bool more_rho = true;
        while (more_rho) {
          classes.insert(canonical_form(cand));
          more_rho = false;
          for (std::size_t m = b; m-- > 0;) {
            if (++cand.rho[m] < n) {
              more_rho = true;
              break;
            }
            cand.rho[m] = 0;
          }
        }
        // Advance the selection, keeping it non-decreasing.
        more = false;
        for (std::size_t i = e; i-- > 0;) {
          if (++sel[i] < pair_types.size()) {
            for (std::size_t j = i + 1; j < e; ++j) sel[j] = sel[i];
            more = true;
            break;
          }
        }
      }
    }
  }
  return std::vector<Gaf>(classes.begin(), classes.end());
}

NerveData nerve_export(std::size_t a, std::size_t b, std::size_t max_v,
                       std::size_t max_e, std::size_t morphism_budget) {
  NerveData nerve;
  nerve.objects = enumerate_gafs(a, b, max_v, max_e);
  const std::size_t n = nerve.objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (GafMorphism& f : morphisms_between(nerve.objects[i], nerve.objects[j])) {
        nerve.morphisms.push_back({i, j, std::move(f)});
        if (nerve.morphisms.size() > morphism_budget) {
          throw DomainError("BudgetExceeded",
                            "limit " + std::to_string(morphism_budget) +
                                " morphisms");
        }
      }
    }
  }
  auto find_morphism = [&](std::size_t src, std::size_t tgt,
                           const GafMorphism& f) -> std::size_t {
    for (std::size_t idx = 0; idx < nerve.morphisms.size(); ++idx) {
      const NerveMorphism& m = nerve.morphisms[idx];
      if (m.src == src && m.tgt == tgt && m.map == f) return idx;
    }
    throw DomainError("PreconditionViolated",
                      "composite missing from the morphism listing");
  };
  for (std::size_t i = 0; i < nerve.morphisms.size(); ++i) {
    for (std::size_t j = 0; j < nerve.morphisms.size(); ++j) {
      if (nerve.morphisms[i].tgt != nerve.morphisms[j].src) continue;
      GafMorphism comp =
          compose_v(nerve.morphisms[j].map, nerve.morphisms[i].map);
      nerve.compose.push_back(
          {i, j, find_morphism(nerve.morphisms[i].src,
                               nerve.morphisms[j].tgt, comp)});
    }
  }
  nerve.identities.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    nerve.identities.push_back(
        find_morphism(i, i, identity_morphism(nerve.objects[i])));
  }
  return nerve;
}

std::vector<Expansion> expansions(const Gaf& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t fresh = n;  // flattened index of the split-off vertex
  std::map<std::pair<std::vector<std::size_t>, std::size_t>, Expansion> found;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> at_halves, at_marks;
    for (std::size_t k = 0; k < g.h_size; ++k) {
      if (g.sigma[k] == x) at_halves.push_back(k);
    }
    for (std::size_t m = 0; m < g.b_size; ++m) {
      if (g.rho[m] == x) at_marks.push_back(m);
    }
    const std::size_t items = at_halves.size() + at_marks.size();
    // Inner vertex: all bipartitions (the moved side becomes the fresh
    // vertex). Attaching vertex: all subsets move, the vertex itself stays.
    for (std::size_t mask = 0; mask < (std::size_t{1} << items); ++mask) {
      Gaf ex = g;
      ex.v_size += 1;
      ex.h_size += 2;
      for (std::size_t i = 0; i < at_halves.size(); ++i) {
        if (mask & (std::size_t{1} << i)) ex.sigma[at_halves[i]] = fresh;
      }
      for (std::size_t i = 0; i < at_marks.size(); ++i) {
        if (mask & (std::size_t{1} << (at_halves.size() + i))) {
          ex.rho[at_marks[i]] = fresh;
        }
      }
      ex.sigma.push_back(x);
      ex.sigma.push_back(fresh);
      ex.upsilon.push_back(g.h_size + 1);
      ex.upsilon.push_back(g.h_size);

      GafMorphism back;
      back.source = ex;
      back.target = g;
      back.map_a.resize(g.a_size);
      std::iota(back.map_a.begin(), back.map_a.end(), std::size_t{0});
      back.map_b.resize(g.b_size);
      std::iota(back.map_b.begin(), back.map_b.end(), std::size_t{0});
      back.map_v.resize(g.v_size);
      std::iota(back.map_v.begin(), back.map_v.end(), g.a_size);
      back.map_v.push_back(x);
      back.map_h.resize(g.h_size);
      std::iota(back.map_h.begin(), back.map_h.end(), n);
      back.map_h.push_back(x);
      back.map_h.push_back(x);
      back = validate_morphism(std::move(back));

      CanonicalIndexed ci = canonical_form_indexed(ex);
      std::vector<std::size_t> canon_fresh_edge =
          edge_index_by_half(ci.canon);
      std::pair<std::vector<std::size_t>, std::size_t> key{
          {}, canon_fresh_edge[ci.half_map[g.h_size]]};
      key.first.reserve(ci.canon.rho.size() + 2 * ci.canon.sigma.size());
      key.first.insert(key.first.end(), ci.canon.rho.begin(),
                       ci.canon.rho.end());
      key.first.insert(key.first.end(), ci.canon.sigma.begin(),
                       ci.canon.sigma.end());
      key.first.insert(key.first.end(), ci.canon.upsilon.begin(),
                       ci.canon.upsilon.end());
      key.first.push_back(ci.canon.v_size);
      found.emplace(std::move(key),
                    Expansion{std::move(ex), std::move(back)});
    }
  }
  std::vector<Expansion> out;
  out.reserve(found.size());
  for (auto& [key, ex] : found) out.push_back(std::move(ex));
  return out;
}

std::size_t default_zigzag_budget(const Gaf& g, const Gaf& g2) {
  return std::max(g.num_edges(), g2.num_edges()) + 2;
}

std::optional<std::vector<ZigzagMove>> zigzag_connected(
    const Gaf& g, const Gaf& g2, std::size_t edge_budget) {
  if (g.a_size != g2.a_size || g.b_size != g2.b_size) return std::nullopt;
  const Gaf start = canonical_form(g);
  const Gaf goal = canonical_form(g2);
  struct Parent {
    Gaf state;
    bool expand = false;
    bool is_start = false;
  };
  std::map<Gaf, Parent, EncodingLess> seen;
  seen.emplace(start, Parent{Gaf{}, false, true});
  std::queue<Gaf> frontier;
  frontier.push(start);
  bool reached = start == goal;
  while (!frontier.empty() && !reached) {
    Gaf cur = frontier.front();
    frontier.pop();
    std::vector<std::pair<Gaf, bool>> next;
    for (std::size_t e : collapsible_edges(cur)) {
      next.push_back({canonical_form(collapse_edges(cur, {e}).quotient), false});
    }
    if (cur.num_edges() + 1 <= edge_budget) {
      for (const Expansion& ex : expansions(cur)) {
        next.push_back({canonical_form(ex.expanded), true});
      }
    }
    for (auto& [state, expand] : next) {
      if (seen.count(state)) continue;
      seen.emplace(state, Parent{cur, expand, false});
      if (state == goal) {
        reached = true;
        break;
      }
      frontier.push(state);
    }
  }
  if (!reached) return std::nullopt;
  std::vector<ZigzagMove> path;
  for (Gaf at = goal;;) {
    const Parent& p = seen.at(at);
    if (p.is_start) break;
    path.push_back(ZigzagMove{p.expand, at});
    at = p.state;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace gcob
