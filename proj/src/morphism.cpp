#include "gcob/morphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gcob/union_find.hpp"

namespace gcob {

namespace {

using Err = std::optional<std::pair<std::string, std::string>>;

Err restriction_error(const GafMorphism& f) {
  const Gaf& s = f.source;
  const Gaf& t = f.target;
  auto bad = [](const char* name, std::size_t i, const std::string& what) {
    return Err{{"RestrictionViolated",
                std::string(name) + "(" + std::to_string(i) + ") " + what}};
  };
  if (f.map_a.size() != s.a_size || f.map_b.size() != s.b_size ||
      f.map_v.size() != s.v_size || f.map_h.size() != s.h_size) {
    return Err{{"RestrictionViolated", "map lengths do not match the source"}};
  }
  for (std::size_t i = 0; i < s.a_size; ++i) {
    if (f.map_a[i] >= t.a_size) return bad("map_a", i, "escapes A'");
  }
  for (std::size_t i = 0; i < s.b_size; ++i) {
    if (f.map_b[i] >= t.b_size) return bad("map_b", i, "escapes B'");
  }
  for (std::size_t i = 0; i < s.v_size; ++i) {
    if (f.map_v[i] >= t.num_vertices()) return bad("map_v", i, "escapes A'+V'");
  }
  for (std::size_t i = 0; i < s.h_size; ++i) {
    if (f.map_h[i] >= t.num_vertices() + t.h_size) {
      return bad("map_h", i, "escapes A'+V'+H'");
    }
  }
  return std::nullopt;
}

Err equivariance_error(const GafMorphism& f) {
  const Gaf& s = f.source;
  const Gaf& t = f.target;
  const std::size_t nvt = t.num_vertices();
  for (std::size_t m = 0; m < s.b_size; ++m) {
    if (f.vertex_image(s.rho[m]) != t.rho[f.map_b[m]]) {
      return Err{{"NotEquivariant", "rho at marking " + std::to_string(m)}};
    }
  }
  for (std::size_t k = 0; k < s.h_size; ++k) {
    // sigma and upsilon of the target are extended by the identity on
    // vertices, so a collapsed half-edge must sit at its own image vertex
    // and its partner must collapse to the same one.
    std::size_t y = f.map_h[k];
    std::size_t img = f.vertex_image(s.sigma[k]);
    if (y < nvt ? y != img : t.sigma[y - nvt] != img) {
      return Err{{"NotEquivariant", "sigma at half-edge " + std::to_string(k)}};
    }
    std::size_t yu = f.map_h[s.upsilon[k]];
    if (y < nvt ? yu != y : yu != nvt + t.upsilon[y - nvt]) {
      return Err{{"NotEquivariant",
                  "upsilon at half-edge " + std::to_string(k)}};
    }
  }
  return std::nullopt;
}

// Conditions (3) and (4): fiber analysis over each target vertex. Assumes
// (1) and (2) hold, so fibers are closed subgraphs.
Err fiber_error(const GafMorphism& f) {
  const Gaf& s = f.source;
  const Gaf& t = f.target;
  const std::size_t nvs = s.num_vertices();
  const std::size_t nvt = t.num_vertices();

  std::vector<std::size_t> img(nvs);
  for (std::size_t x = 0; x < nvs; ++x) img[x] = f.vertex_image(x);

  UnionFind uf(nvs);
  for (std::size_t k = 0; k < s.h_size; ++k) {
    if (f.map_h[k] < nvt) uf.unite(s.sigma[k], s.sigma[s.upsilon[k]]);
  }

  // Per (target vertex, component root): vertex, edge and attaching counts.
  struct Stats {
    long verts = 0;
    long edge_halves = 0;
    long attaching = 0;
  };
  std::map<std::pair<std::size_t, std::size_t>, Stats> groups;
  std::vector<std::size_t> groups_per_target(nvt, 0);
  for (std::size_t x = 0; x < nvs; ++x) {
    Stats& st = groups[{img[x], uf.find(x)}];
    if (st.verts == 0) ++groups_per_target[img[x]];
    ++st.verts;
    if (x < s.a_size) ++st.attaching;
  }
  for (std::size_t k = 0; k < s.h_size; ++k) {
    if (f.map_h[k] < nvt) {
      ++groups[{f.map_h[k], uf.find(s.sigma[k])}].edge_halves;
    }
  }

  for (std::size_t w = t.a_size; w < nvt; ++w) {
    if (groups_per_target[w] != 1) {
      return Err{{"PreimageNotTree",
                  "inner vertex " + std::to_string(w) + " has " +
                      (groups_per_target[w] ? "a disconnected" : "an empty") +
                      " preimage"}};
    }
  }
  for (const auto& [key, st] : groups) {
    auto [w, root] = key;
    (void)root;
    long chi = st.verts - st.edge_halves / 2;
    if (chi != 1) {
      return Err{{"PreimageNotTree",
                  "preimage component over vertex " + std::to_string(w) +
                      " has euler characteristic " + std::to_string(chi)}};
    }
    if (w < t.a_size && st.attaching != 1) {
      return Err{{"PreimageWrongBasing",
                  "preimage component over attaching vertex " +
                      std::to_string(w) + " contains " +
                      std::to_string(st.attaching) + " attaching vertices"}};
    }
  }
  return std::nullopt;
}

Err singleton_error(const GafMorphism& f) {
  const std::size_t nvt = f.target.num_vertices();
  std::vector<std::size_t> hits(f.target.h_size, 0);
  for (std::size_t y : f.map_h) {
    if (y >= nvt) ++hits[y - nvt];
  }
  for (std::size_t k2 = 0; k2 < hits.size(); ++k2) {
    if (hits[k2] != 1) {
      return Err{{"HalfEdgeNotSingleton",
                  "target half-edge " + std::to_string(k2) + " has " +
                      std::to_string(hits[k2]) + " preimages"}};
    }
  }
  return std::nullopt;
}

}  // namespace

GafMorphism identity_morphism(const Gaf& g) {
  GafMorphism f;
  f.source = g;
  f.target = g;
  f.map_a.resize(g.a_size);
  std::iota(f.map_a.begin(), f.map_a.end(), std::size_t{0});
  f.map_b.resize(g.b_size);
  std::iota(f.map_b.begin(), f.map_b.end(), std::size_t{0});
  f.map_v.resize(g.v_size);
  std::iota(f.map_v.begin(), f.map_v.end(), g.a_size);
  f.map_h.resize(g.h_size);
  std::iota(f.map_h.begin(), f.map_h.end(), g.num_vertices());
  return f;
}

std::optional<std::pair<std::string, std::string>> morphism_error(
    const GafMorphism& f) {
  if (Err e = restriction_error(f)) return e;
  if (Err e = equivariance_error(f)) return e;
  if (Err e = fiber_error(f)) return e;
  return singleton_error(f);
}

GafMorphism validate_morphism(GafMorphism f) {
  if (Err e = morphism_error(f)) throw DomainError(e->first, e->second);
  return f;
}

GafMorphism compose_v(const GafMorphism& g, const GafMorphism& f) {
  if (!(f.target == g.source)) {
    throw DomainError("SourceTargetMismatch",
                      "vertical composition needs target(first-applied) == "
                      "source(second-applied)");
  }
  GafMorphism out;
  out.source = f.source;
  out.target = g.target;
  out.map_a.reserve(f.map_a.size());
  for (std::size_t y : f.map_a) out.map_a.push_back(g.map_a[y]);
  out.map_b.reserve(f.map_b.size());
  for (std::size_t y : f.map_b) out.map_b.push_back(g.map_b[y]);
  out.map_v.reserve(f.map_v.size());
  for (std::size_t y : f.map_v) out.map_v.push_back(g.vertex_image(y));
  const std::size_t nv_mid = f.target.num_vertices();
  out.map_h.reserve(f.map_h.size());
  for (std::size_t y : f.map_h) {
    out.map_h.push_back(y < nv_mid ? g.vertex_image(y) : g.map_h[y - nv_mid]);
  }
  return validate_morphism(std::move(out));
}

Collapse collapse_edges(const Gaf& g, const std::vector<std::size_t>& x) {
  const std::vector<Edge> all = edges(g);
  std::vector<bool> chosen(all.size(), false);
  for (std::size_t idx : x) {
    if (idx >= all.size()) {
      throw DomainError("IndexOutOfRange",
                        "edge index " + std::to_string(idx) + " is not below " +
                            std::to_string(all.size()));
    }
    chosen[idx] = true;
  }

  const std::size_t nv = g.num_vertices();
  UnionFind uf(nv);
  std::vector<bool> touched(nv, false);
  for (std::size_t e = 0; e < all.size(); ++e) {
    if (!chosen[e]) continue;
    std::size_t p = g.sigma[all[e].half[0]];
    std::size_t q = g.sigma[all[e].half[1]];
    uf.unite(p, q);
    touched[p] = touched[q] = true;
  }

  std::vector<long> class_verts(nv, 0);
  std::vector<long> class_edges(nv, 0);
  std::vector<long> class_attaching(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    if (!touched[v]) continue;
    std::size_t r = uf.find(v);
    ++class_verts[r];
    if (v < g.a_size) ++class_attaching[r];
  }
  for (std::size_t e = 0; e < all.size(); ++e) {
    if (chosen[e]) ++class_edges[uf.find(g.sigma[all[e].half[0]])];
  }
  for (std::size_t r = 0; r < nv; ++r) {
    if (class_verts[r] == 0) continue;
    // Classes are connected by construction, so chi = 1 means tree.
    if (class_edges[r] != class_verts[r] - 1) {
      throw DomainError("NotAForest",
                        "collapsed edges span a cycle through vertex " +
                            std::to_string(r));
    }
    if (class_attaching[r] >= 2) {
      throw DomainError("TwoAttachingVerticesInTree",
                        "collapsed tree at vertex " + std::to_string(r) +
                            " contains " + std::to_string(class_attaching[r]) +
                            " attaching vertices");
    }
  }

  // Quotient vertex order: attaching vertices keep their indices (each is
  // alone in its class or is the root of a based tree, since roots are class
  // minima); then surviving inner vertices in order; then one fresh vertex
  // per non-based collapsed tree, ordered by smallest original member.
  std::vector<std::size_t> new_of_root(nv, 0);
  Gaf quo;
  quo.a_size = g.a_size;
  quo.b_size = g.b_size;
  for (std::size_t r = 0; r < g.a_size; ++r) new_of_root[r] = r;
  for (std::size_t v = g.a_size; v < nv; ++v) {
    if (!touched[v]) new_of_root[v] = g.a_size + quo.v_size++;
  }
  for (std::size_t r = g.a_size; r < nv; ++r) {
    if (touched[r] && uf.find(r) == r) {
      new_of_root[r] = g.a_size + quo.v_size++;
    }
  }
  auto qv = [&](std::size_t v) { return new_of_root[uf.find(v)]; };

  std::vector<std::size_t> new_half(g.h_size, 0);
  std::vector<std::size_t> ei = edge_index_by_half(g);
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (!chosen[ei[k]]) new_half[k] = quo.h_size++;
  }
  quo.rho.reserve(g.b_size);
  for (std::size_t r : g.rho) quo.rho.push_back(qv(r));
  quo.sigma.resize(quo.h_size);
  quo.upsilon.resize(quo.h_size);
  for (std::size_t k = 0; k < g.h_size; ++k) {
    if (!chosen[ei[k]]) {
      quo.sigma[new_half[k]] = qv(g.sigma[k]);
      quo.upsilon[new_half[k]] = new_half[g.upsilon[k]];
    }
  }

  GafMorphism proj;
  proj.source = g;
  proj.target = quo;
  proj.map_a.resize(g.a_size);
  std::iota(proj.map_a.begin(), proj.map_a.end(), std::size_t{0});
  proj.map_b.resize(g.b_size);
  std::iota(proj.map_b.begin(), proj.map_b.end(), std::size_t{0});
  proj.map_v.reserve(g.v_size);
  for (std::size_t v = 0; v < g.v_size; ++v) proj.map_v.push_back(qv(g.a_size + v));
  proj.map_h.resize(g.h_size);
  for (std::size_t k = 0; k < g.h_size; ++k) {
    proj.map_h[k] =
        chosen[ei[k]] ? qv(g.sigma[k]) : quo.num_vertices() + new_half[k];
  }
  proj = validate_morphism(std::move(proj));
  return Collapse{std::move(quo), std::move(proj)};
}

namespace {

// Shared backtracking engine: all morphisms g -> g2 with the given boundary
// maps. iso_only restricts map_v and map_h to bijections (no collapsing);
// first_only stops after one hit. Enumeration order is lexicographic on
// (map_v, map_h), map_v entries smallest-value first.
struct MorphismSearch {
  MorphismSearch(const Gaf& src, const Gaf& tgt) : g(src), g2(tgt) {}

  const Gaf& g;
  const Gaf& g2;
  std::vector<std::size_t> map_a;
  std::vector<std::size_t> map_b;
  bool iso_only = false;
  bool first_only = false;

  std::vector<GafMorphism> out;
  std::vector<std::size_t> map_v;
  std::vector<std::size_t> map_h;
  std::vector<std::optional<std::size_t>> forced_v;
  std::vector<bool> half_assigned;
  std::vector<bool> target_half_used;
  std::vector<bool> target_vertex_used;  // iso_only
  std::size_t src_edges_left = 0;
  std::size_t tgt_edges_left = 0;
  bool done = false;

  bool prepare() {
    if (g.a_size != g2.a_size || g.b_size != g2.b_size) return false;
    if (iso_only && (g.v_size != g2.v_size || g.h_size != g2.h_size)) {
      return false;
    }
    forced_v.assign(g.v_size, std::nullopt);
    for (std::size_t m = 0; m < g.b_size; ++m) {
      std::size_t r = g.rho[m];
      std::size_t want = g2.rho[map_b[m]];
      if (r < g.a_size) {
        if (map_a[r] != want) return false;
      } else {
        auto& slot = forced_v[r - g.a_size];
        if (slot && *slot != want) return false;
        slot = want;
      }
    }
    map_v.assign(g.v_size, 0);
    map_h.assign(g.h_size, 0);
    half_assigned.assign(g.h_size, false);
    target_half_used.assign(g2.h_size, false);
    target_vertex_used.assign(g2.num_vertices(), false);
    return true;
  }

  std::size_t vertex_image(std::size_t x) const {
    return x < g.a_size ? map_a[x] : map_v[x - g.a_size];
  }

  void run() {
    if (!prepare()) return;
    rec_v(0);
  }

  void rec_v(std::size_t i) {
    if (done) return;
    if (i == g.v_size) {
      start_halves();
      return;
    }
    std::size_t lo = iso_only ? g2.a_size : 0;
    for (std::size_t w = lo; w < g2.num_vertices() && !done; ++w) {
      if (forced_v[i] && *forced_v[i] != w) continue;
      if (iso_only) {
        if (target_vertex_used[w]) continue;
        if (valence(g, g.a_size + i) != valence(g2, w)) continue;
        target_vertex_used[w] = true;
      }
      map_v[i] = w;
      rec_v(i + 1);
      if (iso_only) target_vertex_used[w] = false;
    }
  }

  void start_halves() {
    // Every inner target vertex needs a nonempty preimage; map_h cannot fix
    // an empty one, so cut here.
    std::vector<bool> hit(g2.num_vertices(), false);
    for (std::size_t x = 0; x < g.num_vertices(); ++x) hit[vertex_image(x)] = true;
    for (std::size_t w = g2.a_size; w < g2.num_vertices(); ++w) {
      if (!hit[w]) return;
    }
    src_edges_left = g.num_edges();
    tgt_edges_left = g2.num_edges();
    rec_h(0);
  }

  void rec_h(std::size_t k) {
    if (done) return;
    while (k < g.h_size && half_assigned[k]) ++k;
    if (src_edges_left < tgt_edges_left) return;
    if (k == g.h_size) {
      emit();
      return;
    }
    const std::size_t p = g.upsilon[k];  // p > k, also unassigned
    const std::size_t img_k = vertex_image(g.sigma[k]);
    const std::size_t img_p = vertex_image(g.sigma[p]);
    const std::size_t nvt = g2.num_vertices();

    half_assigned[k] = half_assigned[p] = true;
    --src_edges_left;
    if (!iso_only && img_k == img_p && src_edges_left >= tgt_edges_left) {
      map_h[k] = img_k;
      map_h[p] = img_p;
      rec_h(k + 1);
    }
    for (std::size_t k2 = 0; k2 < g2.h_size && !done; ++k2) {
      if (target_half_used[k2] || g2.sigma[k2] != img_k) continue;
      std::size_t p2 = g2.upsilon[k2];
      if (g2.sigma[p2] != img_p) continue;
      target_half_used[k2] = target_half_used[p2] = true;
      --tgt_edges_left;
      map_h[k] = nvt + k2;
      map_h[p] = nvt + p2;
      rec_h(k + 1);
      target_half_used[k2] = target_half_used[p2] = false;
      ++tgt_edges_left;
    }
    half_assigned[k] = half_assigned[p] = false;
    ++src_edges_left;
  }

  void emit() {
    GafMorphism f{g, g2, map_a, map_b, map_v, map_h};
    if (!morphism_error(f)) {
      out.push_back(std::move(f));
      if (first_only) done = true;
    }
  }
};

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<GafMorphism> morphisms_between(const Gaf& g, const Gaf& g2) {
  MorphismSearch search{g, g2};
  search.map_a.resize(g.a_size);
  std::iota(search.map_a.begin(), search.map_a.end(), std::size_t{0});
  search.map_b.resize(g.b_size);
  std::iota(search.map_b.begin(), search.map_b.end(), std::size_t{0});
  search.run();
  return std::move(search.out);
}

std::optional<GafMorphism> is_isomorphic(const Gaf& g, const Gaf& g2) {
  MorphismSearch search{g, g2};
  search.map_a.resize(g.a_size);
  std::iota(search.map_a.begin(), search.map_a.end(), std::size_t{0});
  search.map_b.resize(g.b_size);
  std::iota(search.map_b.begin(), search.map_b.end(), std::size_t{0});
  search.iso_only = true;
  search.first_only = true;
  search.run();
  if (search.out.empty()) return std::nullopt;
  return std::move(search.out.front());
}

std::vector<GafMorphism> automorphisms(const Gaf& g, bool fix_a, bool fix_b) {
  std::vector<std::vector<std::size_t>> perms_a =
      fix_a ? std::vector<std::vector<std::size_t>>{all_permutations(g.a_size)
                                                        .front()}
            : all_permutations(g.a_size);
  std::vector<std::vector<std::size_t>> perms_b =
      fix_b ? std::vector<std::vector<std::size_t>>{all_permutations(g.b_size)
                                                        .front()}
            : all_permutations(g.b_size);
  std::vector<GafMorphism> out;
  for (const auto& pa : perms_a) {
    for (const auto& pb : perms_b) {
      MorphismSearch search{g, g};
      search.map_a = pa;
      search.map_b = pb;
      search.iso_only = true;
      search.run();
      for (GafMorphism& f : search.out) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const GafMorphism& x, const GafMorphism& y) {
    return std::tie(x.map_a, x.map_b, x.map_v, x.map_h) <
           std::tie(y.map_a, y.map_b, y.map_v, y.map_h);
  });
  return out;
}

}  // namespace gcob
