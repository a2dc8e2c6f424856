#include "gcob/monoidal.hpp"

#include <numeric>

namespace gcob {

Gaf identity_gaf(std::size_t n) {
  Gaf g;
  g.a_size = n;
  g.b_size = n;
  g.rho.resize(n);
  std::iota(g.rho.begin(), g.rho.end(), std::size_t{0});
  return g;
}

Gaf embed_finmap(const FinMap& mu) {
  Gaf g;
  g.a_size = mu.codomain_size;
  g.b_size = mu.domain_size;
  g.rho = mu.values;
  return validate_gaf(std::move(g));
}

Gaf tensor(const Gaf& g, const Gaf& g2) {
  auto tr1 = [&](std::size_t x) { return x < g.a_size ? x : x + g2.a_size; };
  auto tr2 = [&](std::size_t x) {
    return x < g2.a_size ? g.a_size + x : g.a_size + g.v_size + x;
  };
  Gaf out;
  out.a_size = g.a_size + g2.a_size;
  out.b_size = g.b_size + g2.b_size;
  out.v_size = g.v_size + g2.v_size;
  out.h_size = g.h_size + g2.h_size;
  out.rho.reserve(out.b_size);
  for (std::size_t r : g.rho) out.rho.push_back(tr1(r));
  for (std::size_t r : g2.rho) out.rho.push_back(tr2(r));
  out.sigma.reserve(out.h_size);
  for (std::size_t s : g.sigma) out.sigma.push_back(tr1(s));
  for (std::size_t s : g2.sigma) out.sigma.push_back(tr2(s));
  out.upsilon.reserve(out.h_size);
  for (std::size_t u : g.upsilon) out.upsilon.push_back(u);
  for (std::size_t u : g2.upsilon) out.upsilon.push_back(g.h_size + u);
  return out;
}

GafMorphism tensor_m(const GafMorphism& f, const GafMorphism& f2) {
  const Gaf& t1 = f.target;
  const Gaf& t2 = f2.target;
  GafMorphism out;
  out.source = tensor(f.source, f2.source);
  out.target = tensor(t1, t2);
  auto tr1 = [&](std::size_t x) { return x < t1.a_size ? x : x + t2.a_size; };
  auto tr2 = [&](std::size_t x) {
    return x < t2.a_size ? t1.a_size + x : t1.a_size + t1.v_size + x;
  };
  const std::size_t nv_out = out.target.num_vertices();
  auto tr1h = [&](std::size_t y) {
    return y < t1.num_vertices() ? tr1(y) : nv_out + (y - t1.num_vertices());
  };
  auto tr2h = [&](std::size_t y) {
    return y < t2.num_vertices() ? tr2(y)
                                 : nv_out + t1.h_size + (y - t2.num_vertices());
  };
  out.map_a.reserve(out.source.a_size);
  for (std::size_t y : f.map_a) out.map_a.push_back(y);
  for (std::size_t y : f2.map_a) out.map_a.push_back(t1.a_size + y);
  out.map_b.reserve(out.source.b_size);
  for (std::size_t y : f.map_b) out.map_b.push_back(y);
  for (std::size_t y : f2.map_b) out.map_b.push_back(t1.b_size + y);
  out.map_v.reserve(out.source.v_size);
  for (std::size_t y : f.map_v) out.map_v.push_back(tr1(y));
  for (std::size_t y : f2.map_v) out.map_v.push_back(tr2(y));
  out.map_h.reserve(out.source.h_size);
  for (std::size_t y : f.map_h) out.map_h.push_back(tr1h(y));
  for (std::size_t y : f2.map_h) out.map_h.push_back(tr2h(y));
  return validate_morphism(std::move(out));
}

Gaf compose_h(const Gaf& g, const Gaf& g2) {
  if (g.b_size != g2.a_size) {
    throw DomainError("BoundaryMismatch",
                      "horizontal composition needs b_size(first) == "
                      "a_size(second), got " +
                          std::to_string(g.b_size) + " and " +
                          std::to_string(g2.a_size));
  }
  // Attaching vertex x of g2 becomes the vertex carrying marking x of g;
  // inner vertices of g2 land after g's inner block.
  auto lam = [&](std::size_t x) {
    return x < g2.a_size ? g.rho[x] : g.a_size + g.v_size + (x - g2.a_size);
  };
  Gaf out;
  out.a_size = g.a_size;
  out.b_size = g2.b_size;
  out.v_size = g.v_size + g2.v_size;
  out.h_size = g.h_size + g2.h_size;
  out.rho.reserve(out.b_size);
  for (std::size_t r : g2.rho) out.rho.push_back(lam(r));
  out.sigma = g.sigma;
  out.sigma.reserve(out.h_size);
  for (std::size_t s : g2.sigma) out.sigma.push_back(lam(s));
  out.upsilon = g.upsilon;
  out.upsilon.reserve(out.h_size);
  for (std::size_t u : g2.upsilon) out.upsilon.push_back(g.h_size + u);
  return out;
}

GafMorphism compose_h_m(const GafMorphism& f, const GafMorphism& f2) {
  if (f.source.b_size != f2.source.a_size ||
      f.target.b_size != f2.target.a_size) {
    throw DomainError("BoundaryMismatch",
                      "horizontal composition of morphisms needs "
                      "h-composable sources and targets");
  }
  if (f.map_b != f2.map_a) {
    throw DomainError("BoundaryMismatch",
                      "horizontal composition of morphisms needs map_b(first) "
                      "== map_a(second) on the glued boundary");
  }
  const Gaf& t1 = f.target;
  const Gaf& t2 = f2.target;
  GafMorphism out;
  out.source = compose_h(f.source, f2.source);
  out.target = compose_h(t1, t2);
  const std::size_t nv1 = t1.num_vertices();
  const std::size_t nv2 = t2.num_vertices();
  const std::size_t nv_out = out.target.num_vertices();
  // t1's vertices keep their indices in the composite target; t2's attaching
  // vertices were glued away and redirect through t1's markings.
  auto lam = [&](std::size_t x) {
    return x < t2.a_size ? t1.rho[x] : t1.a_size + t1.v_size + (x - t2.a_size);
  };
  out.map_a = f.map_a;
  out.map_b = f2.map_b;
  out.map_v.reserve(out.source.v_size);
  for (std::size_t y : f.map_v) out.map_v.push_back(y);
  for (std::size_t y : f2.map_v) out.map_v.push_back(lam(y));
  out.map_h.reserve(out.source.h_size);
  for (std::size_t y : f.map_h) {
    out.map_h.push_back(y < nv1 ? y : nv_out + (y - nv1));
  }
  for (std::size_t y : f2.map_h) {
    out.map_h.push_back(y < nv2 ? lam(y) : nv_out + t1.h_size + (y - nv2));
  }
  return validate_morphism(std::move(out));
}

}  // namespace gcob
