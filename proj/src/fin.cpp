#include "gcob/fin.hpp"

#include <algorithm>
#include <numeric>

namespace gcob {

FinMap FinMap::identity(std::size_t n) {
  FinMap f{n, n, std::vector<std::size_t>(n)};
  std::iota(f.values.begin(), f.values.end(), std::size_t{0});
  return f;
}

FinMap FinMap::constant(std::size_t domain, std::size_t codomain,
                        std::size_t value) {
  return FinMap{domain, codomain, std::vector<std::size_t>(domain, value)};
}

void validate_finmap(const FinMap& f) {
  if (f.values.size() != f.domain_size) {
    throw DomainError("IndexOutOfRange",
                      "finite map has " + std::to_string(f.values.size()) +
                          " entries, expected " +
                          std::to_string(f.domain_size));
  }
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    if (f.values[x] >= f.codomain_size) {
      throw DomainError("IndexOutOfRange",
                        "value " + std::to_string(f.values[x]) + " at index " +
                            std::to_string(x) + " is not below " +
                            std::to_string(f.codomain_size));
    }
  }
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.codomain_size != g.domain_size) {
    throw DomainError("BoundaryMismatch",
                      "cannot compose: codomain " +
                          std::to_string(f.codomain_size) + " vs domain " +
                          std::to_string(g.domain_size));
  }
  FinMap out{f.domain_size, g.codomain_size, {}};
  out.values.reserve(f.domain_size);
  for (std::size_t x : f.values) out.values.push_back(g.values[x]);
  return out;
}

bool is_bijective(const FinMap& f) {
  if (f.domain_size != f.codomain_size) return false;
  std::vector<bool> hit(f.codomain_size, false);
  for (std::size_t y : f.values) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

FinMap inverse(const FinMap& f) {
  if (!is_bijective(f)) {
    throw DomainError("PreconditionViolated", "inverse of a non-bijection");
  }
  FinMap out{f.codomain_size, f.domain_size,
             std::vector<std::size_t>(f.codomain_size)};
  for (std::size_t x = 0; x < f.domain_size; ++x) out.values[f.values[x]] = x;
  return out;
}

}  // namespace gcob
