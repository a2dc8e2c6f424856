#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcob {

// Error thrown by validators and constructors when a structural rule is
// broken. code() is a stable machine-readable identifier (it ends up in the
// CLI's {"error": ...} field); detail() names the offending map or index.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, std::string detail)
      : std::runtime_error(code + ": " + detail),
        code_(std::move(code)),
        detail_(std::move(detail)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

// Total map {0..domain_size-1} -> {0..codomain_size-1}.
struct FinMap {
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<std::size_t> values;

  std::size_t operator()(std::size_t x) const { return values[x]; }

  static FinMap identity(std::size_t n);
  static FinMap constant(std::size_t domain, std::size_t codomain,
                         std::size_t value);

  friend bool operator==(const FinMap&, const FinMap&) = default;
};

// Throws IndexOutOfRange when values has the wrong length or an entry is not
// below codomain_size.
void validate_finmap(const FinMap& f);

// g after f. Throws BoundaryMismatch when f.codomain_size != g.domain_size.
FinMap compose(const FinMap& g, const FinMap& f);

bool is_bijective(const FinMap& f);

// Inverse of a bijection; throws PreconditionViolated otherwise.
FinMap inverse(const FinMap& f);

}  // namespace gcob
