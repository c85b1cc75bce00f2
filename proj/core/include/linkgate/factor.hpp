#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linkgate/budget.hpp"
#include "linkgate/laurent.hpp"

namespace linkgate {

// Irreducible factorization over the Laurent ring, up to units.
// content * prod(factor^mult) equals the input up to ±t^a; factors are
// unit-normalized irreducibles in a deterministic order.
struct Factorization {
  Int content = 1;  // positive
  std::vector<std::pair<LaurentPoly, int>> factors;

  LaurentPoly expand(int num_vars) const;
};

struct FactorLimits {
  int max_total_degree = 24;
  int max_active_vars = 2;
};

// Returns nullopt when the input is outside the configured budget or the
// cooperative budget token runs out ("factorization unavailable"); callers
// must degrade to Unknown, never guess. Input must be nonzero.
std::optional<Factorization> factor(const LaurentPoly& p,
                                    Budget* budget = nullptr,
                                    const FactorLimits& limits = {});

}  // namespace linkgate
