#pragma once

#include <cstdint>

#include "thinlie/bracketlang.hpp"

namespace thinlie {

/// Parameters of the mixed-type Nottingham presentations: p > 3 prime,
/// q = p^e > 5, s >= 1, lambda in GF(p^k) (nonzero for the main preset).
struct NottinghamParams {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t s = 0;
  Fel lambda;
  FieldPtr field;
};

/// Validates the invariants above; throws std::invalid_argument otherwise.
void validate_params(const NottinghamParams& np, bool lambda_nonzero);

/// Exponent e with q = p^e, or throws if q is not a power of p.
unsigned power_exponent(std::uint64_t q, std::uint64_t p);

/// The main presentation: relators, in order,
///   [y x^i y]                      for 0 < i < q-2,
///   [v1 x x], [v1 y y], [v1 y x] + 2 [v1 x y],
///   [v1 y x^i y]                   for 0 < i < q-2,
///   [v_k y x] + [v_k x y]          for even k, 2 <= k <= p^s,
///   lambda [v_{p^s+1} y x] - (1-lambda) [v_{p^s+1} x y].
/// Requires lambda != 0.
Presentation nottingham_mixed(const NottinghamParams& np);

/// The lambda = 0 variant: the final relator degenerates to
/// [v_{p^s+1} x y] = 0 and the extra relator [v_{2p^s+2} x x] = 0 is added,
/// where v_{2p^s+2} is built with the type-0 shift at step p^s + 2.
Presentation nottingham_mixed_lambda0(std::uint64_t p, std::uint64_t q, std::uint64_t s,
                                      FieldPtr field = nullptr);

}  // namespace thinlie
