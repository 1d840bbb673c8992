#pragma once

#include <cstdint>
#include <vector>

#include "thinlie/word.hpp"

namespace thinlie {

/// C(n, m) mod p, computed digit-wise in base p (Lucas). 0 when m > n.
std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// All Lyndon words of the given length over x < y, in lexicographic order
/// (Duval's generation). degree >= 1.
std::vector<Word> lyndon_words(unsigned degree);

/// Dimension of the degree-d component of the free Lie algebra on two
/// generators: (1/d) sum_{e|d} mu(e) 2^{d/e}. Requires 1 <= d <= 62.
std::uint64_t witt_dim2(unsigned d);

}  // namespace thinlie
