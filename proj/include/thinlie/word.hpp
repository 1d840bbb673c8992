#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thinlie {

/// The two degree-1 generators. Order matters: x < y everywhere
/// (candidate ordering, Lyndon words, canonical term order).
enum class Gen : std::uint8_t { x = 0, y = 1 };

inline constexpr Gen other(Gen g) { return g == Gen::x ? Gen::y : Gen::x; }
inline constexpr char gen_char(Gen g) { return g == Gen::x ? 'x' : 'y'; }

/// A word over {x, y}; interpreted left-normed when used as a Lie product.
using Word = std::vector<Gen>;

std::string word_to_string(const Word& w);

/// Compact form with power runs, e.g. "y x^5 y".
std::string word_to_pretty(const Word& w);

}  // namespace thinlie
