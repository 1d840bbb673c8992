#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "thinlie/bracketlang.hpp"
#include "thinlie/linalg.hpp"

namespace thinlie {

/// Dimension of the degree-d part of the free Lie algebra on two generators.
/// Supported range 1 <= d <= 14.
std::uint64_t free_dims(unsigned d);

/// Low-degree model of the free Lie algebra on {x, y}: Lyndon words realized
/// as polynomials in the free associative algebra, reduced back to the Lyndon
/// basis by triangularity (the bracketing of a Lyndon word is the word itself
/// plus lexicographically greater monomials).
class FreeLieContext {
 public:
  FreeLieContext(FieldPtr field, unsigned maxd);

  unsigned maxd() const { return maxd_; }
  const FieldPtr& field() const { return f_; }
  const std::vector<Word>& lyndon(unsigned d) const { return words_.at(d); }
  /// [., g] : degree d -> degree d+1 over Lyndon coordinates (d < maxd).
  const Mat& act(unsigned d, Gen g) const { return act_.at(d)[int(g)]; }

  /// Lyndon coordinates of a homogeneous expression (degree <= maxd).
  Vec expr_coords(const BracketExpr& e) const;
  /// Bracket of two Lyndon basis elements, reduced over the Lyndon basis.
  /// Throws if the product leaves the Lie span (it never does; this is the
  /// closure check).
  Vec bracket_basis(unsigned du, std::size_t iu, unsigned dv, std::size_t iv) const;

 private:
  Vec reduce(unsigned d, std::vector<Fel>& poly) const;

  FieldPtr f_;
  unsigned maxd_;
  std::vector<std::vector<Word>> words_;           // per degree
  std::vector<std::vector<std::vector<Fel>>> brackets_;  // assoc poly per Lyndon word
  std::vector<std::array<Mat, 2>> act_;
};

/// Degreewise ideal closure inside the free Lie algebra:
/// I_d = span(relators of degree d) + [I_{d-1}, x] + [I_{d-1}, y];
/// returns free_dims(d) - dim I_d for d = 1..maxd. Requires maxd <= 12.
std::vector<std::size_t> brute_quotient_dims(const Presentation& p, unsigned maxd);
/// Same, reusing a prebuilt context over the same field (the context build
/// dominates the cost when several presentations are checked).
std::vector<std::size_t> brute_quotient_dims(const Presentation& p, unsigned maxd,
                                             const FreeLieContext& ctx);

}  // namespace thinlie
