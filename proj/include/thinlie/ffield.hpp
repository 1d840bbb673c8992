#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace thinlie {

class Field;
using FieldPtr = std::shared_ptr<const Field>;
using FelCoeffs = boost::container::small_vector<std::uint64_t, 4>;

/// Element of GF(p^k) in polynomial basis: exactly k residues mod p,
/// low-to-high, always canonically reduced.
class Fel {
 public:
  Fel() = default;
  Fel(FieldPtr f, FelCoeffs coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {}

  const FieldPtr& field() const { return f_; }
  const FelCoeffs& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  Fel operator+(const Fel& o) const;
  Fel operator-(const Fel& o) const;
  Fel operator-() const;
  Fel operator*(const Fel& o) const;
  Fel& operator+=(const Fel& o);
  Fel& operator-=(const Fel& o);
  /// this += a*b and this -= a*b without temporaries (hot loops).
  void addmul(const Fel& a, const Fel& b);
  void submul(const Fel& a, const Fel& b);
  bool operator==(const Fel& o) const;
  bool operator!=(const Fel& o) const { return !(*this == o); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Fel inv() const;
  Fel pow(std::int64_t e) const;

  /// Canonical text form "c0" (k=1) or "c0+c1*t+...+c_{k-1}*t^{k-1}" (k>1).
  std::string str() const;

 private:
  FieldPtr f_;
  FelCoeffs c_;
};

/// Immutable description of GF(p^k); shared by all its elements.
/// Construction validates p prime and the modulus monic irreducible.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Default modulus: the lexicographically smallest monic irreducible of
  /// degree k over GF(p), coefficient tuples compared high-degree first with
  /// the constant term last. Auto-search requires k <= 4.
  static FieldPtr make(std::uint64_t p, unsigned k = 1);
  static FieldPtr make(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  /// p^k; throws std::overflow_error if it does not fit in 64 bits.
  std::uint64_t order() const;
  const std::vector<std::uint64_t>& modulus() const { return mod_; }
  bool has_default_modulus() const;

  Fel zero() const;
  Fel one() const;
  Fel from_int(std::int64_t n) const;
  Fel element(const std::vector<std::uint64_t>& coeffs) const;
  /// Polynomial generator t (requires k >= 2).
  Fel gen() const;
  /// The i-th element in the canonical enumeration (coefficient odometer,
  /// c0 fastest); 0 <= i < order().
  Fel element_by_index(std::uint64_t i) const;
  /// Parse the canonical text form (terms may appear in any order).
  Fel parse(const std::string& text) const;

  static std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned k);
  static bool is_prime(std::uint64_t p);
  /// Exhaustive trial division by all monic factors of degree <= deg/2.
  static bool is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p);

  /// True if both describe the same field (same p, k, modulus).
  bool same_as(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_;
  }

 private:
  Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);
  FieldPtr self() const { return shared_from_this(); }

  friend class Fel;
  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> mod_;  // k+1 coefficients, monic
};

}  // namespace thinlie
