#pragma once

// Prime field arithmetic and multiplication tables of small extension fields.

#include <cstdint>
#include <span>
#include <vector>

#include "stronglie/error.hpp"

namespace stronglie {

using Residue = std::uint32_t;

/// Arithmetic modulo a prime p < 2^31. All results are canonical in [0, p).
class PrimeField {
public:
  /// Throws Error if p is not a prime in [2, 2^31].
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue x, Residue y) const noexcept {
    auto s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue x, Residue y) const noexcept {
    return x >= y ? x - y : x + p_ - y;
  }
  Residue neg(Residue x) const noexcept { return x == 0 ? 0 : p_ - x; }
  Residue mul(Residue x, Residue y) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(x) * y % p_);
  }
  /// Throws Error on x == 0.
  Residue inv(Residue x) const;
  Residue pow(Residue x, std::uint64_t e) const noexcept;

  /// (-1)^e as a residue.
  Residue sign(unsigned e) const noexcept { return e % 2 == 0 ? 1 % p_ : neg(1); }

  friend bool operator==(const PrimeField &, const PrimeField &) = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// A residue tagged with its modulus. Mixing moduli throws.
class FpElem {
public:
  FpElem(Residue value, std::uint32_t modulus);
  FpElem(Residue value, const PrimeField &field) : FpElem(value, field.modulus()) {}

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpElem operator+(const FpElem &o) const;
  FpElem operator-(const FpElem &o) const;
  FpElem operator*(const FpElem &o) const;
  FpElem operator-() const;
  /// Throws Error for zero.
  FpElem inverse() const;

  friend bool operator==(const FpElem &, const FpElem &) = default;

private:
  void check_same(const FpElem &o) const;

  Residue value_;
  std::uint32_t modulus_;
};

/// Multiplication table of F_{p^d} = F_p[t]/(f) on the basis 1, t, ..., t^{d-1}.
/// products[(i*d + j)*d + k] is the coefficient of e_k in e_i * e_j.
class ExtFieldTable {
public:
  ExtFieldTable(PrimeField field, std::size_t degree, std::vector<Residue> products);

  const PrimeField &field() const noexcept { return field_; }
  std::size_t degree() const noexcept { return d_; }
  Residue lambda(std::size_t i, std::size_t j, std::size_t k) const {
    return products_[(i * d_ + j) * d_ + k];
  }

  /// Product of two elements given in basis coordinates.
  std::vector<Residue> multiply(std::span<const Residue> x,
                                std::span<const Residue> y) const;

  /// Exhaustive check of the field axioms; only feasible for p^d <= 10^4.
  bool satisfies_field_axioms() const;

private:
  PrimeField field_;
  std::size_t d_;
  std::vector<Residue> products_;
};

/// Builds the table for F_p[t]/(f) where f = t^d + c_{d-1} t^{d-1} + ... + c_0.
/// `lower_coeffs` lists c_0, ..., c_{d-1}. Throws Error if f is reducible.
ExtFieldTable ext_field_gf(std::uint32_t p, std::size_t d,
                           std::span<const Residue> lower_coeffs);

/// True iff the monic polynomial with the given lower coefficients is
/// irreducible over F_p (trial division by monic polynomials of degree <= d/2).
bool is_irreducible(const PrimeField &field, std::span<const Residue> lower_coeffs);

/// First irreducible monic polynomial of degree d in lexicographic order of
/// (c_{d-1}, ..., c_0); used when the caller does not care which one.
std::vector<Residue> find_irreducible(const PrimeField &field, std::size_t d);

} // namespace stronglie
