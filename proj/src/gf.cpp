#include "stronglie/gf.hpp"

#include <string>

namespace stronglie {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2)
    return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > (1u << 31) || !is_prime(p))
    throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue PrimeField::pow(Residue x, std::uint64_t e) const noexcept {
  Residue r = 1 % p_;
  while (e) {
    if (e & 1)
      r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Residue PrimeField::inv(Residue x) const {
  if (x % p_ == 0)
    throw Error("inversion of zero in F_" + std::to_string(p_));
  return pow(x, p_ - 2);
}

FpElem::FpElem(Residue value, std::uint32_t modulus)
    : value_(value % modulus), modulus_(modulus) {}

void FpElem::check_same(const FpElem &o) const {
  if (modulus_ != o.modulus_)
    throw Error("modulus mismatch: " + std::to_string(modulus_) + " vs " +
                std::to_string(o.modulus_));
}

FpElem FpElem::operator+(const FpElem &o) const {
  check_same(o);
  return {PrimeField(modulus_).add(value_, o.value_), modulus_};
}
FpElem FpElem::operator-(const FpElem &o) const {
  check_same(o);
  return {PrimeField(modulus_).sub(value_, o.value_), modulus_};
}
FpElem FpElem::operator*(const FpElem &o) const {
  check_same(o);
  return {PrimeField(modulus_).mul(value_, o.value_), modulus_};
}
FpElem FpElem::operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }
FpElem FpElem::inverse() const { return {PrimeField(modulus_).inv(value_), modulus_}; }

namespace {

// Dense univariate polynomials, coefficient of t^i at index i, no trailing zeros.
using UPoly = std::vector<Residue>;

void trim(UPoly &f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
}

UPoly monic_from_lower(std::span<const Residue> lower) {
  UPoly f(lower.begin(), lower.end());
  f.push_back(1);
  return f;
}

UPoly remainder(const PrimeField &F, UPoly f, const UPoly &g) {
  const Residue lead_inv = F.inv(g.back());
  trim(f);
  while (f.size() >= g.size()) {
    const Residue c = F.mul(f.back(), lead_inv);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = F.sub(f[shift + i], F.mul(c, g[i]));
    trim(f);
  }
  return f;
}

// Enumerates the monic polynomials of degree e; returns false when exhausted.
bool next_monic(const PrimeField &F, UPoly &g) {
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (++g[i] < F.modulus())
      return true;
    g[i] = 0;
  }
  return false;
}

} // namespace

bool is_irreducible(const PrimeField &field, std::span<const Residue> lower_coeffs) {
  const UPoly f = monic_from_lower(lower_coeffs);
  const std::size_t d = lower_coeffs.size();
  if (d == 0)
    return false;
  for (std::size_t e = 1; 2 * e <= d; ++e) {
    UPoly g(e + 1, 0);
    g[e] = 1;
    do {
      if (remainder(field, f, g).empty())
        return false;
    } while (next_monic(field, g));
  }
  return true;
}

std::vector<Residue> find_irreducible(const PrimeField &field, std::size_t d) {
  if (d == 0)
    throw Error("extension degree must be positive");
  std::vector<Residue> lower(d, 0);
  // Reversed odometer so that the search order is lexicographic in (c_{d-1}, ..., c_0).
  while (true) {
    if (is_irreducible(field, lower))
      return lower;
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (++lower[i] < field.modulus())
        break;
      lower[i] = 0;
    }
    if (i == d)
      throw Error("no irreducible polynomial found");
  }
}

ExtFieldTable::ExtFieldTable(PrimeField field, std::size_t degree,
                             std::vector<Residue> products)
    : field_(field), d_(degree), products_(std::move(products)) {
  if (products_.size() != d_ * d_ * d_)
    throw Error("extension table has wrong size");
}

std::vector<Residue> ExtFieldTable::multiply(std::span<const Residue> x,
                                             std::span<const Residue> y) const {
  std::vector<Residue> out(d_, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (y[j] == 0)
        continue;
      const Residue xy = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < d_; ++k)
        out[k] = field_.add(out[k], field_.mul(xy, lambda(i, j, k)));
    }
  }
  return out;
}

bool ExtFieldTable::satisfies_field_axioms() const {
  const std::uint32_t p = field_.modulus();
  std::size_t q = 1;
  for (std::size_t i = 0; i < d_; ++i) {
    q *= p;
    if (q > 10000)
      throw Error("field axiom check is limited to p^d <= 10^4");
  }
  auto element = [&](std::size_t code) {
    std::vector<Residue> v(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      v[i] = static_cast<Residue>(code % p);
      code /= p;
    }
    return v;
  };
  std::vector<std::vector<Residue>> all;
  all.reserve(q);
  for (std::size_t c = 0; c < q; ++c)
    all.push_back(element(c));
  std::vector<Residue> one(d_, 0);
  one[0] = 1;
  // Products of basis elements determine the rest by bilinearity, so
  // commutativity, associativity and the unit only need checking on the basis.
  for (std::size_t i = 0; i < d_; ++i) {
    std::vector<Residue> ei(d_, 0);
    ei[i] = 1;
    if (multiply(one, ei) != ei)
      return false;
    for (std::size_t j = 0; j < d_; ++j) {
      std::vector<Residue> ej(d_, 0);
      ej[j] = 1;
      if (multiply(ei, ej) != multiply(ej, ei))
        return false;
      for (std::size_t k = 0; k < d_; ++k) {
        std::vector<Residue> ek(d_, 0);
        ek[k] = 1;
        if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek)))
          return false;
      }
    }
  }
  // Invertibility: every nonzero element has some partner with product 1.
  for (std::size_t a = 1; a < q; ++a) {
    bool found = false;
    for (std::size_t b = 1; b < q && !found; ++b)
      found = multiply(all[a], all[b]) == one;
    if (!found)
      return false;
  }
  return true;
}

ExtFieldTable ext_field_gf(std::uint32_t p, std::size_t d,
                           std::span<const Residue> lower_coeffs) {
  PrimeField F(p);
  if (d == 0 || lower_coeffs.size() != d)
    throw Error("expected " + std::to_string(d) + " lower coefficients");
  for (Residue c : lower_coeffs)
    if (c >= p)
      throw Error("coefficient out of range for F_" + std::to_string(p));
  if (!is_irreducible(F, lower_coeffs))
    throw Error("polynomial is reducible over F_" + std::to_string(p));

  const UPoly f = monic_from_lower(lower_coeffs);
  std::vector<Residue> products(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      UPoly t(i + j + 1, 0);
      t[i + j] = 1;
      UPoly r = remainder(F, t, f);
      for (std::size_t k = 0; k < r.size(); ++k)
        products[(i * d + j) * d + k] = r[k];
    }
  return ExtFieldTable(F, d, std::move(products));
}

} // namespace stronglie
