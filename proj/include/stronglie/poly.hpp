#pragma once

// Sparse polynomials in the free associative algebra F_p<x_1, ..., x_r>.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stronglie/gf.hpp"
#include "stronglie/word.hpp"

namespace stronglie {

class Poly {
public:
  using Terms = std::map<Word, Residue>;

  Poly(std::size_t generators, PrimeField field) : generators_(generators), field_(field) {}

  static Poly monomial(const Word &w, std::size_t generators, PrimeField field,
                       Residue coeff = 1);
  /// Sum of the given words, each with coefficient 1.
  static Poly sum_of(const std::vector<Word> &words, std::size_t generators,
                     PrimeField field);

  std::size_t generator_count() const noexcept { return generators_; }
  const PrimeField &field() const noexcept { return field_; }
  const Terms &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  FpElem coefficient(const Word &w) const;
  /// Adds c*w, pruning the term if it cancels.
  void add_term(const Word &w, Residue c);

  Poly operator+(const Poly &g) const;
  Poly operator-(const Poly &g) const;
  Poly operator*(const Poly &g) const;
  Poly operator-() const;
  Poly &operator+=(const Poly &g);
  Poly &operator-=(const Poly &g);
  Poly scaled(Residue c) const;

  /// u * f * v for words u, v.
  Poly sandwiched(const Word &u, const Word &v) const;

  /// Distinct multiweights of the terms, sorted.
  std::vector<Multiweight> multiweights() const;
  bool is_multihomogeneous() const { return multiweights().size() <= 1; }

  friend bool operator==(const Poly &, const Poly &) = default;

private:
  void check_compatible(const Poly &g) const;

  std::size_t generators_;
  PrimeField field_;
  Terms terms_;
};

/// Reverses every word: the anti-automorphism fixing each generator.
Poly mirror(const Poly &f);

/// Relabels letter i as perm[i]. Throws Error unless perm is a bijection.
Poly swap_generators(const Poly &f, const std::vector<Letter> &perm);
/// The a <-> b exchange on a two-generator polynomial.
Poly swap_ab(const Poly &f);
Word swap_ab(const Word &w);

/// Terms of f of multiweight exactly mw.
Poly component(const Poly &f, const Multiweight &mw);
/// f split into its multihomogeneous components.
std::map<Multiweight, Poly> components(const Poly &f);

/// Associative expansion of the left-normed bracket [g_1, ..., g_n].
Poly expand_bracket(const std::vector<Letter> &generators_in_bracket,
                    std::size_t generators, PrimeField field);

/// Replaces each letter i by images[i] (which may be the empty word).
/// `target_generators` is the arity of the result. Throws Error when a letter
/// occurring in f has no image.
Poly substitute(const Poly &f, const std::vector<std::optional<Word>> &images,
                std::size_t target_generators);

/// Terms in deglex order joined by " + ", unit coefficients omitted,
/// e.g. "a^3*b + 2*a^2*b*a"; zero renders as "0".
std::string format_poly(const Poly &f, const Alphabet &alphabet);

/// Parses the polynomial grammar
///   polynomial := ['-'] term (('+'|'-') term)*
///   term       := [coeff '*'] factor ('*' factor)* | coeff
///   factor     := generator ['^' exponent]
/// Errors carry the 1-based column offset by `column_base`.
Poly parse_poly(std::string_view text, const Alphabet &alphabet, PrimeField field,
                std::size_t line = 1, std::size_t column_base = 0);

} // namespace stronglie
