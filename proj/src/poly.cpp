#include "stronglie/poly.hpp"

#include <algorithm>
#include <set>

#include "stronglie/error.hpp"

namespace stronglie {

Poly Poly::monomial(const Word &w, std::size_t generators, PrimeField field, Residue coeff) {
  Poly f(generators, field);
  f.add_term(w, field.reduce(coeff));
  return f;
}

Poly Poly::sum_of(const std::vector<Word> &words, std::size_t generators, PrimeField field) {
  Poly f(generators, field);
  for (const auto &w : words)
    f.add_term(w, 1);
  return f;
}

FpElem Poly::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return {it == terms_.end() ? 0u : it->second, field_};
}

void Poly::add_term(const Word &w, Residue c) {
  c %= field_.modulus();
  if (c == 0)
    return;
  for (Letter l : w)
    if (l >= generators_)
      throw Error("letter " + std::to_string(l) + " outside a " +
                  std::to_string(generators_) + "-generator algebra");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly &g) const {
  if (!(field_ == g.field_))
    throw Error("modulus mismatch: " + std::to_string(field_.modulus()) + " vs " +
                std::to_string(g.field_.modulus()));
  if (generators_ != g.generators_)
    throw Error("generator count mismatch: " + std::to_string(generators_) + " vs " +
                std::to_string(g.generators_));
}

Poly &Poly::operator+=(const Poly &g) {
  check_compatible(g);
  for (const auto &[w, c] : g.terms_)
    add_term(w, c);
  return *this;
}

Poly &Poly::operator-=(const Poly &g) {
  check_compatible(g);
  for (const auto &[w, c] : g.terms_)
    add_term(w, field_.neg(c));
  return *this;
}

Poly Poly::operator+(const Poly &g) const {
  Poly r = *this;
  r += g;
  return r;
}

Poly Poly::operator-(const Poly &g) const {
  Poly r = *this;
  r -= g;
  return r;
}

Poly Poly::operator-() const { return scaled(field_.neg(1)); }

Poly Poly::operator*(const Poly &g) const {
  check_compatible(g);
  Poly r(generators_, field_);
  for (const auto &[u, c] : terms_)
    for (const auto &[v, d] : g.terms_)
      r.add_term(u * v, field_.mul(c, d));
  return r;
}

Poly Poly::scaled(Residue c) const {
  c %= field_.modulus();
  Poly r(generators_, field_);
  if (c == 0)
    return r;
  for (const auto &[w, d] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), w, field_.mul(c, d));
  return r;
}

Poly Poly::sandwiched(const Word &u, const Word &v) const {
  Poly r(generators_, field_);
  for (const auto &[w, c] : terms_)
    r.add_term(u * w * v, c);
  return r;
}

std::vector<Multiweight> Poly::multiweights() const {
  std::set<Multiweight> seen;
  for (const auto &[w, c] : terms_)
    seen.insert(Multiweight::of(w, generators_));
  return {seen.begin(), seen.end()};
}

Poly mirror(const Poly &f) {
  Poly r(f.generator_count(), f.field());
  for (const auto &[w, c] : f.terms())
    r.add_term(w.reversed(), c);
  return r;
}

Poly swap_generators(const Poly &f, const std::vector<Letter> &perm) {
  const std::size_t r = f.generator_count();
  if (perm.size() != r)
    throw Error("permutation has " + std::to_string(perm.size()) + " entries for " +
                std::to_string(r) + " generators");
  std::vector<bool> hit(r, false);
  for (Letter l : perm) {
    if (l >= r || hit[l])
      throw Error("generator map is not a bijection");
    hit[l] = true;
  }
  Poly out(r, f.field());
  for (const auto &[w, c] : f.terms()) {
    std::vector<Letter> letters(w.begin(), w.end());
    for (auto &l : letters)
      l = perm[l];
    out.add_term(Word(std::move(letters)), c);
  }
  return out;
}

Word swap_ab(const Word &w) {
  std::vector<Letter> letters(w.begin(), w.end());
  for (auto &l : letters)
    if (l < 2)
      l ^= 1;
  return Word(std::move(letters));
}

Poly swap_ab(const Poly &f) {
  if (f.generator_count() < 2)
    throw Error("a <-> b exchange needs at least two generators");
  std::vector<Letter> perm(f.generator_count());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<Letter>(i);
  std::swap(perm[0], perm[1]);
  return swap_generators(f, perm);
}

Poly component(const Poly &f, const Multiweight &mw) {
  Poly r(f.generator_count(), f.field());
  for (const auto &[w, c] : f.terms())
    if (Multiweight::of(w, f.generator_count()) == mw)
      r.add_term(w, c);
  return r;
}

std::map<Multiweight, Poly> components(const Poly &f) {
  std::map<Multiweight, Poly> out;
  for (const auto &[w, c] : f.terms()) {
    auto mw = Multiweight::of(w, f.generator_count());
    auto it = out.try_emplace(mw, f.generator_count(), f.field()).first;
    it->second.add_term(w, c);
  }
  return out;
}

Poly expand_bracket(const std::vector<Letter> &generators_in_bracket, std::size_t generators,
                    PrimeField field) {
  if (generators_in_bracket.empty())
    throw Error("empty bracket");
  Poly acc = Poly::monomial(Word{generators_in_bracket[0]}, generators, field);
  for (std::size_t i = 1; i < generators_in_bracket.size(); ++i) {
    const Poly g = Poly::monomial(Word{generators_in_bracket[i]}, generators, field);
    acc = acc * g - g * acc;
  }
  return acc;
}

Poly substitute(const Poly &f, const std::vector<std::optional<Word>> &images,
                std::size_t target_generators) {
  Poly r(target_generators, f.field());
  for (const auto &[w, c] : f.terms()) {
    Word image;
    for (Letter l : w) {
      if (l >= images.size() || !images[l])
        throw Error("no image given for generator " + std::to_string(l));
      image *= *images[l];
    }
    r.add_term(image, c);
  }
  return r;
}

} // namespace stronglie
