#pragma once

#include <random>

#include "stronglie/poly.hpp"

namespace testing {

using namespace stronglie;

inline Word random_word(std::mt19937_64 &rng, std::size_t len, std::size_t gens = 2) {
  std::uniform_int_distribution<int> g(0, static_cast<int>(gens) - 1);
  std::vector<Letter> w(len);
  for (auto &l : w)
    l = static_cast<Letter>(g(rng));
  return Word(std::move(w));
}

inline Word random_word(std::mt19937_64 &rng, const Multiweight &mw) {
  std::vector<Letter> w;
  for (std::size_t g = 0; g < mw.generators(); ++g)
    w.insert(w.end(), mw[g], static_cast<Letter>(g));
  std::shuffle(w.begin(), w.end(), rng);
  return Word(std::move(w));
}

inline Poly random_poly(std::mt19937_64 &rng, PrimeField F, std::size_t terms,
                        std::size_t max_len, std::size_t gens = 2) {
  Poly f(gens, F);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Residue> c(1, F.modulus() - 1);
  for (std::size_t i = 0; i < terms; ++i)
    f.add_term(random_word(rng, len(rng), gens), c(rng));
  return f;
}

inline Poly random_homogeneous(std::mt19937_64 &rng, PrimeField F, const Multiweight &mw,
                               std::size_t terms) {
  Poly f(mw.generators(), F);
  std::uniform_int_distribution<Residue> c(1, F.modulus() - 1);
  for (std::size_t i = 0; i < terms; ++i)
    f.add_term(random_word(rng, mw), c(rng));
  return f;
}

// Word from a string of generator letters: "abba" -> {0,1,1,0}.
inline Word w(std::string_view s) {
  std::vector<Letter> out;
  for (char ch : s)
    out.push_back(static_cast<Letter>(ch - 'a'));
  return Word(std::move(out));
}

} // namespace testing
