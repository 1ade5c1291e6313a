#include <doctest.h>

#include "stronglie/error.hpp"
#include "stronglie/gf.hpp"
#include "stronglie/poly.hpp"
#include "support.hpp"

using namespace stronglie;
using testing::w;

TEST_SUITE("gf") {
  TEST_CASE("prime field arithmetic") {
    const PrimeField F(7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.neg(0) == 0);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.reduce(-1) == 6);
    CHECK(F.sign(3) == 6);
    CHECK(F.sign(2) == 1);
    CHECK(PrimeField(2).sign(1) == 1);
    for (Residue x = 1; x < 7; ++x)
      CHECK(F.mul(x, F.inv(x)) == 1);
    CHECK_THROWS_AS(F.inv(0), Error);
    CHECK(F.pow(3, 6) == 1);
  }

  TEST_CASE("invalid moduli") {
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_THROWS_AS(PrimeField(9), Error);
    CHECK_NOTHROW(PrimeField(2147483647u));
  }

  TEST_CASE("is_prime against trial division") {
    for (std::uint64_t n = 0; n < 500; ++n) {
      bool naive = n >= 2;
      for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
          naive = false;
      CHECK(is_prime(n) == naive);
    }
  }

  TEST_CASE("FpElem rejects mixed moduli") {
    const FpElem x(2, 5), y(2, 7);
    CHECK_THROWS_AS(x + y, Error);
    CHECK((x * FpElem(3, 5)).value() == 1);
    CHECK((-x).value() == 3);
    CHECK(x.inverse().value() == 3);
    CHECK_THROWS_AS(FpElem(0, 5).inverse(), Error);
  }

  TEST_CASE("extension tables agree with polynomial multiplication mod f") {
    // Oracle: schoolbook product of coefficient vectors, then reduction by
    // the monic modulus t^d + c_{d-1} t^{d-1} + ... + c_0.
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 3}, {3, 2}, {5, 2}, {7, 3}}) {
      const PrimeField F(p);
      const auto f = find_irreducible(F, d);
      const auto T = ext_field_gf(p, d, f);
      CHECK(T.degree() == d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          std::vector<std::int64_t> prod(2 * d - 1, 0);
          prod[i + j] = 1;
          for (std::size_t e = prod.size(); e-- > d;) {
            const auto c = prod[e];
            prod[e] = 0;
            for (std::size_t l = 0; l < d; ++l)
              prod[e - d + l] -= c * f[l];
          }
          for (std::size_t k = 0; k < d; ++k)
            CHECK(T.lambda(i, j, k) == F.reduce(prod[k]));
        }
      if (std::pow(p, d) <= 1e4)
        CHECK(T.satisfies_field_axioms());
    }
  }

  TEST_CASE("reducible modulus is rejected") {
    // t^2 - 1 = (t-1)(t+1) over F_3
    const std::vector<Residue> f{2, 0};
    CHECK_FALSE(is_irreducible(PrimeField(3), f));
    CHECK_THROWS_AS(ext_field_gf(3, 2, f), Error);
    // t^2 + 1 is irreducible over F_3
    CHECK(is_irreducible(PrimeField(3), std::vector<Residue>{1, 0}));
  }

  TEST_CASE("degree one table is the prime field") {
    const auto T = ext_field_gf(5, 1, std::vector<Residue>{0});
    CHECK(T.lambda(0, 0, 0) == 1);
  }
}

TEST_SUITE("word") {
  TEST_CASE("deglex order") {
    CHECK(w("b") < w("aa"));
    CHECK(w("ab") < w("ba"));
    CHECK(Word{} < w("a"));
  }

  TEST_CASE("words of a multiweight") {
    const auto ws = words_of(Multiweight{3, 3});
    CHECK(ws.size() == 20);
    CHECK(std::is_sorted(ws.begin(), ws.end()));
    CHECK(words_of(Multiweight{4, 4}).size() == 70);
    CHECK(words_of(Multiweight{0, 0}).size() == 1);
  }

  TEST_CASE("multiweights of a degree") {
    CHECK(multiweights_of_degree(2, 3).size() == 4);
    CHECK(multiweights_of_degree(3, 2).size() == 6);
    CHECK(sub_multiweights(Multiweight{2, 1}).size() == 6);
  }

  TEST_CASE("format and parse words") {
    const Alphabet ab(2);
    CHECK(format_word(w("aabab"), ab) == "a^2*b*a*b");
    CHECK(parse_word("a^2*b*a*b", ab) == w("aabab"));
    CHECK(parse_word("1", ab) == Word{});
    CHECK(Alphabet(3).name(2) == "c1");
  }
}

TEST_SUITE("poly") {
  TEST_CASE("cancellation prunes terms") {
    const PrimeField F(3);
    Poly f = Poly::monomial(w("ab"), 2, F);
    f.add_term(w("ab"), 2);
    CHECK(f.is_zero());
    CHECK(format_poly(f, Alphabet(2)) == "0");
  }

  TEST_CASE("bracket expansion") {
    const PrimeField F(5);
    const Alphabet ab(2);
    CHECK(format_poly(expand_bracket({0, 1}, 2, F), ab) == "a*b + 4*b*a");
    // [a,b,b] = abb - 2bab + bba
    const Poly f = expand_bracket({0, 1, 1}, 2, F);
    CHECK(f.coefficient(w("abb")).value() == 1);
    CHECK(f.coefficient(w("bab")).value() == 3);
    CHECK(f.coefficient(w("bba")).value() == 1);
  }

  TEST_CASE("mirror and swap") {
    const PrimeField F(7);
    const Poly f = Poly::sum_of({w("aab"), w("ab")}, 2, F);
    CHECK(mirror(f) == Poly::sum_of({w("baa"), w("ba")}, 2, F));
    CHECK(swap_ab(f) == Poly::sum_of({w("bba"), w("ba")}, 2, F));
    CHECK_THROWS_AS(swap_generators(f, {0, 0}), Error);
  }

  TEST_CASE("substitution") {
    const PrimeField F(3);
    const Poly f = Poly::sum_of({w("abc")}, 3, F);
    const Poly g = substitute(f, {w("a"), w("b"), Word{}}, 2);
    CHECK(g == Poly::monomial(w("ab"), 2, F));
    CHECK_THROWS_AS(substitute(f, {w("a"), w("b"), std::nullopt}, 2), Error);
  }

  TEST_CASE("components") {
    const PrimeField F(5);
    const Poly f = Poly::sum_of({w("ab"), w("aab"), w("ba")}, 2, F);
    const auto cs = components(f);
    CHECK(cs.size() == 2);
    CHECK(cs.at(Multiweight{1, 1}).size() == 2);
    CHECK_FALSE(f.is_multihomogeneous());
  }

  TEST_CASE("mixed moduli throw") {
    CHECK_THROWS_AS(Poly::monomial(w("a"), 2, PrimeField(3)) + Poly::monomial(w("a"), 2, PrimeField(5)),
                    Error);
  }

  TEST_CASE("property: ring laws, involutions, text round trip") {
    std::mt19937_64 rng(7);
    const Alphabet ab(2);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      const PrimeField F(p);
      for (int t = 0; t < 50; ++t) {
        const Poly f = testing::random_poly(rng, F, 4, 4);
        const Poly g = testing::random_poly(rng, F, 4, 4);
        const Poly h = testing::random_poly(rng, F, 3, 3);
        CHECK((f * (g + h)) == (f * g + f * h));
        CHECK(((f * g) * h) == (f * (g * h)));
        CHECK(mirror(f * g) == mirror(g) * mirror(f));
        CHECK(swap_ab(swap_ab(f)) == f);
        CHECK(swap_ab(f * g) == swap_ab(f) * swap_ab(g));
        CHECK((f - f).is_zero());
        CHECK(parse_poly(format_poly(f, ab), ab, F) == f);
      }
    }
  }
}

TEST_SUITE("text") {
  TEST_CASE("grammar") {
    const PrimeField F(7);
    const Alphabet ab(2);
    const Poly f = parse_poly("-a^2*b + 3*b*a - 2", ab, F);
    CHECK(f.coefficient(w("aab")).value() == 6);
    CHECK(f.coefficient(w("ba")).value() == 3);
    CHECK(f.coefficient(Word{}).value() == 5);
    CHECK(parse_poly("0", ab, F).is_zero());
  }

  TEST_CASE("errors carry positions") {
    const PrimeField F(3);
    const Alphabet ab(2);
    try {
      parse_poly("a*b + x", ab, F, 4, 10);
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.line() == 4);
      CHECK(e.column() > 10);
    }
    CHECK_THROWS_AS(parse_poly("a^", ab, F), ParseError);
    CHECK_THROWS_AS(parse_poly("a +", ab, F), ParseError);
  }
}
