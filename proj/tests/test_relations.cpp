#include <doctest.h>

#include <set>

#include "stronglie/error.hpp"
#include "stronglie/relations.hpp"
#include "support.hpp"

using namespace stronglie;
using testing::w;

namespace {

// Slot sums by brute force: every 0/1 pattern with j ones.
Poly brute_slot_sum(std::size_t n, std::size_t j, const std::vector<Word> &seps, PrimeField F) {
  Poly out(2, F);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != j)
      continue;
    Word word;
    for (std::size_t s = 0; s < n; ++s) {
      word *= Word{static_cast<Letter>((mask >> s) & 1)};
      if (s + 1 < n)
        word *= seps[s];
    }
    out.add_term(word, 1);
  }
  return out;
}

// (a + lambda b) sep_1 (a + lambda b) ... evaluated at a concrete lambda.
Poly evaluate_linearized(std::size_t n, const std::vector<Word> &seps, Residue lambda,
                         PrimeField F) {
  Poly x = Poly::monomial(w("a"), 2, F) + Poly::monomial(w("b"), 2, F, lambda);
  Poly out = x;
  for (std::size_t s = 1; s < n; ++s)
    out = out * Poly::monomial(seps[s - 1], 2, F) * x;
  return out;
}

} // namespace

TEST_SUITE("relations") {
  TEST_CASE("slot sums match brute-force enumeration") {
    const PrimeField F(5);
    const std::vector<Word> seps{w("b"), Word{}, w("ab")};
    for (std::size_t j = 0; j <= 4; ++j)
      CHECK(slot_sum(4, j, seps, F) == brute_slot_sum(4, j, seps, F));
    CHECK_THROWS_AS(slot_sum(4, 1, {Word{}}, F), Error);
  }

  TEST_CASE("lambda expansion evaluates correctly") {
    const PrimeField F(7);
    const std::vector<Word> seps{w("b"), Word{}, w("a")};
    const auto E = lambda_expansion(4, seps, F);
    REQUIRE(E.size() == 5);
    for (Residue lam = 0; lam < 7; ++lam) {
      Poly sum(2, F);
      for (std::size_t j = 0; j < E.size(); ++j)
        sum += E[j].scaled(F.pow(lam, j));
      CHECK(sum == evaluate_linearized(4, seps, lam, F));
    }
  }

  TEST_CASE("vandermonde extraction and recovery") {
    const PrimeField F(7);
    const std::vector<Word> seps(4, Word{});
    const auto E = lambda_expansion(5, seps, F);
    const auto V = vandermonde_extract(E, F);
    REQUIRE(V.components.size() == 4);
    CHECK(V.required_field_size == 5);
    CHECK(V.field_large_enough);
    CHECK(V.components[0].size() == 5);
    CHECK(V.components[1].size() == 10);
    CHECK(V.components[2].size() == 10);
    CHECK(V.components[3].size() == 5);
    CHECK_FALSE(vandermonde_extract(E, PrimeField(3)).field_large_enough);

    const std::vector<Residue> lambdas{1, 2, 3, 4};
    std::vector<Poly> evals;
    for (Residue lam : lambdas) {
      Poly mixed(2, F);
      for (std::size_t j = 1; j < 5; ++j)
        mixed += E[j].scaled(F.pow(lam, j));
      evals.push_back(mixed);
    }
    const auto rec = vandermonde_recover(lambdas, evals);
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(rec[j] == V.components[j]);
    CHECK_THROWS_AS(vandermonde_recover({1, 1, 2, 3}, evals), Error);
    CHECK_THROWS_AS(vandermonde_recover({0, 1, 2, 3}, evals), Error);
  }

  TEST_CASE("canned sets") {
    const auto k4 = paper_relation_set(4, 3, Which::all);
    CHECK(k4.name() == "k4_all");
    CHECK(paper_base_relations(4, 3, Which::all).size() == 14);
    CHECK(k4.size() == 27);
    CHECK(paper_base_relations(5, 3, Which::short_eqs).size() == 14);
    CHECK(paper_base_relations(5, 3, Which::long_eqs).size() == 13);
    CHECK(paper_relation_set(2, 5, Which::all).size() == 1);
    for (const auto &r : k4.relations()) {
      CHECK(r.poly.is_multihomogeneous());
      const Poly s = swap_ab(r.poly);
      bool found = false;
      for (const auto &q : k4.relations())
        for (Residue c = 1; c < 3; ++c)
          found = found || q.poly == s.scaled(c);
      CHECK(found);
    }
    CHECK_THROWS_AS(paper_relation_set(6, 3, Which::all), Error);
  }

  TEST_CASE("short equations are slot sums with one b") {
    const PrimeField F(5);
    const auto S = paper_base_relations(4, 5, Which::short_eqs);
    CHECK(S.find("S1")->poly == brute_slot_sum(4, 1, {Word{}, Word{}, Word{}}, F));
    CHECK(S.find("S2")->poly == brute_slot_sum(4, 1, {Word{}, Word{}, w("b")}, F));
  }

  TEST_CASE("generated relations contain the empty-separator sums") {
    const PrimeField F(3);
    const auto G = generate_strong_relations(4, {Word{}}, 4, F);
    const auto base = paper_base_relations(4, 3, Which::all);
    for (const char *label : {"S1", "L1"}) {
      bool found = false;
      for (const auto &r : G.relations())
        for (Residue c = 1; c < 3; ++c)
          found = found || r.poly == base.find(label)->poly.scaled(c);
      CHECK_MESSAGE(found, label);
    }
    CHECK(G.provenance() == Provenance::generated);
  }

  TEST_CASE("add validates relations") {
    const PrimeField F(3);
    RelationSet rs(2, Alphabet(2), F, Provenance::file);
    rs.add("X", Poly::monomial(w("ab"), 2, F));
    CHECK_THROWS_AS(rs.add("X", Poly::monomial(w("ba"), 2, F)), Error);
    CHECK_THROWS_AS(rs.add("Y", Poly(2, F)), Error);
    CHECK_THROWS_AS(rs.add("Z", Poly::sum_of({w("ab"), w("a")}, 2, F)), Error);
    CHECK_THROWS_AS(rs.add("W", Poly::monomial(w("ab"), 2, PrimeField(5))), Error);
  }

  TEST_CASE("serialize and parse round trip") {
    for (unsigned k : {2u, 3u, 4u, 5u}) {
      const auto rs = paper_relation_set(k, 7, Which::all);
      const auto back = parse_relation_set(serialize(rs));
      CHECK(back == rs);
      CHECK(back.provenance() == Provenance::file);
    }
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_relation_set("#k=2\nE1: a*b + b*a\n"), ParseError);
    CHECK_NOTHROW(parse_relation_set("#k=2\nE1: a*b + b*a\n", 3));
    CHECK_THROWS_AS(parse_relation_set("#k=2\n#p=4\nE1: a*b\n"), ParseError);
    CHECK_THROWS_AS(parse_relation_set("#k=2\n#p=3\nE1: a*b\n#p=5\n"), ParseError);
    CHECK_THROWS_AS(parse_relation_set("#k=2\n#p=3\nE 1: a*b\n"), ParseError);
    CHECK_THROWS_AS(parse_relation_set("#k=2\n#p=3\nE1 a*b\n"), ParseError);
    try {
      parse_relation_set("#k=2\n#p=3\n# note\nE1: a*b + a\n");
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
  }

  TEST_CASE("three generators via header") {
    const auto rs = parse_relation_set("#k=3\n#p=5\n#gens=x,y,z\nR1: x*y*z + z*y*x\n");
    CHECK(rs.generator_count() == 3);
    CHECK(parse_relation_set(serialize(rs)) == rs);
  }
}
