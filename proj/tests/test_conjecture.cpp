#include <doctest.h>

#include "stronglie/conjecture.hpp"
#include "stronglie/error.hpp"
#include "stronglie/liering.hpp"
#include "support.hpp"

using namespace stronglie;
using testing::w;

TEST_SUITE("conjecture") {
  TEST_CASE("variant I identity") {
    const Alphabet ab(2);
    CHECK(format_poly(variant_I_identity(4, PrimeField(3)), ab) == "a^3*b^3 + b^3*a^3");
    CHECK(format_poly(variant_I_identity(3, PrimeField(3)), ab) == "a^2*b^2 + 2*b^2*a^2");
    // at p=2 the sign disappears
    CHECK(format_poly(variant_I_identity(3, PrimeField(2)), ab) == "a^2*b^2 + b^2*a^2");
    CHECK_THROWS_AS(variant_I_identity(1, PrimeField(3)), Error);
  }

  TEST_CASE("swap orbit representatives") {
    for (unsigned n : {1u, 2u, 3u, 4u}) {
      const Multiweight mw{n, n};
      const auto reps = swap_orbit_representatives(mw);
      // oracle: count orbits of the involution directly
      std::size_t fixed = 0;
      const auto all = words_of(mw);
      for (const auto &x : all)
        fixed += swap_ab(x) == x;
      CHECK(reps.size() == (all.size() + fixed) / 2);
      for (const auto &r : reps)
        CHECK_FALSE(swap_ab(r) < r);
    }
    CHECK(swap_orbit_representatives(Multiweight{3, 3}).size() == 10);
    CHECK(swap_orbit_representatives(Multiweight{4, 4}).size() == 35);
  }

  TEST_CASE("k=2 and k=3") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
      CHECK(check_variant_I(2, p, Which::all).passed());
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const auto r = check_variant_II(3, p);
      CHECK(r.passed());
      CHECK(r.results.size() == 3);
    }
  }

  TEST_CASE("k=4 characteristic split") {
    for (std::uint32_t p : {3u, 5u, 7u})
      CHECK(check_variant_I(4, p, Which::short_eqs).passed());
    CHECK_FALSE(check_variant_I(4, 2, Which::short_eqs).passed());
    CHECK(check_variant_I(4, 2, Which::all).passed());
    CHECK(check_variant_II(4, 2).passed());
  }

  TEST_CASE("certificates verify and report is deterministic") {
    const CheckOptions serial{true, Exec::serial}, parallel{true, Exec::parallel};
    const auto a = check_variant_II(4, 3, serial);
    const auto b = check_variant_II(4, 3, parallel);
    CHECK(a.to_json(false).dump() == b.to_json(false).dump());
    CHECK(a.to_json(false).dump() == check_variant_II(4, 3, serial).to_json(false).dump());
    const auto rs = paper_relation_set(4, 3, Which::all);
    for (const auto &r : a.results) {
      REQUIRE(r.certificate.has_value());
      CHECK(verify_certificate(*r.certificate, r.poly, rs));
    }
    const auto j = a.to_json(true);
    CHECK(j["variant"] == "II");
    CHECK(j["relations"] == "k4_all");
    CHECK(j["proviso"] == true);
    CHECK(j.contains("seconds"));
    CHECK_FALSE(a.to_json(false).contains("seconds"));
    CHECK(j["version"] == 1);
  }

  TEST_CASE("k=5 monomials reduce to zero") {
    const auto r = check_variant_II(5, 3);
    CHECK(r.passed());
    CHECK(r.results.size() == 35);
    for (const auto &x : r.results)
      CHECK(x.reduces_to_zero.value_or(false));
    CHECK(r.proviso);
  }

  TEST_CASE("non-member with an empty relation set") {
    const PrimeField F(3);
    RelationSet rs(4, Alphabet(2), F, Provenance::file, "empty");
    const auto r = check_variant_I(rs);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.results[0].member);
  }

  TEST_CASE("variant III") {
    const PrimeField F(3);
    const Alphabet ab(2);
    const Poly pat = parse_poly("a^3*b^3", ab, F);
    const auto r = search_variant_III(pat, {1, 0}, 4, 3);
    CHECK(r.outcome == VariantIIIResult::Outcome::scalar);
    CHECK(r.alpha == Residue{2});
    CHECK(search_variant_III(parse_poly("a^4*b^4", ab, F), {1, 0}, 5, 3).outcome ==
          VariantIIIResult::Outcome::degenerate);
    RelationSet empty(4, ab, F, Provenance::file);
    CHECK(search_variant_III(pat, {1, 0}, empty).outcome == VariantIIIResult::Outcome::none);
    CHECK_THROWS_AS(search_variant_III(parse_poly("a^2*b^3", ab, F), {1, 0}, 4, 3), Error);
  }

  TEST_CASE("Lie ring oracles corroborate the symbolic checks") {
    for (std::uint32_t p : {3u, 5u}) {
      const auto H = heisenberg(p);
      CHECK(is_k_strong(H, 2).holds);
      CHECK(check_identity_I_on_ring(H, 2).holds);
      CHECK(check_variant_I(2, p, Which::all).passed());
      const auto C = free_nilpotent_rank2(p, 3);
      CHECK(is_k_strong(C, 3).holds);
      CHECK(check_identity_I_on_ring(C, 3).holds);
      CHECK(check_variant_I(3, p, Which::all).passed());
    }
  }
}
