#include <doctest.h>

#include <random>

#include "stronglie/asym.hpp"
#include "stronglie/conjecture.hpp"
#include "stronglie/error.hpp"
#include "support.hpp"

using namespace stronglie;

TEST_SUITE("sigma") {
  TEST_CASE("ring arithmetic") {
    const PrimeField F(5);
    const SigmaElem s{0, 1}, one{1, 0};
    CHECK(sigma_mul(F, s, s) == one);
    const SigmaElem a{1, 4}, b{1, 1}; // 1 - sigma, 1 + sigma
    CHECK(sigma_mul(F, a, b) == SigmaElem{0, 0});
    CHECK(format_sigma(a, 5) == "1-s");
    CHECK(format_sigma({0, 1}, 5) == "s");
    CHECK(format_sigma({2, 0}, 5) == "2");
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<Residue> c(0, 4);
    for (int t = 0; t < 100; ++t) {
      const SigmaElem x{c(rng), c(rng)}, y{c(rng), c(rng)}, z{c(rng), c(rng)};
      CHECK(sigma_mul(F, x, y) == sigma_mul(F, y, x));
      CHECK(sigma_mul(F, sigma_mul(F, x, y), z) == sigma_mul(F, x, sigma_mul(F, y, z)));
      CHECK(sigma_mul(F, x, sigma_add(F, y, z)) ==
            sigma_add(F, sigma_mul(F, x, y), sigma_mul(F, x, z)));
    }
  }

  TEST_CASE("small matrices") {
    const PrimeField F(3);
    const SigmaElem one_minus{1, 2};
    CHECK(sigma_reduce(SigmaMatrix::from_rows(F, 1, {{one_minus}})).triangularized);
    CHECK_FALSE(sigma_reduce(SigmaMatrix::identity(F, 3)).triangularized);
    CHECK_FALSE(sigma_reduce_module(SigmaMatrix::identity(F, 3)).triangularized);
    const auto empty = sigma_reduce(SigmaMatrix::from_rows(F, 2, {}));
    CHECK_FALSE(empty.triangularized);
    CHECK(empty.triangular.empty());
  }

  TEST_CASE("split and module criteria agree for odd p") {
    std::mt19937_64 rng(8);
    for (std::uint32_t p : {3u, 5u}) {
      const PrimeField F(p);
      std::uniform_int_distribution<Residue> c(0, p - 1);
      std::size_t agreed = 0, yes = 0;
      for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 3, m = rng() % 5;
        std::vector<std::vector<SigmaElem>> rows(m, std::vector<SigmaElem>(n));
        for (auto &r : rows)
          for (auto &e : r) {
            // mostly 0, 1, sigma, 1 - sigma entries
            switch (rng() % 5) {
            case 0: e = {1, 0}; break;
            case 1: e = {0, 1}; break;
            case 2: e = {1, p - 1}; break;
            case 3: e = {c(rng), c(rng)}; break;
            default: break;
            }
          }
        const auto M = SigmaMatrix::from_rows(F, n, rows);
        const bool a = sigma_reduce(M).triangularized, b = sigma_reduce_module(M).triangularized;
        agreed += a == b;
        yes += a;
        CHECK(a == b);
      }
      CHECK(agreed == 300);
      CHECK(yes > 0);
    }
  }

  TEST_CASE("k=4 swap matrix agrees with variant II") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      for (Which which : {Which::short_eqs, Which::all}) {
        const auto rs = paper_relation_set(4, p, which);
        const auto M = build_sigma_matrix(rs, Multiweight{3, 3}, SymmetryOperator::swap_negate);
        CHECK(M.column_count() == 10);
        const bool tri = sigma_reduce(M).triangularized;
        CHECK(tri == sigma_reduce_module(M).triangularized);
        CHECK(tri == check_variant_II(rs).passed());
      }
    }
  }

  TEST_CASE("k=5 mirror matrix") {
    const auto rs = close_under(paper_relation_set(5, 3, Which::all), SymmetryOperator::mirror);
    const auto M = build_sigma_matrix(rs, Multiweight{4, 4}, SymmetryOperator::mirror);
    std::size_t fixed = 0;
    const auto words = words_of(Multiweight{4, 4});
    for (const auto &x : words)
      fixed += x.reversed() == x;
    CHECK(M.column_count() == (words.size() + fixed) / 2);
    CHECK(M.column_count() - M.free_column_count() == fixed);
    CHECK(sigma_reduce(M).triangularized);
  }

  TEST_CASE("closure failure names the row") {
    const auto rs = paper_base_relations(4, 3, Which::short_eqs).subset({"S1"});
    CHECK_THROWS_WITH_AS(build_sigma_matrix(rs, Multiweight{3, 3}, SymmetryOperator::swap_negate),
                         doctest::Contains("no image"), Error);
    CHECK_THROWS_AS(build_sigma_matrix(paper_relation_set(4, 3, Which::all), Multiweight{3, 2},
                                       SymmetryOperator::swap_negate),
                    Error);
  }

  TEST_CASE("json") {
    const auto rs = paper_relation_set(4, 3, Which::all);
    const auto M = build_sigma_matrix(rs, Multiweight{3, 3}, SymmetryOperator::swap_negate);
    const auto j = to_json(M, sigma_reduce(M), rs.alphabet());
    CHECK(j["triangularized"] == true);
    CHECK(j["columns"].size() == 10);
  }
}
