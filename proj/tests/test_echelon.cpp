#include <doctest.h>

#include <random>

#include "stronglie/kernels/echelon.hpp"

using namespace stronglie;
using kernels::Echelon;

namespace {

// Plain Gaussian elimination, kept deliberately naive.
std::size_t naive_rank(const PrimeField &F, std::vector<std::vector<Residue>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0)
      ++piv;
    if (piv == m.size())
      continue;
    std::swap(m[piv], m[r]);
    const Residue inv = F.inv(m[r][c]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const Residue f = F.mul(m[i][c], inv);
      for (std::size_t j = 0; j < cols; ++j)
        m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

std::vector<Residue> random_matrix(std::mt19937_64 &rng, const PrimeField &F, std::size_t rows,
                                   std::size_t cols, double density) {
  std::bernoulli_distribution nz(density);
  std::uniform_int_distribution<Residue> c(1, F.modulus() - 1);
  std::vector<Residue> m(rows * cols, 0);
  for (auto &x : m)
    if (nz(rng))
      x = c(rng);
  return m;
}

} // namespace

TEST_SUITE("echelon") {
  TEST_CASE("rank matches naive elimination") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 7u}) {
      const PrimeField F(p);
      for (int t = 0; t < 30; ++t) {
        const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 30;
        const auto m = random_matrix(rng, F, rows, cols, 0.2);
        std::vector<std::vector<Residue>> nested;
        for (std::size_t i = 0; i < rows; ++i)
          nested.emplace_back(m.begin() + i * cols, m.begin() + (i + 1) * cols);
        CHECK(kernels::rank_of(F, m, rows, cols) == naive_rank(F, nested));
        CHECK(kernels::rank_of(F, m, rows, cols, Exec::parallel) == naive_rank(F, nested));
      }
    }
  }

  TEST_CASE("serial and parallel builds are identical") {
    std::mt19937_64 rng(3);
    const PrimeField F(5);
    const std::size_t rows = 300, cols = 70;
    const auto m = random_matrix(rng, F, rows, cols, 0.05);
    Echelon a(F, cols, true), b(F, cols, true);
    a.insert_rows(m, rows, Exec::serial);
    b.insert_rows(m, rows, Exec::parallel, 16);
    REQUIRE(a.rank() == b.rank());
    CHECK(a.pivot_columns() == b.pivot_columns());
    for (std::size_t i = 0; i < a.rank(); ++i) {
      CHECK(std::equal(a.row(i).begin(), a.row(i).end(), b.row(i).begin()));
      CHECK(a.combination(i) == b.combination(i));
    }
  }

  TEST_CASE("tracked combinations reproduce the rows") {
    std::mt19937_64 rng(5);
    const PrimeField F(7);
    const std::size_t rows = 60, cols = 25;
    const auto m = random_matrix(rng, F, rows, cols, 0.15);
    Echelon e(F, cols, true);
    e.insert_rows(m, rows / 2);
    e.insert_rows(std::span(m).subspan(rows / 2 * cols), rows - rows / 2, Exec::parallel, 8);
    CHECK(e.inserted_count() == rows);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      std::vector<Residue> sum(cols, 0);
      for (auto [idx, c] : e.combination(i))
        for (std::size_t j = 0; j < cols; ++j)
          sum[j] = F.add(sum[j], F.mul(c, m[idx * cols + j]));
      CHECK(std::equal(sum.begin(), sum.end(), e.row(i).begin()));
    }
  }

  TEST_CASE("reduce returns consistent multipliers") {
    std::mt19937_64 rng(9);
    const PrimeField F(3);
    const std::size_t cols = 20;
    const auto m = random_matrix(rng, F, 12, cols, 0.3);
    Echelon e(F, cols);
    e.insert_rows(m, 12);
    for (int t = 0; t < 20; ++t) {
      auto v = random_matrix(rng, F, 1, cols, 0.5);
      const auto orig = v;
      const auto mults = e.reduce(v);
      for (std::size_t c : e.pivot_columns())
        CHECK(v[c] == 0);
      auto back = v;
      for (auto [i, f] : mults)
        for (std::size_t j = 0; j < cols; ++j)
          back[j] = F.add(back[j], F.mul(f, e.row(i)[j]));
      CHECK(back == orig);
    }
    for (std::size_t i = 0; i < 12; ++i)
      CHECK(e.contains(std::span(m).subspan(i * cols, cols)));
  }

  TEST_CASE("rows are in reduced echelon form") {
    std::mt19937_64 rng(13);
    const PrimeField F(2);
    const auto m = random_matrix(rng, F, 50, 30, 0.2);
    Echelon e(F, 30);
    e.insert_rows(m, 50, Exec::parallel, 7);
    const auto piv = e.pivot_columns();
    CHECK(std::is_sorted(piv.begin(), piv.end()));
    for (std::size_t i = 0; i < e.rank(); ++i)
      for (std::size_t j = 0; j < e.rank(); ++j)
        CHECK(e.row(i)[piv[j]] == (i == j ? 1u : 0u));
  }

  TEST_CASE("empty and zero input") {
    const PrimeField F(3);
    Echelon e(F, 4);
    const std::vector<Residue> zero(8, 0);
    e.insert_rows(zero, 2);
    CHECK(e.rank() == 0);
    CHECK(e.contains(std::span(zero).subspan(0, 4)));
    CHECK(kernels::rank_of(F, {}, 0, 5) == 0);
  }
}
