#include "stronglie/kernels/echelon.hpp"

#include <algorithm>
#include <numeric>

#include "stronglie/error.hpp"

namespace stronglie::kernels {

namespace {

// dst += a * src on sorted sparse combinations.
void axpy(const PrimeField &F, Combination &dst, Residue a, const Combination &src) {
  if (a == 0 || src.empty())
    return;
  Combination out;
  out.reserve(dst.size() + src.size());
  auto i = dst.begin();
  auto j = src.begin();
  while (i != dst.end() || j != src.end()) {
    if (j == src.end() || (i != dst.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == dst.end() || j->first < i->first) {
      out.emplace_back(j->first, F.mul(a, j->second));
      ++j;
    } else {
      Residue c = F.add(i->second, F.mul(a, j->second));
      if (c)
        out.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

} // namespace

Echelon::Echelon(PrimeField field, std::size_t cols, bool track_combinations)
    : field_(field), cols_(cols), track_(track_combinations) {}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(order_.size());
  for (std::size_t s : order_)
    out.push_back(pivot_col_[s]);
  return out;
}

const Combination &Echelon::combination(std::size_t i) const {
  if (!track_)
    throw Error("echelon form was built without combination tracking");
  return combos_[order_[i]];
}

void Echelon::reduce_against(std::span<Residue> v, std::span<const std::size_t> sequence,
                             Multipliers *mults) const {
  const PrimeField &F = field_;
  for (std::size_t s : sequence) {
    const std::size_t pc = pivot_col_[s];
    const Residue f = v[pc];
    if (f == 0)
      continue;
    const Residue nf = F.neg(f);
    const auto &r = rows_[s];
    for (std::size_t c = pc; c < cols_; ++c)
      if (r[c])
        v[c] = F.add(v[c], F.mul(nf, r[c]));
    if (mults)
      mults->emplace_back(s, f);
  }
}

void Echelon::push_pivot(std::vector<Residue> v, std::uint32_t input_index,
                         const Multipliers &mults) {
  const PrimeField &F = field_;
  std::size_t pc = 0;
  while (v[pc] == 0)
    ++pc;
  const Residue inv = F.inv(v[pc]);
  for (std::size_t c = pc; c < cols_; ++c)
    v[c] = F.mul(v[c], inv);
  if (track_) {
    // v = input - sum f * rows_[s]  =>  combo(v) = inv * (e_input - sum f * combo(s))
    Combination combo{{input_index, 1}};
    for (auto [s, f] : mults)
      axpy(F, combo, F.neg(f), combos_[s]);
    for (auto &entry : combo)
      entry.second = F.mul(entry.second, inv);
    combos_.push_back(std::move(combo));
  }
  rows_.push_back(std::move(v));
  pivot_col_.push_back(pc);
}

void Echelon::back_eliminate(std::size_t first_new) {
  const PrimeField &F = field_;
  const std::size_t n = rows_.size();
  for (std::size_t s = n; s-- > first_new;) {
    const std::size_t pc = pivot_col_[s];
    const auto &pivot = rows_[s];
    for (std::size_t t = 0; t < n; ++t) {
      if (t == s)
        continue;
      const Residue f = rows_[t][pc];
      if (f == 0)
        continue;
      const Residue nf = F.neg(f);
      auto &r = rows_[t];
      for (std::size_t c = pc; c < cols_; ++c)
        if (pivot[c])
          r[c] = F.add(r[c], F.mul(nf, pivot[c]));
      if (track_)
        axpy(F, combos_[t], nf, combos_[s]);
    }
  }
}

void Echelon::rebuild_order() {
  order_.resize(rows_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(),
            [&](std::size_t x, std::size_t y) { return pivot_col_[x] < pivot_col_[y]; });
}

void Echelon::insert_rows(std::span<const Residue> rows, std::size_t count, Exec exec,
                          std::size_t batch) {
  if (rows.size() < count * cols_)
    throw Error("row buffer shorter than count * cols");
  if (batch == 0)
    batch = 1;
  const std::size_t base = inserted_;
  inserted_ += count;

  auto input = [&](std::size_t i) {
    return std::vector<Residue>(rows.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                rows.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  };

  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count && rows_.size() < cols_; ++i) {
      auto v = input(i);
      Multipliers mults;
      std::vector<std::size_t> all(rows_.size());
      std::iota(all.begin(), all.end(), std::size_t{0});
      reduce_against(v, all, track_ ? &mults : nullptr);
      if (std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; }))
        continue;
      push_pivot(std::move(v), static_cast<std::uint32_t>(base + i), mults);
      back_eliminate(rows_.size() - 1);
    }
    rebuild_order();
    return;
  }

  for (std::size_t start = 0; start < count && rows_.size() < cols_; start += batch) {
    const std::size_t len = std::min(batch, count - start);
    const std::size_t frozen = rows_.size();
    std::vector<std::size_t> frozen_seq(frozen);
    std::iota(frozen_seq.begin(), frozen_seq.end(), std::size_t{0});

    std::vector<std::vector<Residue>> work(len);
    std::vector<Multipliers> mults(len);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(len); ++k) {
      const auto kk = static_cast<std::size_t>(k);
      work[kk] = input(start + kk);
      reduce_against(work[kk], frozen_seq, track_ ? &mults[kk] : nullptr);
    }

    for (std::size_t k = 0; k < len && rows_.size() < cols_; ++k) {
      std::vector<std::size_t> fresh(rows_.size() - frozen);
      std::iota(fresh.begin(), fresh.end(), frozen);
      reduce_against(work[k], fresh, track_ ? &mults[k] : nullptr);
      if (std::all_of(work[k].begin(), work[k].end(), [](Residue x) { return x == 0; }))
        continue;
      push_pivot(std::move(work[k]), static_cast<std::uint32_t>(base + start + k), mults[k]);
    }

    // Back-elimination touches disjoint rows per target, so it parallelizes over targets.
    const std::size_t n = rows_.size();
    for (std::size_t s = n; s-- > frozen;) {
      const std::size_t pc = pivot_col_[s];
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(n); ++t) {
        const auto tt = static_cast<std::size_t>(t);
        if (tt == s || rows_[tt][pc] == 0)
          continue;
        const Residue nf = field_.neg(rows_[tt][pc]);
        for (std::size_t c = pc; c < cols_; ++c)
          if (rows_[s][c])
            rows_[tt][c] = field_.add(rows_[tt][c], field_.mul(nf, rows_[s][c]));
        if (track_)
          axpy(field_, combos_[tt], nf, combos_[s]);
      }
    }
  }
  rebuild_order();
}

std::vector<std::pair<std::size_t, Residue>> Echelon::reduce(std::span<Residue> v) const {
  if (v.size() != cols_)
    throw Error("vector length does not match the column count");
  Multipliers storage_mults;
  reduce_against(v, order_, &storage_mults);
  std::vector<std::size_t> position(rows_.size());
  for (std::size_t i = 0; i < order_.size(); ++i)
    position[order_[i]] = i;
  for (auto &[s, f] : storage_mults)
    s = position[s];
  return storage_mults;
}

bool Echelon::contains(std::span<const Residue> v) const {
  std::vector<Residue> w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

std::size_t rank_of(PrimeField field, std::span<const Residue> rows, std::size_t count,
                    std::size_t cols, Exec exec) {
  Echelon e(field, cols);
  e.insert_rows(rows, count, exec);
  return e.rank();
}

} // namespace stronglie::kernels
