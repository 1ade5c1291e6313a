#pragma once

// Reduced row echelon form over F_p, built incrementally, with optional
// bookkeeping of how every pivot row combines the inserted rows.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stronglie/gf.hpp"
#include "stronglie/kernels/exec.hpp"

namespace stronglie::kernels {

/// Sparse combination of inserted rows: (input row index, coefficient), sorted by index.
using Combination = std::vector<std::pair<std::uint32_t, Residue>>;

class Echelon {
public:
  Echelon(PrimeField field, std::size_t cols, bool track_combinations = false);

  /// Inserts `count` dense rows stored row-major in `rows`. Input row indices
  /// continue from inserted_count(). With Exec::parallel, rows are reduced in
  /// batches against a frozen pivot set with OpenMP and merged serially, so the
  /// result does not depend on the thread count.
  void insert_rows(std::span<const Residue> rows, std::size_t count, Exec exec = Exec::serial,
                   std::size_t batch = 128);

  PrimeField field() const noexcept { return field_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return order_.size(); }
  std::size_t inserted_count() const noexcept { return inserted_; }
  bool tracks_combinations() const noexcept { return track_; }

  /// Pivot columns, strictly increasing.
  std::vector<std::size_t> pivot_columns() const;
  /// i-th row of the RREF (rows ordered by pivot column).
  std::span<const Residue> row(std::size_t i) const { return rows_[order_[i]]; }
  std::size_t pivot_column(std::size_t i) const { return pivot_col_[order_[i]]; }
  /// Inserted rows whose combination equals row(i). Requires tracking.
  const Combination &combination(std::size_t i) const;

  /// Reduces v modulo the row space in place. Returns the multipliers
  /// (RREF row index, factor) with v_in = v_out + sum factor * row(index).
  std::vector<std::pair<std::size_t, Residue>> reduce(std::span<Residue> v) const;

  /// Row-space membership.
  bool contains(std::span<const Residue> v) const;

private:
  using Multipliers = std::vector<std::pair<std::size_t, Residue>>;

  // Reduces v against storage rows in `sequence` order.
  void reduce_against(std::span<Residue> v, std::span<const std::size_t> sequence,
                      Multipliers *mults) const;
  // Adds a reduced nonzero vector as a new pivot without back-elimination.
  void push_pivot(std::vector<Residue> v, std::uint32_t input_index, const Multipliers &mults);
  // Clears the pivot columns of rows [first_new, size) from every other row.
  void back_eliminate(std::size_t first_new);
  void rebuild_order();

  PrimeField field_;
  std::size_t cols_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::vector<Residue>> rows_; // insertion order
  std::vector<std::size_t> pivot_col_;
  std::vector<Combination> combos_;
  std::vector<std::size_t> order_; // storage indices sorted by pivot column
};

/// Rank of a dense row-major matrix.
std::size_t rank_of(PrimeField field, std::span<const Residue> rows, std::size_t count,
                    std::size_t cols, Exec exec = Exec::serial);

} // namespace stronglie::kernels
