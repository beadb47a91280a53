#pragma once

// Live pivot encoding of psi[i,j] = LCS(B[i..n], A[0..j]) under prepends to A
// and appends to B. Each 1-sided stream costs O(L) per update, L = LCS(A, B);
// switching between the two costs one O(L log L) re-sort.

#include <optional>
#include <span>
#include <string_view>

#include "iasm/counters.hpp"
#include "iasm/errors.hpp"
#include "iasm/pivots.hpp"
#include "iasm/sequences.hpp"

namespace iasm {

struct PsamUpdate {
  /// New pivot list, sorted by row, columns already shifted by +1.
  std::vector<Pivot> points;
  /// Density change in the pre-shift column space [0:m].
  DeltaPivots delta;
  /// Column of the step index in row 0 of the 0/1 difference matrix, if any.
  std::optional<std::int32_t> row0_step_col;
  OpCounters counters;
};

/// Prepends `c` to the column string of a PSAM-shaped pivot set.
///
/// `row_sorted` is the pivot list by increasing row; `rows` answers NextMatch /
/// PrevMatch over the row string. Pivots are taken in blocks (k-, k+] delimited
/// by consecutive occurrences of `c` in the row string; each block is scanned
/// backwards keeping the minimum column jmin of the rows below. A non-match row
/// whose pivot lies left of jmin loses it and, when jmin is finite, gains
/// (row, jmin). The match row k+ always loses its pivot; its replacement
/// (k+, jmin of the next block) is emitted while closing that next block. The
/// last occurrence of `c` gets the only column-0 pivot.
template <MatchSource Rows>
PsamUpdate psam_prepend_update(std::span<const Pivot> row_sorted, const Rows& rows, Symbol c, ScratchArray& z) {
  PsamUpdate out;
  std::vector<Pivot> block_additions;
  std::size_t idx = 0;
  while (idx < row_sorted.size()) {
    ++out.counters.touched_pivots;
    const std::int32_t i1 = row_sorted[idx].row - 1;
    const MatchPos k_minus = rows.prev_match(i1, c);
    const MatchPos k_plus = rows.next_match(i1, c);
    out.counters.table_queries += 2;
    if (!k_plus.finite()) break;  // no later occurrence: the remaining rows keep their pivots
    const std::int32_t block_end_row = k_plus.value();
    std::size_t end = idx + 1;
    while (end < row_sorted.size() && row_sorted[end].row <= block_end_row) {
      ++out.counters.touched_pivots;
      ++end;
    }

    // Backward scan; additions collected by decreasing row.
    block_additions.clear();
    std::int32_t jmin = -1;  // -1 stands for +INF
    for (std::size_t t = end; t-- > idx;) {
      ++out.counters.touched_pivots;
      const Pivot p = row_sorted[t];
      if (p.row == block_end_row) {
        out.delta.removals.push_back(p);
      } else if (jmin < 0 || p.col < jmin) {
        out.delta.removals.push_back(p);
        if (jmin >= 0) block_additions.push_back({p.row, jmin});
      }
      if (jmin < 0 || p.col < jmin) jmin = p.col;
    }
    if (k_minus.finite()) {
      block_additions.push_back({k_minus.value(), jmin});
    } else {
      out.row0_step_col = jmin;
    }
    out.delta.additions.insert(out.delta.additions.end(), block_additions.rbegin(), block_additions.rend());
    idx = end;
  }

  const MatchPos last = rows.prev_match(rows.length(), c);
  ++out.counters.table_queries;
  if (last.finite()) out.delta.additions.push_back({last.value(), 0});

  out.points = apply_delta_ordered(row_sorted, out.delta, z, [](const Pivot& x, const Pivot& y) { return x.row < y.row; });
  for (Pivot& p : out.points) ++p.col;
  return out;
}

/// Mirror of a PSAM pivot set with n rows and m columns under
/// psi_{A,B}[i,j] = psi_{rev B, rev A}[m-j, n-i]: (r, c) -> (m - c + 1, n - r + 1).
/// Reverses list order. The inverse is the same map with n and m swapped.
std::vector<Pivot> mirror_pivots(std::span<const Pivot> points, std::int32_t n, std::int32_t m);

struct PsamAppendUpdate {
  /// New pivot list sorted by increasing column, for Bσ.
  std::vector<Pivot> points;
  /// Density change in the coordinates of Bσ.
  DeltaPivots delta;
  /// Row i of the column step index (i, m) of the 0/1 difference matrix, if
  /// any. It is the new SSAM pivot (i, n+1) of Bσ.
  std::optional<std::int32_t> last_column_step_row;
  OpCounters counters;
};

/// Appends `c` to B, realised as a prepend on the mirrored problem.
/// `column_sorted` is sorted by increasing column; `a_reversed` answers
/// NextMatch / PrevMatch over rev(A).
template <MatchSource ReversedA>
PsamAppendUpdate psam_append_b_update(std::span<const Pivot> column_sorted, std::int32_t n, std::int32_t m,
                                      const ReversedA& a_reversed, Symbol c, ScratchArray& z) {
  const std::vector<Pivot> mirrored = mirror_pivots(column_sorted, n, m);
  PsamUpdate core = psam_prepend_update(std::span<const Pivot>(mirrored), a_reversed, c, z);

  PsamAppendUpdate out;
  out.points = mirror_pivots(core.points, m, n + 1);
  // Pre-shift mirrored column c' maps to row n - c' + 1 of Bσ.
  const auto back = [n, m](const Pivot& p) { return Pivot{n - p.col + 1, m - p.row + 1}; };
  for (const Pivot& p : core.delta.additions) out.delta.additions.push_back(back(p));
  for (const Pivot& p : core.delta.removals) out.delta.removals.push_back(back(p));
  if (core.row0_step_col) out.last_column_step_row = n + 1 - *core.row0_step_col;
  out.counters = core.counters;
  return out;
}

/// 2-sided incremental psi: prepend to A and append to B.
///
/// A is kept reversed inside its match tables so a prepend to A is an append
/// to rev(A). The pivot list is row-sorted for prepends and column-sorted for
/// appends; a switch between the two re-sorts it.
class PsamState {
 public:
  PsamState(std::string_view a, std::string_view b, Alphabet alphabet = Alphabet::lowercase());

  void prepend_a(Symbol c);
  void append_b(Symbol c);
  [[noreturn]] void append_a(Symbol c);
  [[noreturn]] void prepend_b(Symbol c);

  /// Re-sorts the pivot list (RowSorted or ColumnSorted) with a comparison sort.
  void resort(PivotOrder order);

  const Sequence& a() const { return a_; }
  const Sequence& b() const { return b_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::int32_t n() const { return b_.length(); }
  std::int32_t m() const { return a_.length(); }
  std::int32_t lcs() const { return static_cast<std::int32_t>(p_.size()); }
  std::int32_t delta() const { return n() - lcs(); }

  const PivotSet& pivots() const { return p_; }
  std::int32_t score(std::int32_t i, std::int32_t j) const { return score_psam(p_, i, j); }

  /// Match tables over B and over rev(A).
  const DynamicMatchTables& tables_b() const { return tables_b_; }
  const DynamicMatchTables& tables_a_reversed() const { return tables_a_rev_; }

  const DeltaPivots& last_delta() const { return last_delta_; }
  const OpCounters& last_counters() const { return last_counters_; }
  const ScratchArray& scratch() const { return z_; }

  void corrupt_for_testing();

 private:
  void ensure_scratch();

  Alphabet alphabet_;
  Sequence a_;
  Sequence b_;
  PivotSet p_;
  DynamicMatchTables tables_b_;
  DynamicMatchTables tables_a_rev_;
  ScratchArray z_;
  DeltaPivots last_delta_;
  OpCounters last_counters_;
};

}  // namespace iasm
