#pragma once

// Live pivot encoding of K[i,j] = LCS(B[i..j], A) for a fixed B, updated under
// single-symbol prepends and appends to A in O(Delta) work, Delta = |B| - LCS(A, B).

#include <optional>
#include <span>
#include <string_view>

#include "iasm/counters.hpp"
#include "iasm/pivots.hpp"
#include "iasm/sequences.hpp"

namespace iasm {

/// Result of one K update, before it is applied.
struct SsamUpdate {
  DeltaPivots delta;
  /// Row r of the column step index (r, n) of the 0/1 difference matrix, when
  /// an append produced one. It is the new PSAM pivot (r, m+1) of Aσ.
  std::optional<std::int32_t> last_column_step_row;
  std::int32_t step_count = 0;
  OpCounters counters;
};

/// Density change of K when `c` is prepended to A.
///
/// `row_blocks` holds the pivots of K with every maximal run of consecutive
/// rows contiguous and monotone (either direction). Within a run [r1:r2] the
/// update walks B from r1 looking for `c` while rows keep their pivots; a match
/// at k turns rows i1..k-1 into step rows whose step column is the running
/// maximum pivot column over rows i+1..k. The step indices are then turned into
/// density cells: +1 at (i, j) unless row i-1 steps at j too, -1 at (i+1, j)
/// unless row i+1 steps at j too.
///
/// Within a run, additions follow the run's direction in the list.
SsamUpdate ssam_prepend_update(std::span<const Pivot> row_blocks, const Sequence& b, Symbol c, ScratchArray& z);

/// Density change of K when `c` is appended to A. Mirror of the prepend over
/// column runs: walking B down from the top of a run to the match k, columns
/// k..j1 step at the running minimum pivot row over columns k..j. Column steps
/// become +1 at (r, j+1) and -1 at (r, j) unless the neighbouring column steps
/// at the same row.
///
/// Within a run, additions follow the run's direction in the list.
SsamUpdate ssam_append_update(std::span<const Pivot> column_blocks, const Sequence& b, Symbol c, ScratchArray& z);

/// 2-sided incremental K: prepend and append to A, B fixed.
///
/// Keeps two views of the same pivot set: `pivots()` in row-block order for
/// prepends and `column_pivots()` in column-block order for appends. Both are
/// rebuilt by cluster_blocks after every update.
class SsamState {
 public:
  SsamState(std::string_view a, std::string_view b, Alphabet alphabet = Alphabet::lowercase());

  void prepend_a(Symbol c);
  void append_a(Symbol c);
  /// B is fixed in this encoding; both throw CapabilityError.
  [[noreturn]] void append_b(Symbol c);
  [[noreturn]] void prepend_b(Symbol c);

  const Sequence& a() const { return a_; }
  const Sequence& b() const { return b_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::int32_t n() const { return b_.length(); }
  std::int32_t m() const { return a_.length(); }
  std::int32_t delta() const { return static_cast<std::int32_t>(rows_.size()); }
  std::int32_t lcs() const { return n() - delta(); }

  const PivotSet& pivots() const { return rows_; }
  const PivotSet& column_pivots() const { return cols_; }

  std::int32_t score(std::int32_t i, std::int32_t j) const { return score_ssam(rows_, i, j); }

  const SsamUpdate& last_update() const { return last_; }
  const ScratchArray& scratch() const { return z_; }

  /// Drops one pivot (or adds a diagonal one to an empty set) without updating
  /// anything else. Negative-control hook for verification tooling.
  void corrupt_for_testing();

 private:
  void commit(const SsamUpdate& update);

  Alphabet alphabet_;
  Sequence a_;
  Sequence b_;
  PivotSet rows_;
  PivotSet cols_;
  ScratchArray z_;
  SsamUpdate last_;
};

}  // namespace iasm
