#pragma once

// Pivot-point encoding of an all-scores matrix: the non-zero cells of its
// density matrix, plus everything needed to query and update that set.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iasm {

/// SSAM: LCS(A, B[i..j]) for every substring of B; density is +1 sub-unit Monge.
/// PSAM: LCS(B[i..n], A[0..j]) for every suffix/prefix pair; density is -1.
enum class MatrixKind { Ssam, Psam };

constexpr int kind_sign(MatrixKind kind) { return kind == MatrixKind::Ssam ? 1 : -1; }
std::string_view kind_name(MatrixKind kind);
/// "SSAM" / "PSAM", case-insensitive. Throws UsageError otherwise.
MatrixKind parse_kind(std::string_view text);

struct Pivot {
  std::int32_t row = 0;
  std::int32_t col = 0;

  friend auto operator<=>(const Pivot&, const Pivot&) = default;
};

enum class PivotOrder { RowBlocks, ColumnBlocks, RowSorted, ColumnSorted, Unordered };

enum class Axis { Row, Column };

struct PivotSet {
  MatrixKind kind = MatrixKind::Ssam;
  std::vector<Pivot> points;
  PivotOrder order = PivotOrder::Unordered;
  /// |B| and |A|. Density rows are 1..n; columns 1..n (SSAM) or 1..m (PSAM).
  std::int32_t n = 0;
  std::int32_t m = 0;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  /// Points in lexicographic (row, col) order.
  std::vector<Pivot> canonical() const;
};

/// Same pivot multiset and bounds, any order.
bool same_pivots(const PivotSet& a, const PivotSet& b);

/// Signed density change of one update. Additions are new non-zero cells of
/// the kind's sign, removals are existing pivots cancelled to zero.
struct DeltaPivots {
  std::vector<Pivot> additions;
  std::vector<Pivot> removals;

  bool empty() const { return additions.empty() && removals.empty(); }
};

/// Zero-initialised integer array reused across operations. Every user zeroes
/// exactly the cells it wrote before returning.
class ScratchArray {
 public:
  ScratchArray() = default;
  explicit ScratchArray(std::size_t size) : cells_(size, 0) {}

  std::size_t size() const { return cells_.size(); }
  /// Grows to at least `size` cells; new cells are zero.
  void ensure(std::size_t size) {
    if (cells_.size() < size) cells_.resize(size, 0);
  }

  std::int32_t& operator[](std::int32_t k) {
    assert(k >= 0 && static_cast<std::size_t>(k) < cells_.size());
    return cells_[static_cast<std::size_t>(k)];
  }
  std::int32_t operator[](std::int32_t k) const {
    assert(k >= 0 && static_cast<std::size_t>(k) < cells_.size());
    return cells_[static_cast<std::size_t>(k)];
  }

  bool all_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](std::int32_t v) { return v == 0; });
  }

 private:
  std::vector<std::int32_t> cells_;
};

/// Throws StructuralError unless every row and column holds at most one pivot
/// and all points lie inside the density range (column 0 allowed for PSAM).
void validate_pivots(const PivotSet& p);

/// K[i,j] = (j - i) - |{(r,c) in P : i < r <= j, c <= j}| for i <= j, else j - i.
std::int32_t score_ssam(const PivotSet& p, std::int32_t i, std::int32_t j);

/// psi[i,j] = |{(r,c) in P : r > i, c <= j}|.
std::int32_t score_psam(const PivotSet& p, std::int32_t i, std::int32_t j);

/// Reorders points so that each maximal run of consecutive occupied rows
/// (columns) is contiguous, highest row (column) of the run first. Runs appear
/// in the order their first member is met in `points`. O(|points|) with `z`
/// large enough to index every row (column) + 1; `z` is left all-zero.
std::vector<Pivot> cluster_blocks(std::span<const Pivot> points, Axis axis, ScratchArray& z);
PivotSet cluster_blocks(const PivotSet& p, Axis axis, ScratchArray& z);

/// (P \ removals) U additions, order Unordered. Throws StructuralError when a
/// removal is absent, an addition already exists, or the result has two pivots
/// in one row or column.
PivotSet apply_delta(const PivotSet& p, const DeltaPivots& delta, ScratchArray& z);
PivotSet apply_delta(const PivotSet& p, const DeltaPivots& delta);

/// Order-preserving variant: `base` must be sorted by `less` and so must
/// `delta.additions`; the result is the merge, still sorted. O(|base| + |delta|).
template <typename Less>
std::vector<Pivot> apply_delta_ordered(std::span<const Pivot> base, const DeltaPivots& delta, ScratchArray& z,
                                       Less less);

/// Text dump: header `KIND n m count`, then `row col` per pivot in
/// lexicographic order, one per line.
std::string dump_pivots(const PivotSet& p);
/// Parses one dump section. Throws UsageError on malformed input.
PivotSet parse_pivot_dump(std::istream& in);

// ---------------------------------------------------------------------------

namespace detail {
/// Marks removals by row in `z`, drops them from `base` keeping order, checks
/// every removal was found. Leaves `z` zero.
std::vector<Pivot> drop_removals(std::span<const Pivot> base, std::span<const Pivot> removals, ScratchArray& z);
/// Checks one-per-row and one-per-column over `points`. Leaves `z` zero.
void check_unique_lines(std::span<const Pivot> points, ScratchArray& z, std::string_view context);
[[noreturn]] void throw_unsorted_additions();
}  // namespace detail

template <typename Less>
std::vector<Pivot> apply_delta_ordered(std::span<const Pivot> base, const DeltaPivots& delta, ScratchArray& z,
                                       Less less) {
  if (!std::is_sorted(delta.additions.begin(), delta.additions.end(), less)) detail::throw_unsorted_additions();
  std::vector<Pivot> kept = detail::drop_removals(base, delta.removals, z);
  std::vector<Pivot> out;
  out.reserve(kept.size() + delta.additions.size());
  std::merge(kept.begin(), kept.end(), delta.additions.begin(), delta.additions.end(), std::back_inserter(out), less);
  detail::check_unique_lines(out, z, "ordered delta");
  return out;
}

}  // namespace iasm
