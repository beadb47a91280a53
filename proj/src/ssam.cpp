#include "iasm/ssam.hpp"

#include <string>

#include "iasm/errors.hpp"
#include "iasm/oracle.hpp"

namespace iasm {

namespace {

/// A maximal run of consecutive keys stored contiguously at [begin, end).
struct Run {
  std::size_t begin;
  std::size_t end;
  std::int32_t lo;
  std::int32_t hi;
  bool ascending;

  /// Position in the list of the pivot whose key is `k`, lo <= k <= hi.
  std::size_t position(std::int32_t k) const {
    return begin + static_cast<std::size_t>(ascending ? k - lo : hi - k);
  }
};

template <typename Key, typename Fn>
void for_each_run(std::span<const Pivot> list, Key key, Fn&& fn) {
  std::size_t s = 0;
  while (s < list.size()) {
    std::size_t e = s + 1;
    int step = 0;
    while (e < list.size()) {
      const std::int32_t d = key(list[e]) - key(list[e - 1]);
      if (d != 1 && d != -1) break;
      if (step != 0 && d != step) throw StructuralError("pivot list is not in block order");
      step = d;
      ++e;
    }
    const std::int32_t first = key(list[s]);
    const std::int32_t last = key(list[e - 1]);
    fn(Run{s, e, std::min(first, last), std::max(first, last), step >= 0});
    s = e;
  }
}

template <typename Fn>
void for_each_in_run_order(const Run& run, Fn&& fn) {
  if (run.ascending) {
    for (std::int32_t k = run.lo; k <= run.hi; ++k) fn(k);
  } else {
    for (std::int32_t k = run.hi; k >= run.lo; --k) fn(k);
  }
}

}  // namespace

SsamUpdate ssam_prepend_update(std::span<const Pivot> row_blocks, const Sequence& b, Symbol c, ScratchArray& z) {
  SsamUpdate out;
  z.ensure(static_cast<std::size_t>(b.length()) + 2);

  for_each_run(row_blocks, [](const Pivot& p) { return p.row; }, [&](const Run& run) {
    const auto col_of = [&](std::int32_t r) {
      ++out.counters.touched_pivots;
      return row_blocks[run.position(r)].col;
    };

    // z[i] = step column + 1 for each step row i in [lo-1, hi-1].
    std::int32_t i1 = run.lo - 1;
    while (i1 < run.hi) {
      std::int32_t k = 0;
      for (std::int32_t r = i1 + 1; r <= run.hi; ++r) {
        ++out.counters.touched_pivots;
        ++out.counters.table_queries;
        if (b[r] == c) {
          k = r;
          break;
        }
      }
      if (k == 0) break;  // the run ends before the next occurrence of c
      std::int32_t j = 0;
      for (std::int32_t i = k - 1; i >= i1; --i) {
        j = std::max(j, col_of(i + 1));
        z[i] = j + 1;
        ++out.step_count;
      }
      i1 = k;
    }

    std::vector<std::int32_t> rows;
    for_each_in_run_order(run, [&](std::int32_t r) { rows.push_back(r - 1); });
    for (std::int32_t i : rows) {
      if (z[i] == 0) continue;
      const std::int32_t j = z[i] - 1;
      if (i >= 1 && z[i - 1] != z[i]) out.delta.additions.push_back({i, j});
      if (z[i + 1] != z[i]) out.delta.removals.push_back({i + 1, j});
    }
    for (std::int32_t i : rows) z[i] = 0;
  });
  return out;
}

SsamUpdate ssam_append_update(std::span<const Pivot> column_blocks, const Sequence& b, Symbol c, ScratchArray& z) {
  SsamUpdate out;
  const std::int32_t n = b.length();
  z.ensure(static_cast<std::size_t>(n) + 2);

  for_each_run(column_blocks, [](const Pivot& p) { return p.col; }, [&](const Run& run) {
    const auto row_of = [&](std::int32_t col) {
      ++out.counters.touched_pivots;
      return column_blocks[run.position(col)].row;
    };

    // z[j] = step row + 1 for each step column j in [lo, hi].
    std::int32_t j1 = run.hi;
    while (j1 >= run.lo) {
      std::int32_t k = 0;
      for (std::int32_t j = j1; j >= run.lo; --j) {
        ++out.counters.touched_pivots;
        ++out.counters.table_queries;
        if (b[j] == c) {
          k = j;
          break;
        }
      }
      if (k == 0) break;
      std::int32_t r = n + 1;
      for (std::int32_t j = k; j <= j1; ++j) {
        r = std::min(r, row_of(j));
        z[j] = r + 1;
        ++out.step_count;
      }
      j1 = k - 1;
    }

    for_each_in_run_order(run, [&](std::int32_t j) {
      if (z[j] == 0) return;
      const std::int32_t r = z[j] - 1;
      if (j < n && z[j + 1] != z[j]) out.delta.additions.push_back({r, j + 1});
      if (z[j - 1] != z[j]) out.delta.removals.push_back({r, j});
      if (j == n) out.last_column_step_row = r;
    });
    for (std::int32_t j = run.lo; j <= run.hi; ++j) z[j] = 0;
  });
  return out;
}

// ---------------------------------------------------------------------------

SsamState::SsamState(std::string_view a, std::string_view b, Alphabet alphabet)
    : alphabet_(std::move(alphabet)), a_(std::string(a)), b_(std::string(b)) {
  alphabet_.validate(a);
  alphabet_.validate(b);
  const PivotSet initial = oracle::ssam_pivots(a_, b_);
  z_.ensure(static_cast<std::size_t>(n()) + 2);
  rows_ = cluster_blocks(initial, Axis::Row, z_);
  cols_ = cluster_blocks(initial, Axis::Column, z_);
}

void SsamState::commit(const SsamUpdate& update) {
  PivotSet next = apply_delta(rows_, update.delta, z_);
  next.m = a_.length();
  rows_ = cluster_blocks(next, Axis::Row, z_);
  cols_ = cluster_blocks(next, Axis::Column, z_);
  last_ = update;
  assert(z_.all_zero());
}

void SsamState::prepend_a(Symbol c) {
  alphabet_.index_of(c);
  SsamUpdate update = ssam_prepend_update(rows_.points, b_, c, z_);
  a_.prepend(c);
  commit(update);
}

void SsamState::append_a(Symbol c) {
  alphabet_.index_of(c);
  SsamUpdate update = ssam_append_update(cols_.points, b_, c, z_);
  a_.append(c);
  commit(update);
}

void SsamState::append_b(Symbol) {
  throw CapabilityError("SSAM cannot append to B: B is fixed, the new density column is not derivable from K's pivots");
}

void SsamState::prepend_b(Symbol) {
  throw CapabilityError("SSAM cannot prepend to B: B is fixed, the new density row is not derivable from K's pivots");
}

void SsamState::corrupt_for_testing() {
  if (rows_.points.empty()) {
    if (n() == 0) return;
    rows_.points.push_back({1, 1});
  } else {
    rows_.points.pop_back();
  }
  cols_ = cluster_blocks(rows_, Axis::Column, z_);
  rows_ = cluster_blocks(rows_, Axis::Row, z_);
}

}  // namespace iasm
