#include "iasm/psam.hpp"

#include "iasm/oracle.hpp"

namespace iasm {

std::vector<Pivot> mirror_pivots(std::span<const Pivot> points, std::int32_t n, std::int32_t m) {
  std::vector<Pivot> out;
  out.reserve(points.size());
  for (auto it = points.rbegin(); it != points.rend(); ++it) out.push_back({m - it->col + 1, n - it->row + 1});
  return out;
}

PsamState::PsamState(std::string_view a, std::string_view b, Alphabet alphabet)
    : alphabet_(std::move(alphabet)),
      a_(std::string(a)),
      b_(std::string(b)),
      tables_b_(b_, alphabet_),
      tables_a_rev_(a_.reversed(), alphabet_) {
  p_ = oracle::psam_pivots(a_, b_);
  ensure_scratch();
}

void PsamState::ensure_scratch() { z_.ensure(static_cast<std::size_t>(std::max(n(), m())) + 3); }

void PsamState::resort(PivotOrder order) {
  if (order == p_.order) return;
  if (order == PivotOrder::RowSorted) {
    std::sort(p_.points.begin(), p_.points.end(), [](const Pivot& x, const Pivot& y) { return x.row < y.row; });
  } else if (order == PivotOrder::ColumnSorted) {
    std::sort(p_.points.begin(), p_.points.end(), [](const Pivot& x, const Pivot& y) { return x.col < y.col; });
  } else {
    throw UsageError("PSAM pivots can only be re-sorted by row or by column");
  }
  p_.order = order;
}

void PsamState::prepend_a(Symbol c) {
  alphabet_.index_of(c);
  resort(PivotOrder::RowSorted);
  ensure_scratch();
  PsamUpdate update = psam_prepend_update(std::span<const Pivot>(p_.points), tables_b_, c, z_);
  a_.prepend(c);
  tables_a_rev_.append(c);
  p_.points = std::move(update.points);
  p_.m = m();
  last_delta_ = std::move(update.delta);
  last_counters_ = update.counters;
  assert(z_.all_zero());
}

void PsamState::append_b(Symbol c) {
  alphabet_.index_of(c);
  resort(PivotOrder::ColumnSorted);
  ensure_scratch();
  PsamAppendUpdate update = psam_append_b_update(std::span<const Pivot>(p_.points), n(), m(), tables_a_rev_, c, z_);
  b_.append(c);
  tables_b_.append(c);
  p_.points = std::move(update.points);
  p_.n = n();
  last_delta_ = std::move(update.delta);
  last_counters_ = update.counters;
  assert(z_.all_zero());
}

void PsamState::append_a(Symbol) {
  throw CapabilityError("PSAM supports only prepends to A and appends to B; appending to A is not supported");
}

void PsamState::prepend_b(Symbol) {
  throw CapabilityError("PSAM supports only prepends to A and appends to B; prepending to B is not supported");
}

void PsamState::corrupt_for_testing() {
  if (!p_.points.empty()) {
    p_.points.pop_back();
  } else if (n() > 0 && m() > 0) {
    p_.points.push_back({1, 1});
    p_.order = PivotOrder::RowSorted;
  }
}

}  // namespace iasm
