#include "iasm/joint.hpp"

#include "iasm/errors.hpp"
#include "iasm/oracle.hpp"
#include "iasm/psam.hpp"
#include "iasm/ssam.hpp"

namespace iasm {

namespace {

constexpr std::int32_t kSelfCheckLimit = 64;

bool by_column(const Pivot& x, const Pivot& y) { return x.col < y.col; }

PivotSet column_sorted(PivotSet p) {
  std::sort(p.points.begin(), p.points.end(), by_column);
  p.order = PivotOrder::ColumnSorted;
  return p;
}

}  // namespace

JointState::JointState(std::string_view a, std::string_view b, Alphabet alphabet)
    : alphabet_(std::move(alphabet)),
      a_(std::string(a)),
      b_(std::string(b)),
      tables_a_(a_, alphabet_),
      tables_b_(b_, alphabet_) {
  k_ = column_sorted(oracle::ssam_pivots(a_, b_));
  psi_ = column_sorted(oracle::psam_pivots(a_, b_));
  ensure_scratch();
}

void JointState::ensure_scratch() { z_.ensure(static_cast<std::size_t>(std::max(n(), m())) + 3); }

void JointState::append_a(Symbol c) {
  alphabet_.index_of(c);
  ensure_scratch();
  const SsamUpdate update = ssam_append_update(k_.points, b_, c, z_);
  k_.points = apply_delta_ordered(k_.points, update.delta, z_, by_column);

  a_.append(c);
  tables_a_.append(c);
  k_.m = m();
  psi_.m = m();
  // Column m+1 of psi is the last column of K'; it is the maximum column, so
  // the list stays sorted.
  if (update.last_column_step_row) psi_.points.push_back({*update.last_column_step_row, m()});

  last_counters_ = update.counters;
  if (self_check_) verify_against_oracle();
}

void JointState::append_b(Symbol c) {
  alphabet_.index_of(c);
  ensure_scratch();
  const ReversedMatchView<DynamicMatchTables> a_reversed(tables_a_);
  PsamAppendUpdate update = psam_append_b_update(std::span<const Pivot>(psi_.points), n(), m(), a_reversed, c, z_);
  psi_.points = std::move(update.points);

  const std::int32_t grown = n() + 1;
  if (update.last_column_step_row) {
    k_.points.push_back({*update.last_column_step_row, grown});
  } else {
    ++update.counters.table_queries;
    if (!tables_a_.prev_match(m(), c).finite()) k_.points.push_back({grown, grown});
  }

  b_.append(c);
  tables_b_.append(c);
  k_.n = n();
  psi_.n = n();
  last_counters_ = update.counters;
  if (self_check_) verify_against_oracle();
}

void JointState::prepend_a(Symbol) {
  throw CapabilityError("JOINT supports only appends to A and to B; prepending to A is not supported");
}

void JointState::prepend_b(Symbol) {
  throw CapabilityError("JOINT supports only appends to A and to B; prepending to B is not supported");
}

void JointState::verify_against_oracle() const {
  if (n() > kSelfCheckLimit || m() > kSelfCheckLimit) return;
  if (!same_pivots(k_, oracle::ssam_pivots(a_, b_))) {
    throw StructuralError("JOINT self-check: SSAM pivots diverge from the oracle for A=\"" + a_.str() + "\" B=\"" +
                          b_.str() + "\"");
  }
  if (!same_pivots(psi_, oracle::psam_pivots(a_, b_))) {
    throw StructuralError("JOINT self-check: PSAM pivots diverge from the oracle for A=\"" + a_.str() + "\" B=\"" +
                          b_.str() + "\"");
  }
}

void JointState::corrupt_for_testing() {
  if (!psi_.points.empty()) {
    psi_.points.pop_back();
  } else if (!k_.points.empty()) {
    k_.points.pop_back();
  }
}

}  // namespace iasm
