#pragma once

// K and psi maintained together under appends to A and to B. The append that
// updates one matrix yields the single new pivot of the other: the last column
// of K is the last column of psi.

#include <string_view>

#include "iasm/counters.hpp"
#include "iasm/pivots.hpp"
#include "iasm/sequences.hpp"

namespace iasm {

class JointState {
 public:
  JointState(std::string_view a, std::string_view b, Alphabet alphabet = Alphabet::lowercase());

  /// K: column-append update over B. psi: gains (i, m+1) when the update has a
  /// column step index (i, n), nothing otherwise.
  void append_a(Symbol c);
  /// psi: append-to-B update. K: gains (i, n+1) when that update has a column
  /// step index (i, m); else (n+1, n+1) when `c` does not occur in A; else
  /// nothing.
  void append_b(Symbol c);
  [[noreturn]] void prepend_a(Symbol c);
  [[noreturn]] void prepend_b(Symbol c);

  const Sequence& a() const { return a_; }
  const Sequence& b() const { return b_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::int32_t n() const { return b_.length(); }
  std::int32_t m() const { return a_.length(); }
  std::int32_t lcs() const { return static_cast<std::int32_t>(psi_.size()); }
  std::int32_t delta() const { return static_cast<std::int32_t>(k_.size()); }

  /// Both lists sorted by increasing column (read back to front for the
  /// decreasing order the updates walk in).
  const PivotSet& ssam_pivots() const { return k_; }
  const PivotSet& psam_pivots() const { return psi_; }

  const DynamicMatchTables& tables_a() const { return tables_a_; }
  const DynamicMatchTables& tables_b() const { return tables_b_; }

  const OpCounters& last_counters() const { return last_counters_; }
  const ScratchArray& scratch() const { return z_; }

  /// Recompute both pivot sets with the oracle after every update and throw
  /// StructuralError on divergence. Only honoured while n, m <= 64. On by
  /// default in builds without NDEBUG.
  void set_self_check(bool on) { self_check_ = on; }
  bool self_check() const { return self_check_; }

  void corrupt_for_testing();

 private:
  void verify_against_oracle() const;
  void ensure_scratch();

  Alphabet alphabet_;
  Sequence a_;
  Sequence b_;
  PivotSet k_;
  PivotSet psi_;
  DynamicMatchTables tables_a_;
  DynamicMatchTables tables_b_;
  ScratchArray z_;
  OpCounters last_counters_;
#ifdef NDEBUG
  bool self_check_ = false;
#else
  bool self_check_ = true;
#endif
};

}  // namespace iasm
