#pragma once

#include <cstdint>

namespace iasm {

/// Deterministic work done by one update.
///
/// touched_pivots counts pivot-list elements read by the update scan (forward
/// and backward passes). table_queries counts B accesses for SSAM updates and
/// NextMatch / PrevMatch lookups for PSAM updates.
struct OpCounters {
  std::int64_t touched_pivots = 0;
  std::int64_t table_queries = 0;
};

}  // namespace iasm
