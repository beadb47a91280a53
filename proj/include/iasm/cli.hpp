#pragma once

// Command implementations behind the `iasm` tool. Each command writes to the
// given streams and returns the process exit code: 0 success, 1 verification
// mismatch, 2 usage or capability error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iasm/counters.hpp"
#include "iasm/joint.hpp"
#include "iasm/pivots.hpp"
#include "iasm/psam.hpp"
#include "iasm/sequences.hpp"
#include "iasm/ssam.hpp"

namespace iasm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class StateKind { Ssam, Psam, Joint };
StateKind parse_state_kind(std::string_view text);
std::string_view state_kind_name(StateKind kind);

enum class OpKind { PrependA, AppendA, AppendB };
std::string_view op_name(OpKind kind);

struct Op {
  OpKind kind;
  Symbol symbol;

  friend bool operator==(const Op&, const Op&) = default;
};

/// One op per line: `PA x`, `AA x` or `AB x`. Blank lines and `#` comments are
/// skipped. Throws UsageError / IngestionError.
std::vector<Op> parse_ops(std::istream& in, const Alphabet& alphabet);
std::string format_ops(const std::vector<Op>& ops);

/// SSAM: PA, AA. PSAM: PA, AB. JOINT: AA, AB.
bool op_allowed(StateKind state, OpKind op);
/// Throws CapabilityError naming the first op the state kind cannot run.
void check_legal(StateKind state, const std::vector<Op>& ops);

/// A literal string, or the contents of `path` for `@path` (trailing newline
/// stripped).
std::string resolve_string_arg(std::string_view arg);

/// Uniform front over the three dynamic states.
class Engine {
 public:
  Engine(StateKind kind, std::string_view a, std::string_view b, const Alphabet& alphabet);

  StateKind kind() const;
  void apply(const Op& op);

  std::int32_t n() const;
  std::int32_t m() const;
  std::int32_t lcs() const;
  std::int32_t delta() const { return n() - lcs(); }
  const Sequence& a() const;
  const Sequence& b() const;
  OpCounters last_counters() const;

  /// Canonical dump; JOINT prints the SSAM section then the PSAM section.
  std::string dump() const;
  /// The live pivot sets: one for SSAM / PSAM, {K, psi} for JOINT.
  std::vector<PivotSet> pivot_sets() const;
  /// Tables to compare with freshly built static ones after each append.
  std::vector<std::pair<const DynamicMatchTables*, Sequence>> match_tables() const;

  /// Oracle cross-check: nullopt when every pivot set matches, otherwise a
  /// description of the first divergence.
  std::optional<std::string> check_against_oracle() const;

  void corrupt_for_testing();

 private:
  std::variant<SsamState, PsamState, JointState> state_;
};

int cmd_build(StateKind kind, std::string_view a, std::string_view b, const Alphabet& alphabet, std::ostream& out,
              std::ostream& err);

int cmd_apply(StateKind kind, std::string_view a, std::string_view b, const std::string& ops_path, bool trace,
              const Alphabet& alphabet, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  StateKind kind = StateKind::Ssam;
  std::string a;
  std::string b;
  std::string ops_path;  // empty: no ops, just the initial state
  std::optional<std::int64_t> fuzz_trials;
  std::uint64_t seed = 0;
  std::int32_t max_len = 24;
  std::int32_t max_ops = 32;
  std::vector<int> sigma_sizes{2, 4};
  /// Negative control: corrupt the state after this many ops.
  std::optional<std::int32_t> corrupt_after;
};

int cmd_verify(const VerifyOptions& options, const Alphabet& alphabet, std::ostream& out, std::ostream& err);

/// Reads the section of `kind` (SSAM or PSAM) from a dump and prints its score
/// at (i, j).
int cmd_query(MatrixKind kind, std::istream& dump, std::int32_t i, std::int32_t j, std::ostream& out, std::ostream& err);

inline constexpr std::string_view kBenchHeader =
    "op_index,op_kind,n,m,L,Delta,touched_pivots,table_queries,wall_nanos";

/// n, m, L and Delta describe the state the op was applied to.
struct BenchRecord {
  std::int64_t op_index = 0;
  OpKind op_kind = OpKind::PrependA;
  std::int32_t n = 0;
  std::int32_t m = 0;
  std::int32_t L = 0;
  std::int32_t Delta = 0;
  std::int64_t touched_pivots = 0;
  std::int64_t table_queries = 0;
  std::int64_t wall_nanos = 0;
};

std::string format_bench_record(const BenchRecord& r);

/// Counter bounds for one op: touched <= 4(s+1), queries <= 2(s+1)+8, with s
/// = Delta for ops updating K by a scan (SSAM ops, JOINT AA) and s = L for ops
/// updating psi (PSAM ops, JOINT AB).
bool within_bounds(StateKind kind, const BenchRecord& r);

enum class Generator { Random, Similar, Disjoint };
Generator parse_generator(std::string_view text);

struct BenchOptions {
  StateKind kind = StateKind::Ssam;
  Generator generator = Generator::Random;
  std::int32_t n = 64;
  std::int32_t m = 64;
  std::int32_t sigma = 4;
  std::int64_t ops = 1000;
  std::uint64_t seed = 1;
};

/// Emits the CSV on `out` and a `# bench summary` line on `err`; exit 1 if any
/// op breaks its counter bound.
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// Records produced by a bench run, for callers that want them in memory.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

}  // namespace iasm::cli
