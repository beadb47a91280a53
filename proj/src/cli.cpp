#include "iasm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "iasm/errors.hpp"
#include "iasm/oracle.hpp"

namespace iasm::cli {

namespace {

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  return out;
}

std::string describe(const std::vector<Pivot>& points) {
  std::ostringstream out;
  out << '{';
  for (std::size_t t = 0; t < points.size(); ++t) {
    if (t) out << ',';
    out << '(' << points[t].row << ',' << points[t].col << ')';
  }
  out << '}';
  return out.str();
}

std::string capability_text(StateKind state) {
  switch (state) {
    case StateKind::Ssam:
      return "SSAM keeps B fixed and supports only PA (prepend to A) and AA (append to A)";
    case StateKind::Psam:
      return "PSAM supports only PA (prepend to A) and AB (append to B)";
    case StateKind::Joint:
      return "JOINT supports only AA (append to A) and AB (append to B)";
  }
  return {};
}

std::vector<Op> read_ops_file(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open ops file '" + path + "'");
  return parse_ops(in, alphabet);
}

/// Runs `body`, mapping input and capability errors to exit 2.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const IngestionError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

std::string random_string(std::mt19937_64& rng, std::int32_t length, std::string_view symbols) {
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::string out;
  out.reserve(static_cast<std::size_t>(length));
  for (std::int32_t t = 0; t < length; ++t) out.push_back(symbols[pick(rng)]);
  return out;
}

std::vector<OpKind> legal_ops(StateKind state) {
  std::vector<OpKind> out;
  for (OpKind op : {OpKind::PrependA, OpKind::AppendA, OpKind::AppendB}) {
    if (op_allowed(state, op)) out.push_back(op);
  }
  return out;
}

std::vector<Op> random_ops(std::mt19937_64& rng, StateKind state, std::int64_t count, std::string_view a_symbols,
                           std::string_view b_symbols) {
  const std::vector<OpKind> kinds = legal_ops(state);
  std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
  std::vector<Op> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t t = 0; t < count; ++t) {
    const OpKind kind = kinds[pick_kind(rng)];
    const std::string_view symbols = kind == OpKind::AppendB ? b_symbols : a_symbols;
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    out.push_back({kind, symbols[pick(rng)]});
  }
  return out;
}

/// Replays `ops`, checking the oracle before the first op and after each one.
/// Returns the divergence report, if any.
std::optional<std::string> replay_checked(StateKind kind, std::string_view a, std::string_view b,
                                          const std::vector<Op>& ops, const Alphabet& alphabet,
                                          std::optional<std::int32_t> corrupt_after) {
  Engine engine(kind, a, b, alphabet);
  auto check = [&](std::size_t applied) -> std::optional<std::string> {
    if (corrupt_after && static_cast<std::int64_t>(applied) == *corrupt_after) engine.corrupt_for_testing();
    const auto mismatch = engine.check_against_oracle();
    if (!mismatch) return std::nullopt;
    std::ostringstream out;
    if (applied == 0) {
      out << "initial state";
    } else {
      const Op& op = ops[applied - 1];
      out << "op " << applied << " (" << op_name(op.kind) << ' ' << op.symbol << ')';
    }
    out << ": " << *mismatch;
    return out.str();
  };
  if (auto report = check(0)) return report;
  for (std::size_t t = 0; t < ops.size(); ++t) {
    try {
      engine.apply(ops[t]);
    } catch (const StructuralError& e) {
      return "op " + std::to_string(t + 1) + " (" + std::string(op_name(ops[t].kind)) + ' ' + ops[t].symbol +
             "): " + e.what();
    }
    if (auto report = check(t + 1)) return report;
  }
  return std::nullopt;
}

}  // namespace

StateKind parse_state_kind(std::string_view text) {
  const std::string u = upper(text);
  if (u == "SSAM") return StateKind::Ssam;
  if (u == "PSAM") return StateKind::Psam;
  if (u == "JOINT") return StateKind::Joint;
  throw UsageError("unknown state kind '" + std::string(text) + "' (expected SSAM, PSAM or JOINT)");
}

std::string_view state_kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::Ssam:
      return "SSAM";
    case StateKind::Psam:
      return "PSAM";
    case StateKind::Joint:
      return "JOINT";
  }
  return "?";
}

std::string_view op_name(OpKind kind) {
  switch (kind) {
    case OpKind::PrependA:
      return "PA";
    case OpKind::AppendA:
      return "AA";
    case OpKind::AppendB:
      return "AB";
  }
  return "?";
}

std::vector<Op> parse_ops(std::istream& in, const Alphabet& alphabet) {
  std::vector<Op> ops;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string code;
    std::string symbol;
    if (!(fields >> code)) continue;
    std::string extra;
    if (!(fields >> symbol) || symbol.size() != 1 || (fields >> extra)) {
      throw UsageError("ops line " + std::to_string(line_no) + ": expected '<PA|AA|AB> <symbol>', got '" + line + "'");
    }
    Op op{};
    const std::string u = upper(code);
    if (u == "PA") {
      op.kind = OpKind::PrependA;
    } else if (u == "AA") {
      op.kind = OpKind::AppendA;
    } else if (u == "AB") {
      op.kind = OpKind::AppendB;
    } else {
      throw UsageError("ops line " + std::to_string(line_no) + ": unknown op '" + code + "'");
    }
    op.symbol = symbol[0];
    if (!alphabet.contains(op.symbol)) {
      throw IngestionError("ops line " + std::to_string(line_no) + ": symbol '" + symbol + "' is not in the alphabet '" +
                           alphabet.symbols() + "'");
    }
    ops.push_back(op);
  }
  return ops;
}

std::string format_ops(const std::vector<Op>& ops) {
  std::string out;
  for (const Op& op : ops) {
    out += op_name(op.kind);
    out += ' ';
    out += op.symbol;
    out += '\n';
  }
  return out;
}

bool op_allowed(StateKind state, OpKind op) {
  switch (state) {
    case StateKind::Ssam:
      return op == OpKind::PrependA || op == OpKind::AppendA;
    case StateKind::Psam:
      return op == OpKind::PrependA || op == OpKind::AppendB;
    case StateKind::Joint:
      return op == OpKind::AppendA || op == OpKind::AppendB;
  }
  return false;
}

void check_legal(StateKind state, const std::vector<Op>& ops) {
  for (std::size_t t = 0; t < ops.size(); ++t) {
    if (!op_allowed(state, ops[t].kind)) {
      throw CapabilityError("op " + std::to_string(t + 1) + " (" + std::string(op_name(ops[t].kind)) + ' ' +
                            ops[t].symbol + "): " + capability_text(state));
    }
  }
}

std::string resolve_string_arg(std::string_view arg) {
  if (arg.empty() || arg.front() != '@') return std::string(arg);
  const std::string path(arg.substr(1));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

// Engine

Engine::Engine(StateKind kind, std::string_view a, std::string_view b, const Alphabet& alphabet)
    : state_(std::in_place_type<SsamState>, "", "", alphabet) {
  alphabet.validate(a);
  alphabet.validate(b);
  switch (kind) {
    case StateKind::Ssam:
      state_.emplace<SsamState>(a, b, alphabet);
      break;
    case StateKind::Psam:
      state_.emplace<PsamState>(a, b, alphabet);
      break;
    case StateKind::Joint:
      state_.emplace<JointState>(a, b, alphabet).set_self_check(false);
      break;
  }
}

StateKind Engine::kind() const { return static_cast<StateKind>(state_.index()); }

void Engine::apply(const Op& op) {
  std::visit(
      [&](auto& s) {
        switch (op.kind) {
          case OpKind::PrependA:
            s.prepend_a(op.symbol);
            break;
          case OpKind::AppendA:
            s.append_a(op.symbol);
            break;
          case OpKind::AppendB:
            s.append_b(op.symbol);
            break;
        }
      },
      state_);
}

std::int32_t Engine::n() const {
  return std::visit([](const auto& s) { return s.n(); }, state_);
}

std::int32_t Engine::m() const {
  return std::visit([](const auto& s) { return s.m(); }, state_);
}

std::int32_t Engine::lcs() const {
  return std::visit([](const auto& s) { return s.lcs(); }, state_);
}

const Sequence& Engine::a() const {
  return std::visit([](const auto& s) -> const Sequence& { return s.a(); }, state_);
}

const Sequence& Engine::b() const {
  return std::visit([](const auto& s) -> const Sequence& { return s.b(); }, state_);
}

OpCounters Engine::last_counters() const {
  if (const auto* s = std::get_if<SsamState>(&state_)) return s->last_update().counters;
  if (const auto* s = std::get_if<PsamState>(&state_)) return s->last_counters();
  return std::get<JointState>(state_).last_counters();
}

std::vector<PivotSet> Engine::pivot_sets() const {
  if (const auto* s = std::get_if<SsamState>(&state_)) return {s->pivots()};
  if (const auto* s = std::get_if<PsamState>(&state_)) return {s->pivots()};
  const auto& j = std::get<JointState>(state_);
  return {j.ssam_pivots(), j.psam_pivots()};
}

std::string Engine::dump() const {
  std::string out;
  for (const PivotSet& p : pivot_sets()) out += dump_pivots(p);
  return out;
}

std::vector<std::pair<const DynamicMatchTables*, Sequence>> Engine::match_tables() const {
  if (std::holds_alternative<SsamState>(state_)) return {};
  if (const auto* s = std::get_if<PsamState>(&state_)) {
    return {{&s->tables_b(), s->b()}, {&s->tables_a_reversed(), s->a().reversed()}};
  }
  const auto& j = std::get<JointState>(state_);
  return {{&j.tables_a(), j.a()}, {&j.tables_b(), j.b()}};
}

std::optional<std::string> Engine::check_against_oracle() const {
  for (const PivotSet& live : pivot_sets()) {
    const PivotSet expected =
        live.kind == MatrixKind::Ssam ? oracle::ssam_pivots(a(), b()) : oracle::psam_pivots(a(), b());
    if (!same_pivots(live, expected)) {
      return std::string(kind_name(live.kind)) + " A=\"" + a().str() + "\" B=\"" + b().str() + "\" expected " +
             describe(expected.canonical()) + " actual " + describe(live.canonical());
    }
  }
  return std::nullopt;
}

void Engine::corrupt_for_testing() {
  std::visit([](auto& s) { s.corrupt_for_testing(); }, state_);
}

// Commands

int cmd_build(StateKind kind, std::string_view a, std::string_view b, const Alphabet& alphabet, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Engine engine(kind, a, b, alphabet);
    out << engine.dump();
    return kExitOk;
  });
}

int cmd_apply(StateKind kind, std::string_view a, std::string_view b, const std::string& ops_path, bool trace,
              const Alphabet& alphabet, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<Op> ops = read_ops_file(ops_path, alphabet);
    check_legal(kind, ops);
    Engine engine(kind, a, b, alphabet);
    for (std::size_t t = 0; t < ops.size(); ++t) {
      engine.apply(ops[t]);
      if (trace) out << "# after op " << (t + 1) << ": " << op_name(ops[t].kind) << ' ' << ops[t].symbol << '\n'
                     << engine.dump();
    }
    if (!trace || ops.empty()) out << engine.dump();
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& options, const Alphabet& alphabet, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!options.fuzz_trials) {
      std::vector<Op> ops;
      if (!options.ops_path.empty()) ops = read_ops_file(options.ops_path, alphabet);
      check_legal(options.kind, ops);
      if (auto report = replay_checked(options.kind, options.a, options.b, ops, alphabet, options.corrupt_after)) {
        err << "mismatch: " << *report << '\n';
        return kExitMismatch;
      }
      out << "ok: " << state_kind_name(options.kind) << ", " << ops.size() << " ops verified\n";
      return kExitOk;
    }

    if (*options.fuzz_trials < 0) throw UsageError("--fuzz trials must be non-negative");
    if (options.max_len < 0 || options.max_ops < 0) throw UsageError("--max-len and --max-ops must be non-negative");
    if (options.sigma_sizes.empty()) throw UsageError("--sigma needs at least one alphabet size");
    for (int size : options.sigma_sizes) {
      if (size < 1 || size > alphabet.size()) {
        throw UsageError("alphabet size " + std::to_string(size) + " outside [1, " + std::to_string(alphabet.size()) +
                         "]");
      }
    }
    std::mt19937_64 rng(options.seed);
    std::int64_t total_ops = 0;
    for (std::int64_t trial = 0; trial < *options.fuzz_trials; ++trial) {
      const int size = options.sigma_sizes[static_cast<std::size_t>(trial) % options.sigma_sizes.size()];
      const std::string symbols = alphabet.symbols().substr(0, static_cast<std::size_t>(size));
      std::uniform_int_distribution<std::int32_t> len(0, options.max_len);
      std::uniform_int_distribution<std::int32_t> count(0, options.max_ops);
      const std::string a = random_string(rng, len(rng), symbols);
      const std::string b = random_string(rng, len(rng), symbols);
      const std::vector<Op> ops = random_ops(rng, options.kind, count(rng), symbols, symbols);
      total_ops += static_cast<std::int64_t>(ops.size());
      if (auto report = replay_checked(options.kind, a, b, ops, alphabet, options.corrupt_after)) {
        err << "mismatch in trial " << trial << ": " << *report << '\n' << "ops:\n" << format_ops(ops);
        return kExitMismatch;
      }
    }
    out << "ok: " << state_kind_name(options.kind) << ", " << *options.fuzz_trials << " trials, " << total_ops
        << " ops verified (seed " << options.seed << ")\n";
    return kExitOk;
  });
}

int cmd_query(MatrixKind kind, std::istream& dump, std::int32_t i, std::int32_t j, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    // A JOINT dump holds an SSAM section then a PSAM section.
    for (int section = 0; section < 2; ++section) {
      const PivotSet p = parse_pivot_dump(dump);
      if (p.kind != kind) continue;
      out << (kind == MatrixKind::Ssam ? score_ssam(p, i, j) : score_psam(p, i, j)) << '\n';
      return kExitOk;
    }
    throw UsageError("dump has no " + std::string(kind_name(kind)) + " section");
  });
}

std::string format_bench_record(const BenchRecord& r) {
  std::ostringstream out;
  out << r.op_index << ',' << op_name(r.op_kind) << ',' << r.n << ',' << r.m << ',' << r.L << ',' << r.Delta << ','
      << r.touched_pivots << ',' << r.table_queries << ',' << r.wall_nanos;
  return out.str();
}

bool within_bounds(StateKind kind, const BenchRecord& r) {
  const bool updates_k = kind == StateKind::Ssam || (kind == StateKind::Joint && r.op_kind == OpKind::AppendA);
  const std::int64_t s = updates_k ? r.Delta : r.L;
  return r.touched_pivots <= 4 * (s + 1) && r.table_queries <= 2 * (s + 1) + 8;
}

Generator parse_generator(std::string_view text) {
  if (text == "random") return Generator::Random;
  if (text == "similar") return Generator::Similar;
  if (text == "disjoint") return Generator::Disjoint;
  throw UsageError("unknown generator '" + std::string(text) + "' (expected random, similar or disjoint)");
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  if (options.n < 0 || options.m < 0 || options.ops < 0) throw UsageError("bench sizes must be non-negative");
  if (options.sigma < 1 || options.sigma > 26) throw UsageError("--sigma must be in [1, 26]");
  if (options.generator == Generator::Disjoint && options.sigma < 2) {
    throw UsageError("the disjoint generator needs --sigma >= 2");
  }
  const Alphabet alphabet = Alphabet::lowercase();
  const std::string all = alphabet.symbols().substr(0, static_cast<std::size_t>(options.sigma));
  std::mt19937_64 rng(options.seed);

  std::string a_symbols = all;
  std::string b_symbols = all;
  std::string a;
  std::string b;
  switch (options.generator) {
    case Generator::Random:
      a = random_string(rng, options.m, all);
      b = random_string(rng, options.n, all);
      break;
    case Generator::Similar: {
      b = random_string(rng, options.n, all);
      a = b.substr(0, std::min<std::size_t>(b.size(), static_cast<std::size_t>(options.m)));
      a += random_string(rng, options.m - static_cast<std::int32_t>(a.size()), all);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      std::bernoulli_distribution mutate(0.05);
      for (char& ch : a) {
        if (mutate(rng)) ch = all[pick(rng)];
      }
      break;
    }
    case Generator::Disjoint: {
      const std::size_t half = all.size() / 2;
      a_symbols = all.substr(0, half);
      b_symbols = all.substr(half);
      a = random_string(rng, options.m, a_symbols);
      b = random_string(rng, options.n, b_symbols);
      break;
    }
  }

  Engine engine(options.kind, a, b, alphabet);
  const std::vector<Op> ops = random_ops(rng, options.kind, options.ops, a_symbols, b_symbols);
  std::vector<BenchRecord> records;
  records.reserve(ops.size());
  for (std::size_t t = 0; t < ops.size(); ++t) {
    BenchRecord r;
    r.op_index = static_cast<std::int64_t>(t);
    r.op_kind = ops[t].kind;
    r.n = engine.n();
    r.m = engine.m();
    r.L = engine.lcs();
    r.Delta = engine.delta();
    const auto start = std::chrono::steady_clock::now();
    engine.apply(ops[t]);
    const auto stop = std::chrono::steady_clock::now();
    r.wall_nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    const OpCounters c = engine.last_counters();
    r.touched_pivots = c.touched_pivots;
    r.table_queries = c.table_queries;
    records.push_back(r);
  }
  return records;
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<BenchRecord> records = run_bench(options);
    out << kBenchHeader << '\n';
    std::int64_t violations = 0;
    std::int64_t total_nanos = 0;
    for (const BenchRecord& r : records) {
      out << format_bench_record(r) << '\n';
      if (!within_bounds(options.kind, r)) ++violations;
      total_nanos += r.wall_nanos;
    }
    err << "# bench summary: kind=" << state_kind_name(options.kind) << " ops=" << records.size()
        << " within_bounds=" << (static_cast<std::int64_t>(records.size()) - violations)
        << " violations=" << violations << " total_wall_nanos=" << total_nanos << '\n';
    return violations == 0 ? kExitOk : kExitMismatch;
  });
}

}  // namespace iasm::cli
