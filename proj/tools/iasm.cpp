// iasm: build, replay, verify, query and benchmark incremental LCS pivot encodings.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "iasm/cli.hpp"
#include "iasm/errors.hpp"

using namespace iasm;

int main(int argc, char** argv) {
  CLI::App app{"Incremental all-substrings / suffix-prefix LCS pivot encodings"};
  app.require_subcommand(1);
  std::string alphabet_text = Alphabet::lowercase().symbols();
  app.add_option("--alphabet", alphabet_text, "Symbols allowed in strings and ops (default a-z)");

  std::string kind_text;
  std::string a_arg;
  std::string b_arg;

  auto* build = app.add_subcommand("build", "Print the pivot dump of a freshly built state");
  build->add_option("kind", kind_text, "SSAM, PSAM or JOINT")->required();
  build->add_option("A", a_arg, "String A, or @file")->required();
  build->add_option("B", b_arg, "String B, or @file")->required();

  std::string ops_path;
  bool trace = false;
  auto* apply = app.add_subcommand("apply", "Replay an ops file and print the final dump");
  apply->add_option("kind", kind_text, "SSAM, PSAM or JOINT")->required();
  apply->add_option("A", a_arg, "String A, or @file")->required();
  apply->add_option("B", b_arg, "String B, or @file")->required();
  apply->add_option("ops", ops_path, "Ops file: one 'PA x' / 'AA x' / 'AB x' per line")->required();
  apply->add_flag("--trace", trace, "Print a dump after every op");

  cli::VerifyOptions verify_options;
  std::vector<std::uint64_t> fuzz_args;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Cross-check the dynamic state against the oracle after every op");
  verify->add_option("kind", kind_text, "SSAM, PSAM or JOINT")->required();
  verify->add_option("A", a_arg, "String A, or @file");
  verify->add_option("B", b_arg, "String B, or @file");
  verify->add_option("--ops", verify_options.ops_path, "Ops file to replay");
  verify->add_option("--fuzz", fuzz_args, "TRIALS SEED: random strings and op streams instead")->expected(2);
  verify->add_option("--max-len", verify_options.max_len, "Fuzz: maximum initial |A| and |B|");
  verify->add_option("--max-ops", verify_options.max_ops, "Fuzz: maximum stream length");
  verify->add_option("--sigma", verify_options.sigma_sizes, "Fuzz: alphabet sizes, cycled over trials");
  verify->add_flag("--corrupt", corrupt, "Corrupt the state before checking (negative control)");

  std::string dump_path;
  std::int32_t qi = 0;
  std::int32_t qj = 0;
  auto* query = app.add_subcommand("query", "Score of cell (i, j) from a pivot dump");
  query->add_option("kind", kind_text, "SSAM or PSAM")->required();
  query->add_option("dump", dump_path, "Pivot dump file ('-' for stdin)")->required();
  query->add_option("i", qi)->required();
  query->add_option("j", qj)->required();

  cli::BenchOptions bench_options;
  std::string generator_text = "random";
  auto* bench = app.add_subcommand("bench", "Random op stream with per-op work counters as CSV");
  bench->add_option("kind", kind_text, "SSAM, PSAM or JOINT")->required();
  bench->add_option("--gen", generator_text, "random, similar or disjoint");
  bench->add_option("--n", bench_options.n, "Initial |B|");
  bench->add_option("--m", bench_options.m, "Initial |A|");
  bench->add_option("--sigma", bench_options.sigma, "Alphabet size (first letters of a-z)");
  bench->add_option("--ops", bench_options.ops, "Number of ops");
  bench->add_option("--seed", bench_options.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    const Alphabet alphabet(alphabet_text);
    if (build->parsed()) {
      return cli::cmd_build(cli::parse_state_kind(kind_text), cli::resolve_string_arg(a_arg),
                            cli::resolve_string_arg(b_arg), alphabet, std::cout, std::cerr);
    }
    if (apply->parsed()) {
      return cli::cmd_apply(cli::parse_state_kind(kind_text), cli::resolve_string_arg(a_arg),
                            cli::resolve_string_arg(b_arg), ops_path, trace, alphabet, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      verify_options.kind = cli::parse_state_kind(kind_text);
      verify_options.a = cli::resolve_string_arg(a_arg);
      verify_options.b = cli::resolve_string_arg(b_arg);
      if (!fuzz_args.empty()) {
        verify_options.fuzz_trials = static_cast<std::int64_t>(fuzz_args[0]);
        verify_options.seed = fuzz_args[1];
      }
      if (corrupt) verify_options.corrupt_after = 0;
      return cli::cmd_verify(verify_options, alphabet, std::cout, std::cerr);
    }
    if (query->parsed()) {
      const MatrixKind kind = parse_kind(kind_text);
      if (dump_path == "-") return cli::cmd_query(kind, std::cin, qi, qj, std::cout, std::cerr);
      std::ifstream in(dump_path);
      if (!in) throw UsageError("cannot open dump file '" + dump_path + "'");
      return cli::cmd_query(kind, in, qi, qj, std::cout, std::cerr);
    }
    bench_options.kind = cli::parse_state_kind(kind_text);
    bench_options.generator = cli::parse_generator(generator_text);
    return cli::cmd_bench(bench_options, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    // UsageError and IngestionError raised before a command took over.
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
}
