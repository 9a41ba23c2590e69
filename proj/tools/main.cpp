// blocklis: LCS bounds, exact lengths and estimates through the block-LIS
// reduction. Subcommands: exact, estimate, bounds, gen, bench. Reports are
// line-delimited JSON with a frozen field order; rationals stay {num, den}.
// Exit codes: 0 success, 2 usage/input error, 3 internal invariant violation.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "blocklis/counts.hpp"
#include "blocklis/estimator.hpp"
#include "blocklis/rational.hpp"
#include "blocklis/reduction.hpp"
#include "blocklis/report.hpp"
#include "blocklis/sequence.hpp"
#include "blocklis/solver.hpp"
#include "blocklis/workbench.hpp"

namespace {

using blocklis::Rational;
using blocklis::Sequence;
using blocklis::Symbol;
using blocklis::report::json;

// Bad input or bad invocation; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

std::int64_t us_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw UsageError("cannot read file '" + path + "'");
  return std::move(buffer).str();
}

std::string slurp_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return std::move(buffer).str();
}

struct Input {
  std::string path;
  std::string text;
};

// Two files, or a single "-" carrying both sequences on stdin (NUL-separated
// in bytes mode, blank-line-separated in token mode).
std::pair<Input, Input> load_texts(const std::vector<std::string>& inputs,
                                   const std::string& mode) {
  if (inputs.size() == 1) {
    if (inputs[0] != "-") {
      throw UsageError("provide two input paths, or a single '-' for stdin");
    }
    const std::string all = slurp_stdin();
    if (mode == "bytes") {
      auto nul = all.find('\0');
      if (nul == std::string::npos) {
        throw UsageError("stdin is missing the NUL byte separating the two sequences");
      }
      return {{"-", all.substr(0, nul)}, {"-", all.substr(nul + 1)}};
    }
    auto gap = all.find("\n\n");
    if (gap == std::string::npos) {
      throw UsageError("stdin is missing the blank line separating the two sequences");
    }
    return {{"-", all.substr(0, gap + 1)}, {"-", all.substr(gap + 2)}};
  }
  if (inputs[0] == "-" || inputs[1] == "-") {
    throw UsageError("use a single '-' to read both sequences from stdin");
  }
  return {{inputs[0], slurp_file(inputs[0])}, {inputs[1], slurp_file(inputs[1])}};
}

struct LoadedPair {
  Input a;
  Input b;
  Sequence x;
  Sequence y;
};

LoadedPair load_pair(const std::vector<std::string>& inputs, const std::string& mode) {
  LoadedPair pair;
  std::tie(pair.a, pair.b) = load_texts(inputs, mode);
  if (mode == "bytes") {
    pair.x = blocklis::sequence_from_bytes(pair.a.text);
    pair.y = blocklis::sequence_from_bytes(pair.b.text);
  } else {
    // One dictionary for both sides, so equal tokens get equal symbols.
    blocklis::TokenDictionary dict;
    pair.x = blocklis::tokenize(pair.a.text, dict);
    pair.y = blocklis::tokenize(pair.b.text, dict);
  }
  return pair;
}

json input_json(const Input& input, std::size_t length) {
  json j = json::object();
  j["path"] = input.path;
  j["length"] = length;
  return j;
}

json report_head(const char* command, const std::string& mode, const LoadedPair& pair) {
  json j = json::object();
  j["schema_version"] = blocklis::report::kSchemaVersion;
  j["command"] = command;
  j["mode"] = mode;
  j["input_a"] = input_json(pair.a, pair.x.size());
  j["input_b"] = input_json(pair.b, pair.y.size());
  return j;
}

void emit(const json& j, const std::string& out_path) {
  const std::string line = blocklis::report::to_line(j);
  if (out_path.empty()) {
    std::cout << line;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write file '" + out_path + "'");
  out << line;
  if (!out) throw UsageError("cannot write file '" + out_path + "'");
}

Rational parse_rate(const std::string& text) {
  Rational rate = blocklis::parse_rational(text);  // accepts "a/b", decimals, integers
  if (rate.num == 0 || rate.num > rate.den) {
    throw UsageError("rate must be in (0, 1], got '" + text + "'");
  }
  return rate;
}

// Per-subcommand option bundle; CLI11 fills it, callbacks consume it.
struct Options {
  std::vector<std::string> inputs;
  std::string mode = "bytes";
  std::string rate_text = "1";
  std::uint64_t seed = 0;
  bool certificate = false;
  bool timings = false;
  std::string out_path;

  std::string family;
  std::uint64_t n = 0;
  std::uint32_t sigma = 1;
  std::uint64_t planted_len = 0;
  std::vector<std::string> gen_outputs;

  std::string config_path;
  int jobs = 1;
  std::uint64_t dp_guard = blocklis::kDefaultDpGuard;
  bool jobs_given = false;
  bool dp_guard_given = false;
};

void run_bounds(const Options& opt) {
  const auto start = Clock::now();
  const LoadedPair pair = load_pair(opt.inputs, opt.mode);
  const blocklis::CountVector cx = blocklis::CountVector::of(pair.x);
  const blocklis::CountVector cy = blocklis::CountVector::of(pair.y);
  const std::uint64_t matches = blocklis::inner_product(cx, cy);
  const Rational d = blocklis::match_lower_bound_d(matches, pair.x.size(), pair.y.size());

  json j = report_head("bounds", opt.mode, pair);
  j["match_count"] = matches;
  j["d"] = blocklis::report::rational_json(d);
  j["d_ceil"] = d.ceil();
  j["min_count_bound"] = blocklis::min_count_lower_bound(cx, cy);
  j["holder_bound"] = blocklis::holder_bound(cx, cy);
  if (opt.timings) {
    json times = json::object();
    times["total"] = us_since(start);
    j["elapsed_us"] = times;
  }
  emit(j, opt.out_path);
}

void run_exact(const Options& opt) {
  const auto start = Clock::now();
  const LoadedPair pair = load_pair(opt.inputs, opt.mode);

  auto stage = Clock::now();
  const blocklis::OccurrenceIndex index = blocklis::OccurrenceIndex::of(pair.y);
  const std::int64_t index_us = us_since(stage);

  stage = Clock::now();
  const blocklis::BlockSequence z = blocklis::BlockSequence::from_strings(pair.x, index);
  const Rational d =
      blocklis::match_lower_bound_d(z.match_count(), pair.x.size(), pair.y.size());
  const std::int64_t reduce_us = us_since(stage);

  stage = Clock::now();
  const blocklis::BlockLisResult result = blocklis::exact_block_lis(z, opt.certificate);
  const std::int64_t solve_us = us_since(stage);

  json j = report_head("exact", opt.mode, pair);
  j["match_count"] = z.match_count();
  j["d"] = blocklis::report::rational_json(d);
  j["d_ceil"] = d.ceil();
  j["length"] = result.length;
  if (opt.certificate) {
    if (!result.certificate ||
        !blocklis::verify_certificate(pair.x, pair.y, *result.certificate, result.length)) {
      throw std::logic_error("emitted certificate failed verification");
    }
    j["certificate"] = blocklis::report::certificate_json(*result.certificate);
  }
  if (opt.timings) {
    json times = json::object();
    times["index"] = index_us;
    times["reduce"] = reduce_us;
    times["solve"] = solve_us;
    times["total"] = us_since(start);
    j["elapsed_us"] = times;
  }
  emit(j, opt.out_path);
}

void run_estimate(const Options& opt) {
  const LoadedPair pair = load_pair(opt.inputs, opt.mode);
  blocklis::EstimatorParams params;
  params.subsample_rate = parse_rate(opt.rate_text);
  params.seed = opt.seed;
  const blocklis::LcsEstimate est =
      blocklis::approximate_lcs(pair.x, pair.y, blocklis::exact_solver_spec(), params);

  json j = report_head("estimate", opt.mode, pair);
  j["rate"] = blocklis::report::rational_json(est.rate);
  j["seed"] = est.seed;
  j["subsample_size"] = est.subsample_size;
  j["n_x"] = est.n_x;
  j["n_y"] = est.n_y;
  j["match_count"] = est.match_count;
  j["d"] = blocklis::report::rational_json(est.d);
  j["d_ceil"] = est.d_ceil;
  j["solver_output"] = est.solver_output;
  j["estimate"] = est.estimate;
  if (opt.timings) {
    json times = json::object();
    times["sample"] = est.elapsed.sample_us;
    times["index"] = est.elapsed.index_us;
    times["reduce"] = est.elapsed.reduce_us;
    times["solve"] = est.elapsed.solve_us;
    times["total"] = est.elapsed.total_us;
    j["elapsed_us"] = times;
  }
  emit(j, opt.out_path);
}

// Encoded form of generated sequences, shared by both output files:
//   letters  ids <= 158   one byte 'a' + id per symbol
//   bytes    ids <= 255   one raw byte per symbol
//   tokens   otherwise    space-separated decimal ids (read back with --mode tokens)
std::string encode_sequence(const Sequence& s, const std::string& encoding) {
  std::string out;
  if (encoding == "tokens") {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(s[i]);
    }
    if (!s.empty()) out += '\n';
    return out;
  }
  const Symbol base = encoding == "letters" ? 'a' : 0;
  out.reserve(s.size());
  for (Symbol c : s) out += static_cast<char>(base + c);
  return out;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write file '" + path + "'");
  out << data;
  if (!out) throw UsageError("cannot write file '" + path + "'");
}

void run_gen(const Options& opt) {
  blocklis::InstanceFamily family;
  family.kind = blocklis::family_kind_from_string(opt.family);
  family.n = opt.n;
  family.sigma = opt.sigma;
  family.planted_len = opt.planted_len;
  family.seed = opt.seed;
  const auto [x, y] = blocklis::generate(family);

  Symbol max_id = 0;
  for (Symbol c : x) max_id = std::max(max_id, c);
  for (Symbol c : y) max_id = std::max(max_id, c);
  const std::string encoding =
      max_id <= 158 ? "letters" : (max_id <= 255 ? "bytes" : "tokens");

  write_file(opt.gen_outputs[0], encode_sequence(x, encoding));
  write_file(opt.gen_outputs[1], encode_sequence(y, encoding));

  json j = json::object();
  j["schema_version"] = blocklis::report::kSchemaVersion;
  j["command"] = "gen";
  j["family"] = blocklis::report::family_json(family);
  j["encoding"] = encoding;
  j["read_mode"] = encoding == "tokens" ? "tokens" : "bytes";
  json out_a = json::object();
  out_a["path"] = opt.gen_outputs[0];
  out_a["length"] = x.size();
  j["out_a"] = out_a;
  json out_b = json::object();
  out_b["path"] = opt.gen_outputs[1];
  out_b["length"] = y.size();
  j["out_b"] = out_b;
  emit(j, "");
}

void run_bench(const Options& opt) {
  json config_json;
  try {
    config_json = blocklis::report::parse_line(slurp_file(opt.config_path));
  } catch (const json::exception& e) {
    throw UsageError("config '" + opt.config_path + "' is not valid JSON: " + e.what());
  }
  blocklis::SuiteConfig config = blocklis::report::suite_config_from_json(config_json);
  if (opt.jobs_given) config.jobs = opt.jobs;
  if (opt.dp_guard_given) config.dp_guard = opt.dp_guard;
  if (config.jobs < 1) throw UsageError("--jobs must be >= 1");

  const std::vector<blocklis::BenchRecord> records = blocklis::run_suite(config);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write file '" + opt.out_path + "'");
    out = &file;
  }
  for (const auto& record : records) {
    *out << blocklis::report::to_line(blocklis::report::bench_record_json(record));
  }
  if (out == &file && !file) throw UsageError("cannot write file '" + opt.out_path + "'");

  json j = json::object();
  j["schema_version"] = blocklis::report::kSchemaVersion;
  j["command"] = "bench";
  j["config"] = opt.config_path;
  j["records"] = records.size();
  j["out"] = opt.out_path.empty() ? "-" : opt.out_path;
  // The summary goes to stdout even when records stream to a file.
  std::cout << blocklis::report::to_line(j);
}

void add_pair_inputs(CLI::App* cmd, Options& opt) {
  cmd->add_option("inputs", opt.inputs,
                  "two input files, or '-' to read both sequences from stdin")
      ->expected(1, 2)
      ->required();
  cmd->add_option("--mode", opt.mode, "input alphabet: raw bytes or whitespace tokens")
      ->check(CLI::IsMember({"bytes", "tokens"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out_path, "write the report here instead of stdout");
  cmd->add_flag("--timings", opt.timings, "include wall-clock stage times in the report");
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"LCS lower bounds, exact lengths and estimates via block-LIS"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* bounds = app.add_subcommand("bounds", "match-count lower bounds, no solver run");
  add_pair_inputs(bounds, opt);
  bounds->callback([&] { run_bounds(opt); });

  CLI::App* exact = app.add_subcommand("exact", "exact LCS length through block-LIS");
  add_pair_inputs(exact, opt);
  exact->add_flag("--certificate", opt.certificate,
                  "emit a verified monotone (i, j) witness of the length");
  exact->callback([&] { run_exact(opt); });

  CLI::App* estimate = app.add_subcommand("estimate", "LCS estimate, optionally subsampled");
  add_pair_inputs(estimate, opt);
  estimate->add_option("--rate", opt.rate_text,
                       "i.i.d. index-keep probability in (0, 1], as a/b or decimal")
      ->capture_default_str();
  estimate->add_option("--seed", opt.seed, "subsampling seed")
      ->envname("BLOCKLIS_SEED");
  estimate->callback([&] { run_estimate(opt); });

  CLI::App* gen = app.add_subcommand("gen", "generate a benchmark instance pair");
  gen->add_option("--family", opt.family, "random | permutation | planted | repeated")
      ->required();
  gen->add_option("--n", opt.n, "length of each sequence")->required();
  gen->add_option("--sigma", opt.sigma, "alphabet size (random/planted)")
      ->capture_default_str();
  gen->add_option("--planted-len", opt.planted_len, "embedded common subsequence length");
  gen->add_option("--seed", opt.seed, "generator seed")->envname("BLOCKLIS_SEED");
  gen->add_option("outputs", opt.gen_outputs, "the two output paths")
      ->expected(2)
      ->required();
  gen->callback([&] { run_gen(opt); });

  CLI::App* bench = app.add_subcommand("bench", "run a (family x method) suite from a config");
  bench->add_option("config", opt.config_path, "suite config JSON path")->required();
  bench->add_option("--out", opt.out_path, "stream records here instead of stdout");
  bench->add_option("--jobs", opt.jobs, "parallel cells (overrides the config)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--dp-guard", opt.dp_guard,
                    "max DP table cells for truth values (overrides the config)");
  bench->callback([&] {
    opt.jobs_given = bench->count("--jobs") > 0;
    opt.dp_guard_given = bench->count("--dp-guard") > 0;
    run_bench(opt);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
