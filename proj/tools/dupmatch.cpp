// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve, gen, verify, ratio, bench.
//
// Exit codes: 0 success, 1 I/O failure, 2 malformed input or usage error,
// 3 certification failure, 4 enumeration cap exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dupmatch/extension.hpp"
#include "dupmatch/generator.hpp"
#include "dupmatch/json_io.hpp"
#include "dupmatch/solver.hpp"
#include "dupmatch/verify.hpp"

namespace {

using namespace dupmatch;

constexpr int kExitIo = 1;
constexpr int kExitInput = 2;
constexpr int kExitCertification = 3;
constexpr int kExitCap = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(what + " is not valid JSON: " + e.what());
  }
}

void add_generator_options(CLI::App* cmd, GeneratorParams& params) {
  cmd->add_option("--u", params.u_count, "Vertices on the U side");
  cmd->add_option("--w", params.w_count, "Vertices on the W side");
  cmd->add_option("--edges", params.edge_count, "Edge count");
  cmd->add_option("--p-max", params.p_max, "Largest preference value");
  cmd->add_option("--crit-vertex-prob", params.crit_vertex_prob,
                  "Probability that a vertex is critical");
  cmd->add_option("--crit-edge-prob", params.crit_edge_prob,
                  "Probability that an edge is critical");
  cmd->add_option("--capacity-max", params.capacity_max,
                  "Largest vertex capacity");
  cmd->add_option("--free-edge-prob", params.free_edge_prob,
                  "Probability that an edge has infinite thresholds");
}

struct SolveArgs {
  std::string input = "-";
  std::string output;
  std::string engine = "auto";
  std::string construction = "auto";
  bool certify = false;
  bool timing = false;
  std::string dump_extended;
  bool dump_requested = false;
  std::size_t cap = kDefaultEnumerationCap;
};

int run_solve(const SolveArgs& args) {
  const Instance instance = parse_instance(read_file(args.input));
  SolveOptions options;
  options.engine = parse_engine(args.engine);
  options.construction = parse_construction(args.construction);

  const auto start = std::chrono::steady_clock::now();
  const SolveResult result = solve(instance, options);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  nlohmann::json report = solve_report_json(result);
  if (args.timing) {
    report["elapsed_ns"] =
        std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
  }
  if (args.dump_requested) {
    const std::string dump = dump_extended(result.extended);
    if (args.dump_extended.empty() || args.dump_extended == "-") {
      std::cerr << dump;
    } else {
      std::ofstream out(args.dump_extended, std::ios::binary);
      if (!out || !(out << dump)) throw IoError("cannot write " + args.dump_extended);
    }
  }
  int code = 0;
  if (args.certify) {
    const Certificate cert = certify(instance, result.matching, args.cap);
    report["certificate"] = certificate_to_json(cert);
    if (!cert.is_cgamma_stable) {
      std::cerr << "certification failed\n";
      code = kExitCertification;
    }
  }
  write_output(args.output, dump_canonical(report));
  return code;
}

int run_gen(std::uint64_t seed, const GeneratorParams& params,
            const std::string& output) {
  write_output(output, serialize_instance(generate(seed, params)));
  return 0;
}

int run_verify(const std::string& instance_path,
               const std::string& matching_path, std::size_t cap) {
  const Instance instance = parse_instance(read_file(instance_path));
  const Matching m = matching_from_json(
      parse_json(read_file(matching_path), "matching file"));
  for (int id : m.edge_ids) {
    if (id < 0 || id >= static_cast<int>(instance.edges.size())) {
      throw std::invalid_argument("matching mentions unknown edge " +
                                  std::to_string(id));
    }
  }
  const Certificate cert = certify(instance, m, cap);
  std::cout << dump_canonical(certificate_to_json(cert));
  return cert.is_cgamma_stable ? 0 : kExitCertification;
}

int run_ratio(std::size_t seeds, const GeneratorParams& params,
              const RatioOptions& options, const std::string& output) {
  const std::vector<RatioReport> reports =
      ratio_harness(seeds, params, options);
  nlohmann::json rows = nlohmann::json::array();
  std::size_t failures = 0;
  const RatioReport* first_failure = nullptr;
  for (const RatioReport& r : reports) {
    rows.push_back(ratio_report_to_json(r));
    if (!r.ok()) {
      ++failures;
      if (first_failure == nullptr) first_failure = &r;
    }
  }
  nlohmann::json summary = {{"seeds", reports.size()},
                            {"failures", failures},
                            {"reports", rows}};
  write_output(output, dump_canonical(summary));
  if (first_failure != nullptr) {
    const Instance failing = generate(first_failure->seed, params);
    const Instance small = minimize_failure(failing, [&](const Instance& i) {
      return !check_instance(i, options.cap).ok();
    });
    std::cerr << "seed " << first_failure->seed
              << " fails; minimized instance:\n"
              << serialize_instance(small);
    return kExitCertification;
  }
  std::cerr << reports.size() << " seeds, no violations\n";
  return 0;
}

// "1000,10000" -> {1000, 10000}; empty tokens are skipped.
std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int size = 0;
    try {
      size = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || size < 1) {
      throw std::invalid_argument("bad size '" + token + "'");
    }
    out.push_back(size);
  }
  return out;
}

int run_bench(const std::vector<int>& sizes, int repeats,
              double crit_vertex_prob, std::uint64_t seed) {
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  std::cout << "size,copies,nanos\n";
  for (int size : sizes) {
    GeneratorParams params;
    params.edge_count = size;
    params.u_count = std::max(1, size / 4);
    params.w_count = std::max(1, size / 4);
    params.crit_vertex_prob = crit_vertex_prob;
    params.p_max = 100;
    const Instance instance = generate(seed, params);
    for (int r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const SolveResult result = solve(instance);
      const auto nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
      std::cout << size << ',' << result.extended.copies.size() << ','
                << nanos << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable matchings with criticality and thresholded blocking"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("--input,-i", solve_args.input,
                        "Instance JSON ('-' for stdin)");
  solve_cmd->add_option("--output,-o", solve_args.output, "Report path");
  solve_cmd->add_option("--engine", solve_args.engine, "auto, gs or kernel")
      ->check(CLI::IsMember({"auto", "gs", "kernel"}));
  solve_cmd
      ->add_option("--construction", solve_args.construction,
                   "auto, simple or general")
      ->check(CLI::IsMember({"auto", "simple", "general"}));
  solve_cmd->add_flag("--certify", solve_args.certify,
                      "Certify the result by enumeration");
  solve_cmd->add_flag("--timing", solve_args.timing,
                      "Add elapsed_ns to the report");
  auto* dump_opt = solve_cmd
      ->add_option("--dump-extended", solve_args.dump_extended,
                   "Write the copy rankings (default stderr)")
      ->expected(0, 1);
  solve_cmd->add_option("--cap", solve_args.cap, "Enumeration cap for --certify");

  std::uint64_t gen_seed = 0;
  GeneratorParams gen_params;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  add_generator_options(gen_cmd, gen_params);
  gen_cmd->add_option("--output,-o", gen_output, "Instance path");

  std::string verify_instance, verify_matching;
  std::size_t verify_cap = kDefaultEnumerationCap;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a matching");
  verify_cmd->add_option("--instance", verify_instance, "Instance JSON")
      ->required();
  verify_cmd->add_option("--matching", verify_matching, "Matching JSON")
      ->required();
  verify_cmd->add_option("--cap", verify_cap, "Enumeration cap");

  std::size_t ratio_seeds = 100;
  GeneratorParams ratio_params;
  RatioOptions ratio_options;
  std::string ratio_output;
  auto* ratio_cmd =
      app.add_subcommand("ratio", "Check random instances against brute force");
  ratio_cmd->add_option("--seeds", ratio_seeds, "Number of seeds");
  ratio_cmd->add_option("--first-seed", ratio_options.first_seed, "First seed");
  ratio_cmd->add_option("--cap", ratio_options.cap, "Enumeration cap");
  ratio_cmd->add_option("--threads", ratio_options.threads,
                        "Worker threads (0 = all cores)");
  ratio_cmd->add_option("--output,-o", ratio_output, "Report path");
  add_generator_options(ratio_cmd, ratio_params);

  std::string bench_sizes = "1000,10000,100000";
  int bench_repeats = 3;
  double bench_crit = 0.0;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time solve on growing inputs");
  bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated edge counts");
  bench_cmd->add_option("--repeats", bench_repeats, "Runs per size");
  bench_cmd->add_option("--crit-vertex-prob", bench_crit,
                        "Probability that a vertex is critical");
  bench_cmd->add_option("--seed", bench_seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve_cmd) {
      solve_args.dump_requested = dump_opt->count() > 0;
      return run_solve(solve_args);
    }
    if (*gen_cmd) {
      check_params(gen_params);
      return run_gen(gen_seed, gen_params, gen_output);
    }
    if (*verify_cmd) {
      return run_verify(verify_instance, verify_matching, verify_cap);
    }
    if (*ratio_cmd) {
      return run_ratio(ratio_seeds, ratio_params, ratio_options, ratio_output);
    }
    if (*bench_cmd) {
      return run_bench(parse_sizes(bench_sizes), bench_repeats, bench_crit,
                       bench_seed);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
