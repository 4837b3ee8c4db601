// Copyright 2026 The psyn developers
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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psyn/io.hpp"
#include "psyn/oracle.hpp"
#include "psyn/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // compile or verification failure
constexpr int kExitUsage = 2;    // usage or IO error

psyn::Strategy strategy_from_name(const std::string &name) {
  return name == "naive" ? psyn::Strategy::naive : psyn::Strategy::sets;
}

psyn::GadgetForm mode_from_name(const std::string &name) {
  return name == "tree" ? psyn::GadgetForm::tree : psyn::GadgetForm::ladder;
}

nlohmann::json report_to_json(
    const psyn::CompileReport &report, const std::string &strategy,
    const std::string &mode) {
  return nlohmann::json{
      {"n_qubits", report.n_qubits},
      {"n_terms", report.n_terms},
      {"strategy", strategy},
      {"mode", mode},
      {"cx_count", report.cx_count},
      {"cx_depth", report.cx_depth},
      {"set_count", report.set_count},
      {"clifford_cx_total", report.clifford_cx_total},
      {"wall_time_ms", report.wall_time_ms},
      {"global_phase_angle", report.global_phase_angle},
  };
}

int run_compile(
    const std::string &input, const std::string &strategy,
    const std::string &mode, const std::string &out_path,
    const std::string &stats_path, bool verify) {
  psyn::OperatorData data;
  try {
    data = psyn::load_operator(input);
  } catch (const psyn::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  psyn::CompileOptions options;
  options.mode = mode_from_name(mode);
  options.n_qubits = data.n_qubits;
  psyn::CompileResult result;
  try {
    result = psyn::compile(data.terms, strategy_from_name(strategy), options);
  } catch (const std::exception &e) {
    std::cerr << "compilation failed: " << e.what() << "\n";
    return kExitFailure;
  }

  if (verify) {
    if (data.n_qubits > 10) {
      std::cerr << "error: --verify supports at most 10 qubits\n";
      return kExitUsage;
    }
    psyn::UnitaryMatrix expected = psyn::unitary_of_terms(
        data.n_qubits, psyn::sequence_terms(data.terms));
    psyn::UnitaryMatrix actual = psyn::unitary_of_circuit(result.circuit);
    if (!psyn::equiv_up_to_phase(actual, expected, 1e-9)) {
      std::cerr << "verification FAILED: circuit is not equivalent to the "
                   "term product\n";
      return kExitFailure;
    }
    std::cout << "verified: circuit matches the term product up to global "
                 "phase (1e-9)\n";
  }

  try {
    if (!out_path.empty()) psyn::emit_qasm(result.circuit, out_path);
    if (!stats_path.empty()) {
      std::ofstream out(stats_path);
      if (!out) throw psyn::ParseError("cannot write file: " + stats_path);
      out << report_to_json(result.report, strategy, mode).dump(2) << "\n";
    }
  } catch (const psyn::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const psyn::CompileReport &r = result.report;
  std::cout << input << ": strategy=" << strategy << " n_qubits=" << r.n_qubits
            << " n_terms=" << r.n_terms << " cx_count=" << r.cx_count
            << " cx_depth=" << r.cx_depth << " sets=" << r.set_count
            << " clifford_cx=" << r.clifford_cx_total << "\n";
  return kExitOk;
}

struct BenchRow {
  std::string file;
  psyn::CompileReport report;
  std::string strategy;
  std::optional<double> count_reduction;
  std::optional<double> depth_reduction;
};

int run_bench(
    const std::string &dir, const std::string &out_csv,
    const std::string &mode) {
  std::vector<fs::path> files;
  try {
    for (const auto &entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
  } catch (const fs::filesystem_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "error: no .json operator files in " << dir << "\n";
    return kExitUsage;
  }

  std::vector<BenchRow> rows;
  std::vector<double> count_reductions, depth_reductions;
  unsigned failures = 0;
  for (const fs::path &file : files) {
    try {
      psyn::OperatorData data = psyn::load_operator(file.string());
      psyn::CompileOptions options;
      options.mode = mode_from_name(mode);
      options.n_qubits = data.n_qubits;
      psyn::CompileResult naive =
          psyn::compile(data.terms, psyn::Strategy::naive, options);
      psyn::CompileResult sets =
          psyn::compile(data.terms, psyn::Strategy::sets, options);
      double count_red =
          naive.report.cx_count == 0
              ? 0.0
              : 100.0 * (1.0 - static_cast<double>(sets.report.cx_count) /
                                   naive.report.cx_count);
      double depth_red =
          naive.report.cx_depth == 0
              ? 0.0
              : 100.0 * (1.0 - static_cast<double>(sets.report.cx_depth) /
                                   naive.report.cx_depth);
      rows.push_back(
          {file.filename().string(), naive.report, "naive", {}, {}});
      rows.push_back(
          {file.filename().string(), sets.report, "sets", count_red,
           depth_red});
      count_reductions.push_back(count_red);
      depth_reductions.push_back(depth_red);
    } catch (const std::exception &e) {
      std::cerr << file.string() << ": " << e.what() << "\n";
      ++failures;
    }
  }

  std::ofstream out(out_csv);
  if (!out) {
    std::cerr << "error: cannot write " << out_csv << "\n";
    return kExitUsage;
  }
  out << "file,n_qubits,n_terms,strategy,cx_count,cx_depth,set_count,"
         "clifford_cx_total,wall_time_ms,cx_count_reduction_pct,"
         "cx_depth_reduction_pct\n";
  for (const BenchRow &row : rows) {
    out << row.file << ',' << row.report.n_qubits << ',' << row.report.n_terms
        << ',' << row.strategy << ',' << row.report.cx_count << ','
        << row.report.cx_depth << ',' << row.report.set_count << ','
        << row.report.clifford_cx_total << ',' << row.report.wall_time_ms;
    if (row.count_reduction) {
      out << ',' << *row.count_reduction << ',' << *row.depth_reduction;
    } else {
      out << ",,";
    }
    out << '\n';
  }

  if (!count_reductions.empty()) {
    auto mean = [](const std::vector<double> &v) {
      double total = 0.0;
      for (double x : v) total += x;
      return total / static_cast<double>(v.size());
    };
    std::cout << "files compiled: " << count_reductions.size() << " (of "
              << files.size() << ")\n";
    std::cout << "Mean CX count reduction (%): " << mean(count_reductions)
              << "\n";
    std::cout << "Mean CX depth reduction (%): " << mean(depth_reductions)
              << "\n";
  }
  return failures == 0 ? kExitOk : kExitFailure;
}

int run_check(bool smoke) {
  psyn::CompatibilityCheckReport small = psyn::check_small_set_compatibility();
  std::cout << "small-set compatibility checker: "
            << (small.passed ? "PASS" : "FAIL") << " (" << small.detail
            << ")\n";
  psyn::CompatibilityCheckReport four =
      psyn::check_four_qubit_compatibility(!smoke);
  std::cout << "four-qubit compatibility checker: "
            << (four.passed ? "PASS" : "FAIL") << " (" << four.detail
            << ")\n";
  return small.passed && four.passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "psyn: compile Pauli exponential sequences to CX + single-qubit "
      "gates"};
  app.require_subcommand(1);

  std::string input, strategy, mode = "ladder", out_path, stats_path;
  bool verify = false;
  CLI::App *compile_cmd =
      app.add_subcommand("compile", "compile one operator file");
  compile_cmd->add_option("--input", input, "operator JSON file")->required();
  compile_cmd->add_option("--strategy", strategy, "naive or sets")
      ->required()
      ->check(CLI::IsMember({"naive", "sets"}));
  compile_cmd->add_option("--mode", mode, "phase gadget form (naive strategy)")
      ->check(CLI::IsMember({"ladder", "tree"}));
  compile_cmd->add_option("--out", out_path, "output OpenQASM path");
  compile_cmd->add_option("--stats", stats_path, "output stats JSON path");
  compile_cmd->add_flag(
      "--verify", verify, "check oracle equivalence (n_qubits <= 10)");

  std::string bench_dir, bench_csv, bench_mode = "ladder";
  CLI::App *bench_cmd = app.add_subcommand(
      "bench", "compile every operator in a directory with both strategies");
  bench_cmd->add_option("--dir", bench_dir, "operator directory")->required();
  bench_cmd->add_option("--out", bench_csv, "output CSV path")->required();
  bench_cmd->add_option("--mode", bench_mode, "phase gadget form for naive")
      ->check(CLI::IsMember({"ladder", "tree"}));

  bool smoke = false;
  CLI::App *check_cmd = app.add_subcommand(
      "check", "run the diagonalisation enumeration checkers");
  check_cmd->add_flag(
      "--smoke", smoke,
      "sample the four-qubit enumeration instead of running it in full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (compile_cmd->parsed()) {
    return run_compile(input, strategy, mode, out_path, stats_path, verify);
  }
  if (bench_cmd->parsed()) {
    return run_bench(bench_dir, bench_csv, bench_mode);
  }
  return run_check(smoke);
}
