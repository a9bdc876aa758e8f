// Copyright 2026 The Qudual Authors.
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

// qudual command-line tool. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 I/O error.
// Standard output carries exactly one JSON document on success; all
// diagnostics go to standard error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qudual/qudual.h"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kIo = 3 };

struct CliError {
  int code;
  std::string message;
};

struct StateDeleter {
  void operator()(qd_state* s) const { qd_state_free(s); }
};
struct CircuitDeleter {
  void operator()(qd_circuit* c) const { qd_circuit_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { qd_string_free(s); }
};
using StatePtr = std::unique_ptr<qd_state, StateDeleter>;
using CircuitPtr = std::unique_ptr<qd_circuit, CircuitDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Invalid arguments are usage errors; everything else the library rejects is
// a validation error.
int exit_code_for(qd_status status) {
  return status == QD_ERR_INVALID_ARGUMENT ? kUsage : kValidation;
}

void check(qd_status status, const std::string& context) {
  if (status != QD_OK) {
    throw CliError{exit_code_for(status), context + ": " + qd_last_error()};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kIo, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CliError{kIo, "cannot read " + path};
  return buf.str();
}

void emit(StringPtr json) {
  std::fwrite(json.get(), 1, std::strlen(json.get()), stdout);
  std::fflush(stdout);
}

std::vector<int> parse_digits(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw CliError{kUsage, std::string(flag) + ": malformed digit list \"" + text + "\""};
    }
    out.push_back(v);
  }
  if (out.empty()) throw CliError{kUsage, std::string(flag) + ": empty digit list"};
  return out;
}

StatePtr load_state(const std::string& path) {
  const auto text = read_file(path);
  qd_state* raw = nullptr;
  const auto status = qd_state_from_json(text.c_str(), &raw);
  if (status != QD_OK) {
    throw CliError{kValidation, path + ": " + qd_last_error()};
  }
  return StatePtr(raw);
}

StringPtr state_json(const qd_state* s) {
  char* out = nullptr;
  check(qd_state_to_json(s, &out), "serialize state");
  return StringPtr(out);
}

int cmd_transform(const std::string& in, const std::string& to) {
  const auto state = load_state(in);
  qd_state* raw = nullptr;
  check(qd_transform(state.get(), to == "q" ? QD_REP_Q : QD_REP_K, &raw), "transform");
  const StatePtr out(raw);
  emit(state_json(out.get()));
  return kOk;
}

int cmd_planewave(int n, int d, const std::string& k) {
  const auto digits = parse_digits(k, "--k");
  qd_state* raw = nullptr;
  check(qd_planewave(n, d, digits.data(), digits.size(), &raw), "planewave");
  const StatePtr out(raw);
  emit(state_json(out.get()));
  return kOk;
}

int cmd_partition(int n, int d, const std::string& k) {
  const auto digits = parse_digits(k, "--k");
  char* raw = nullptr;
  check(qd_partition_json(n, d, digits.data(), digits.size(), &raw), "partition");
  emit(StringPtr(raw));
  return kOk;
}

int cmd_functional(int d, const std::string& handlers_path, const std::string& sources) {
  const auto digits = parse_digits(sources, "--sources");
  const auto handlers = load_state(handlers_path);
  if (qd_state_levels(handlers.get()) != d) {
    throw CliError{kValidation, "handler state has d=" +
                                    std::to_string(qd_state_levels(handlers.get())) +
                                    " but --d is " + std::to_string(d)};
  }
  if (static_cast<std::size_t>(qd_state_qudits(handlers.get())) != digits.size()) {
    throw CliError{kValidation, "handler state has " +
                                    std::to_string(qd_state_qudits(handlers.get())) +
                                    " qudits but " + std::to_string(digits.size()) +
                                    " source digits were given"};
  }
  char* raw = nullptr;
  check(qd_functional_json(handlers.get(), digits.data(), digits.size(), &raw),
        "functional");
  emit(StringPtr(raw));
  return kOk;
}

int cmd_run(const std::string& circuit_path, const std::string& in) {
  const auto text = read_file(circuit_path);
  const auto state = load_state(in);
  qd_circuit* raw_circuit = nullptr;
  if (qd_circuit_from_json(text.c_str(), &raw_circuit) != QD_OK) {
    throw CliError{kValidation, circuit_path + ": " + qd_last_error()};
  }
  const CircuitPtr circuit(raw_circuit);
  qd_state* raw = nullptr;
  const auto status = qd_run_circuit(circuit.get(), state.get(), &raw);
  if (status != QD_OK) throw CliError{kValidation, std::string("run: ") + qd_last_error()};
  const StatePtr out(raw);
  emit(state_json(out.get()));
  return kOk;
}

int cmd_analyze(const std::string& in) {
  const auto state = load_state(in);
  char* raw = nullptr;
  const auto status = qd_analyze_json(state.get(), &raw);
  if (status != QD_OK) throw CliError{kValidation, std::string("analyze: ") + qd_last_error()};
  emit(StringPtr(raw));
  return kOk;
}

int cmd_verify(int d, int n, std::uint64_t seed) {
  char* raw = nullptr;
  int passed = 0;
  check(qd_verify_json(d, n, seed, &raw, &passed), "verify");
  emit(StringPtr(raw));
  if (!passed) {
    std::cerr << "verify: one or more checks failed\n";
    return kValidation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit state/functional duality toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qd_version()));

  std::string in_path;
  std::string to;
  auto* transform = app.add_subcommand("transform", "Fourier transform a state file");
  transform->add_option("--in", in_path, "State JSON file")->required();
  transform->add_option("--to", to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"q", "k"}));

  int n = 0;
  int d = 0;
  std::string k;
  auto* planewave = app.add_subcommand("planewave", "Planewave of a basis functional");
  planewave->add_option("--n", n, "Number of qudits")->required();
  planewave->add_option("--d", d, "Levels per qudit")->required();
  planewave->add_option("--k", k, "Comma-separated functional digits")->required();

  auto* partition = app.add_subcommand("partition", "Basis partition induced by a functional");
  partition->add_option("--n", n, "Number of qudits")->required();
  partition->add_option("--d", d, "Levels per qudit")->required();
  partition->add_option("--k", k, "Comma-separated functional digits")->required();

  std::string handlers;
  std::string sources;
  auto* functional = app.add_subcommand(
      "functional", "Run the functional-creation circuit on handler and source qudits");
  functional->add_option("--d", d, "Levels per qudit")->required();
  functional->add_option("--handlers", handlers, "Handler state JSON file")->required();
  functional->add_option("--sources", sources, "Comma-separated source digits")->required();

  std::string circuit;
  auto* run = app.add_subcommand("run", "Run a circuit file on a state file");
  run->add_option("--circuit", circuit, "Circuit JSON file")->required();
  run->add_option("--in", in_path, "State JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "Expectations, k distributions and entropies");
  analyze->add_option("--in", in_path, "State JSON file")->required();

  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Run the invariant self-check suite");
  verify->add_option("--d", d, "Levels per qudit")->required();
  verify->add_option("--n", n, "Number of qudits")->required();
  verify->add_option("--seed", seed, "Seed for randomized sweeps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    std::cerr << qd_version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*transform) return cmd_transform(in_path, to);
    if (*planewave) return cmd_planewave(n, d, k);
    if (*partition) return cmd_partition(n, d, k);
    if (*functional) return cmd_functional(d, handlers, sources);
    if (*run) return cmd_run(circuit, in_path);
    if (*analyze) return cmd_analyze(in_path);
    if (*verify) return cmd_verify(d, n, seed);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kUsage;
}
