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

#include "qudual/qudual.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "qudual/commands.hpp"
#include "qudual/duality.hpp"
#include "qudual/io.hpp"
#include "qudual/verify.hpp"

struct qd_state {
  qudual::StateVector value;
};

struct qd_circuit {
  qudual::gates::Circuit value;
};

namespace {

thread_local std::string last_error;

qd_status fail(qd_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <typename Body>
qd_status guarded(Body&& body) {
  try {
    body();
    return QD_OK;
  } catch (const qudual::ValidationError& e) {
    return fail(QD_ERR_VALIDATION, e.what());
  } catch (const qudual::Mismatch& e) {
    return fail(QD_ERR_MISMATCH, e.what());
  } catch (const qudual::InvalidArgument& e) {
    return fail(QD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QD_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(QD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QD_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw qudual::InvalidArgument(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qudual::Representation to_rep(qd_rep rep) {
  switch (rep) {
    case QD_REP_Q:
      return qudual::Representation::Q;
    case QD_REP_K:
      return qudual::Representation::K;
  }
  throw qudual::InvalidArgument("unknown representation tag");
}

qudual::DigitLabel make_label(int n, int d, const int* digits, size_t len) {
  if (len > 0) require(digits, "digits");
  return qudual::DigitLabel(qudual::QuditSystem(n, d),
                            std::vector<int>(digits, digits + len));
}

}  // namespace

extern "C" {

const char* qd_version(void) { return "1.0.0"; }

const char* qd_last_error(void) { return last_error.c_str(); }

const char* qd_status_name(qd_status status) {
  switch (status) {
    case QD_OK:
      return "ok";
    case QD_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case QD_ERR_VALIDATION:
      return "validation error";
    case QD_ERR_MISMATCH:
      return "mismatch";
    case QD_ERR_OUT_OF_MEMORY:
      return "out of memory";
    case QD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void qd_string_free(char* s) { std::free(s); }

int qd_is_prime(int d) { return qudual::is_prime(d) ? 1 : 0; }

qd_status qd_state_create(int n, int d, qd_rep rep, const double* amplitudes,
                          size_t count, qd_state** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(amplitudes, "amplitudes");
    std::vector<qudual::Complex> amps(count);
    for (size_t i = 0; i < count; ++i) {
      amps[i] = {amplitudes[2 * i], amplitudes[2 * i + 1]};
    }
    *out = new qd_state{
        qudual::StateVector(qudual::QuditSystem(n, d), to_rep(rep), std::move(amps))};
  });
}

qd_status qd_state_basis(int n, int d, qd_rep rep, const int* digits,
                         size_t len, qd_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qd_state{
        qudual::StateVector::basis_state(make_label(n, d, digits, len), to_rep(rep))};
  });
}

qd_status qd_state_from_json(const char* json, qd_state** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new qd_state{qudual::io::state_from_json(qudual::io::parse(json))};
  });
}

qd_status qd_state_to_json(const qd_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = copy_string(qudual::io::dump(qudual::io::state_to_json(state->value)));
  });
}

void qd_state_free(qd_state* state) { delete state; }

int qd_state_qudits(const qd_state* state) {
  return state ? state->value.system().qudits() : 0;
}

int qd_state_levels(const qd_state* state) {
  return state ? state->value.system().levels() : 0;
}

qd_rep qd_state_rep(const qd_state* state) {
  return state && state->value.rep() == qudual::Representation::K ? QD_REP_K
                                                                  : QD_REP_Q;
}

size_t qd_state_dim(const qd_state* state) { return state ? state->value.dim() : 0; }

qd_status qd_state_amplitudes(const qd_state* state, double* out, size_t count) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const auto amps = state->value.amplitudes();
    if (count != amps.size()) {
      throw qudual::InvalidArgument("buffer holds " + std::to_string(count) +
                                    " amplitudes, state has " +
                                    std::to_string(amps.size()));
    }
    for (size_t i = 0; i < count; ++i) {
      out[2 * i] = amps[i].real();
      out[2 * i + 1] = amps[i].imag();
    }
  });
}

qd_status qd_inner_product(const qd_state* f, const qd_state* g, double* re,
                           double* im) {
  return guarded([&] {
    require(f, "f");
    require(g, "g");
    require(re, "re");
    require(im, "im");
    const auto z = qudual::inner_product(f->value, g->value);
    *re = z.real();
    *im = z.imag();
  });
}

qd_status qd_transform(const qd_state* state, qd_rep target, qd_state** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = new qd_state{qudual::duality::to_rep(state->value, to_rep(target))};
  });
}

qd_status qd_planewave(int n, int d, const int* k, size_t len, qd_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qd_state{qudual::duality::planewave(make_label(n, d, k, len))};
  });
}

qd_status qd_circuit_from_json(const char* json, qd_circuit** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new qd_circuit{qudual::io::circuit_from_json(qudual::io::parse(json))};
  });
}

qd_status qd_circuit_to_json(const qd_circuit* circuit, char** out) {
  return guarded([&] {
    require(circuit, "circuit");
    require(out, "out");
    *out = copy_string(qudual::io::dump(qudual::io::circuit_to_json(circuit->value)));
  });
}

qd_status qd_circuit_functional(int m, int d, qd_circuit** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qd_circuit{qudual::gates::build_functional_circuit(m, d).circuit};
  });
}

void qd_circuit_free(qd_circuit* circuit) { delete circuit; }

qd_status qd_run_circuit(const qd_circuit* circuit, const qd_state* state,
                         qd_state** out) {
  return guarded([&] {
    require(circuit, "circuit");
    require(state, "state");
    require(out, "out");
    *out = new qd_state{qudual::gates::run_circuit(circuit->value, state->value)};
  });
}

qd_status qd_partition_json(int n, int d, const int* k, size_t len, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(qudual::io::dump(qudual::io::partition_to_json(
        qudual::analysis::partition(make_label(n, d, k, len)))));
  });
}

qd_status qd_entropy_json(const qd_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const auto psi = qudual::duality::to_rep(state->value, qudual::Representation::Q);
    *out = copy_string(
        qudual::io::dump(qudual::io::entropy_to_json(qudual::analysis::entropies(psi))));
  });
}

qd_status qd_analyze_json(const qd_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = copy_string(qudual::io::dump(qudual::commands::analyze(state->value)));
  });
}

qd_status qd_functional_json(const qd_state* handlers, const int* sources,
                             size_t len, char** out) {
  return guarded([&] {
    require(handlers, "handlers");
    require(out, "out");
    const auto& sys = handlers->value.system();
    if (len != static_cast<size_t>(sys.qudits())) {
      throw qudual::Mismatch("handler state has " + std::to_string(sys.qudits()) +
                             " qudits but " + std::to_string(len) +
                             " source digits were given");
    }
    *out = copy_string(qudual::io::dump(qudual::commands::functional(
        handlers->value, make_label(sys.qudits(), sys.levels(), sources, len))));
  });
}

qd_status qd_verify_json(int d, int n, uint64_t seed, char** out, int* passed) {
  return guarded([&] {
    require(out, "out");
    const auto report = qudual::verify::run(d, n, seed);
    if (passed != nullptr) *passed = report.passed() ? 1 : 0;
    *out = copy_string(qudual::io::dump(qudual::verify::to_json(report)));
  });
}

}  // extern "C"
