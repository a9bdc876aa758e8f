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

#include "qudual/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace qudual::io {

namespace {

void write_number(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void write(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(out, value);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        write(out, value);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      write_number(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  }
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw ParseError(std::string("field \"") + key + "\" out of range");
  }
  return static_cast<int>(x);
}

double number(const Json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
  return v.get<double>();
}

Complex complex_from_json(const Json& v) {
  if (!v.is_array() || v.size() != 2) {
    throw ParseError("complex numbers are encoded as [re, im]");
  }
  return {number(v[0], "real part"), number(v[1], "imaginary part")};
}

Representation rep_from_json(const Json& v) {
  if (v == "q") return Representation::Q;
  if (v == "k") return Representation::K;
  throw ParseError("field \"rep\" must be \"q\" or \"k\"");
}

QuditSystem system_from_json(const Json& doc) {
  try {
    return QuditSystem(int_field(doc, "n"), int_field(doc, "d"));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& v) {
  if (!v.is_array() || v.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
  CMatrix m(v.size(), cols);
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (!v[r].is_array() || v[r].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(v[r][c]);
  }
  return m;
}

}  // namespace

std::string dump(const Json& doc) {
  std::string out;
  write(out, doc);
  out += '\n';
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json state_to_json(const StateVector& s) {
  Json amps = Json::array();
  for (const auto& a : s.amplitudes()) amps.push_back(complex_to_json(a));
  Json doc;
  doc["n"] = s.system().qudits();
  doc["d"] = s.system().levels();
  doc["rep"] = std::string(to_string(s.rep()));
  doc["amplitudes"] = std::move(amps);
  return doc;
}

StateVector state_from_json(const Json& doc) {
  const auto sys = system_from_json(doc);
  const auto rep = rep_from_json(field(doc, "rep"));
  const auto& amps = field(doc, "amplitudes");
  if (!amps.is_array()) throw ParseError("field \"amplitudes\" must be an array");
  std::vector<Complex> values;
  values.reserve(amps.size());
  for (const auto& a : amps) values.push_back(complex_from_json(a));
  return StateVector(sys, rep, std::move(values));
}

Json circuit_to_json(const gates::Circuit& c) {
  Json list = Json::array();
  for (const auto& gate : c.gates()) {
    Json g;
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, gates::Translation>) {
            g["kind"] = "translation";
            g["target"] = x.target;
            g["amount"] = x.amount;
          } else if constexpr (std::is_same_v<T, gates::ControlledAdd>) {
            g["kind"] = "cadd";
            g["control"] = x.control;
            g["target"] = x.target;
            g["multiplier"] = x.multiplier;
          } else if constexpr (std::is_same_v<T, gates::DoublyControlledAdd>) {
            g["kind"] = "ccadd";
            g["k_control"] = x.k_control;
            g["j_control"] = x.j_control;
            g["target"] = x.target;
          } else {
            g["kind"] = "unitary";
            g["target"] = x.target;
            g["matrix"] = matrix_to_json(x.matrix);
          }
        },
        gate);
    list.push_back(std::move(g));
  }
  Json doc;
  doc["n"] = c.system().qudits();
  doc["d"] = c.system().levels();
  doc["gates"] = std::move(list);
  return doc;
}

gates::Circuit circuit_from_json(const Json& doc) {
  gates::Circuit circuit(system_from_json(doc));
  const auto& list = field(doc, "gates");
  if (!list.is_array()) throw ParseError("field \"gates\" must be an array");
  for (const auto& g : list) {
    const auto& kind = field(g, "kind");
    gates::GateDescriptor gate;
    if (kind == "translation") {
      gate = gates::Translation{int_field(g, "target"), int_field(g, "amount")};
    } else if (kind == "cadd") {
      gate = gates::ControlledAdd{int_field(g, "control"), int_field(g, "target"),
                                  int_field(g, "multiplier")};
    } else if (kind == "ccadd") {
      gate = gates::DoublyControlledAdd{int_field(g, "k_control"),
                                        int_field(g, "j_control"),
                                        int_field(g, "target")};
    } else if (kind == "unitary") {
      gate = gates::SingleQuditUnitary{int_field(g, "target"),
                                       matrix_from_json(field(g, "matrix"))};
    } else {
      throw ParseError("unknown gate kind " + kind.dump());
    }
    try {
      circuit.append(std::move(gate));
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("invalid gate: ") + e.what());
    }
  }
  return circuit;
}

Json partition_to_json(const analysis::Partition& p) {
  Json classes = Json::array();
  for (const auto& cls : p.classes) {
    Json labels = Json::array();
    for (const auto& q : cls) labels.push_back(q.to_string());
    classes.push_back(std::move(labels));
  }
  Json doc;
  doc["k"] = Json(std::vector<int>(p.functional.digits().begin(),
                                   p.functional.digits().end()));
  doc["classes"] = std::move(classes);
  return doc;
}

Json entropy_to_json(const analysis::EntropyReport& r) {
  Json doc;
  doc["h_q"] = r.h_q;
  doc["h_k"] = r.h_k;
  doc["sum"] = r.sum;
  if (r.log_base) {
    doc["log_base"] = *r.log_base;
  } else {
    doc["log_base"] = "e";
  }
  return doc;
}

}  // namespace qudual::io
