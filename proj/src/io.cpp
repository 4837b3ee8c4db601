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

#include "psyn/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "psyn/pipeline.hpp"

namespace psyn {

namespace {

using nlohmann::json;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_angle(double angle) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", angle);
  return buf;
}

}  // namespace

OperatorData parse_operator(
    const std::string &text, const std::string &origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("n_qubits") ||
      !doc.contains("terms")) {
    throw ParseError(
        origin + ": expected an object with \"n_qubits\" and \"terms\"");
  }
  if (!doc["n_qubits"].is_number_unsigned() ||
      doc["n_qubits"].get<std::uint64_t>() == 0) {
    throw ParseError(origin + ": \"n_qubits\" must be a positive integer");
  }
  unsigned n = doc["n_qubits"].get<unsigned>();
  if (!doc["terms"].is_array()) {
    throw ParseError(origin + ": \"terms\" must be an array");
  }

  OperatorData data;
  data.n_qubits = n;
  std::map<PauliString, std::size_t> index;
  std::size_t entry = 0;
  for (const json &item : doc["terms"]) {
    ++entry;
    std::string at = origin + ", term " + std::to_string(entry);
    if (!item.is_object() || !item.contains("paulis") ||
        !item.contains("coefficient")) {
      throw ParseError(at + ": expected {\"paulis\", \"coefficient\"}");
    }
    if (!item["paulis"].is_string()) {
      throw ParseError(at + ": \"paulis\" must be a string");
    }
    std::string paulis = item["paulis"].get<std::string>();
    if (paulis.size() != n) {
      throw ParseError(
          at + ": string \"" + paulis + "\" has length " +
          std::to_string(paulis.size()) + ", expected " + std::to_string(n));
    }
    if (!item["coefficient"].is_number()) {
      throw ParseError(at + ": \"coefficient\" must be a number");
    }
    double coeff = item["coefficient"].get<double>();
    if (!std::isfinite(coeff)) {
      throw ParseError(at + ": coefficient is not finite");
    }
    PauliString string(n);
    try {
      string = PauliString(paulis);
    } catch (const std::invalid_argument &e) {
      throw ParseError(at + ": " + e.what());
    }
    // Angle convention: coefficient c denotes exp(i*c*P) = exp(-i*theta/2*P)
    // with theta = -2c. Duplicates fuse by angle addition.
    double theta = -2.0 * coeff;
    auto [it, inserted] = index.emplace(string, data.terms.size());
    if (inserted) {
      data.terms.emplace_back(string, theta, +1);
    } else {
      data.terms[it->second].angle += theta;
    }
  }
  return data;
}

OperatorData load_operator(const std::string &path) {
  return parse_operator(read_file(path), path);
}

void save_operator(
    const std::string &path, unsigned n_qubits,
    const std::vector<PauliTerm> &terms) {
  std::vector<PauliTerm> fused = fuse_terms(terms);
  std::sort(
      fused.begin(), fused.end(), [](const PauliTerm &a, const PauliTerm &b) {
        return a.string < b.string;
      });
  json doc;
  doc["n_qubits"] = n_qubits;
  doc["terms"] = json::array();
  for (const PauliTerm &t : fused) {
    doc["terms"].push_back(
        {{"paulis", t.string.to_string()},
         {"coefficient", -t.folded_angle() / 2.0}});
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << doc.dump(2) << "\n";
}

std::string qasm_string(const Circuit &c) {
  std::ostringstream ss;
  ss << "OPENQASM 2.0;\n";
  ss << "include \"qelib1.inc\";\n";
  ss << "qreg q[" << c.n_qubits() << "];\n";
  for (const Gate &g : c.gates()) {
    switch (g.kind) {
      case GateKind::CX:
        ss << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::Rz:
        ss << "rz(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::H:
        ss << "h q[" << g.q0 << "];\n";
        break;
      case GateKind::S:
        ss << "s q[" << g.q0 << "];\n";
        break;
      case GateKind::Sdg:
        ss << "sdg q[" << g.q0 << "];\n";
        break;
      case GateKind::V:
        ss << "rx(pi/2) q[" << g.q0 << "];\n";
        break;
      case GateKind::Vdg:
        ss << "rx(-pi/2) q[" << g.q0 << "];\n";
        break;
      case GateKind::X:
        ss << "x q[" << g.q0 << "];\n";
        break;
      case GateKind::Z:
        ss << "z q[" << g.q0 << "];\n";
        break;
    }
  }
  return ss.str();
}

void emit_qasm(const Circuit &c, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write file: " + path);
  }
  out << qasm_string(c);
}

namespace {

std::string strip(const std::string &s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

unsigned parse_qubit_ref(const std::string &token, const std::string &line) {
  if (token.size() < 4 || token.substr(0, 2) != "q[" || token.back() != ']') {
    throw ParseError("bad qubit reference in QASM line: " + line);
  }
  return static_cast<unsigned>(
      std::stoul(token.substr(2, token.size() - 3)));
}

}  // namespace

Circuit parse_qasm(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  unsigned n_qubits = 0;
  bool have_reg = false;
  std::vector<Gate> gates;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line.rfind("OPENQASM", 0) == 0 ||
        line.rfind("include", 0) == 0) {
      continue;
    }
    if (line.back() != ';') {
      throw ParseError("QASM line missing ';': " + line);
    }
    line.pop_back();
    if (line.rfind("qreg", 0) == 0) {
      std::size_t open = line.find('['), close = line.find(']');
      if (open == std::string::npos || close == std::string::npos) {
        throw ParseError("bad qreg declaration: " + line);
      }
      n_qubits = static_cast<unsigned>(
          std::stoul(line.substr(open + 1, close - open - 1)));
      have_reg = true;
      continue;
    }
    std::size_t space = line.find(' ');
    if (space == std::string::npos) {
      throw ParseError("unrecognised QASM line: " + line);
    }
    std::string head = line.substr(0, space);
    std::string args = strip(line.substr(space + 1));
    if (head == "cx") {
      std::size_t comma = args.find(',');
      if (comma == std::string::npos) {
        throw ParseError("cx needs two qubits: " + line);
      }
      gates.push_back(Gate::cx(
          parse_qubit_ref(strip(args.substr(0, comma)), line),
          parse_qubit_ref(strip(args.substr(comma + 1)), line)));
    } else if (head == "h" || head == "s" || head == "sdg" || head == "x" ||
               head == "z") {
      unsigned q = parse_qubit_ref(args, line);
      if (head == "h") gates.push_back(Gate::h(q));
      if (head == "s") gates.push_back(Gate::s(q));
      if (head == "sdg") gates.push_back(Gate::sdg(q));
      if (head == "x") gates.push_back(Gate::x(q));
      if (head == "z") gates.push_back(Gate::z(q));
    } else if (head.rfind("rz(", 0) == 0 || head.rfind("rx(", 0) == 0) {
      std::size_t close = head.rfind(')');
      if (close == std::string::npos) {
        throw ParseError("bad rotation: " + line);
      }
      std::string param = head.substr(3, close - 3);
      unsigned q = parse_qubit_ref(args, line);
      if (head[1] == 'z') {
        gates.push_back(Gate::rz(std::stod(param), q));
      } else if (param == "pi/2") {
        gates.push_back(Gate::v(q));
      } else if (param == "-pi/2") {
        gates.push_back(Gate::vdg(q));
      } else {
        throw ParseError("unsupported rx parameter: " + line);
      }
    } else {
      throw ParseError("unrecognised QASM gate: " + line);
    }
  }
  if (!have_reg) {
    throw ParseError("QASM text has no qreg declaration");
  }
  Circuit c(n_qubits);
  for (const Gate &g : gates) c.add(g);
  return c;
}

Circuit read_qasm(const std::string &path) {
  return parse_qasm(read_file(path));
}

}  // namespace psyn
