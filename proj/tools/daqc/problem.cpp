// Copyright 2026 The daqc Authors
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

#include "daqc/problem.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace daqc::cli {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::set<std::string>& required,
                  const std::string& where) {
  if (!obj.is_object()) {
    throw ParseError(where + " must be an object");
  }
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ParseError("unknown field '" + key + "' in " + where);
    }
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) {
      throw ParseError("missing field '" + key + "' in " + where);
    }
  }
}

double finite_number(const json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where + " must be a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + " must be finite");
  return v;
}

int integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw ParseError(where + " must be an integer");
  }
  return value.get<int>();
}

std::vector<double> number_array(const json& value, std::size_t length,
                                 const std::string& where) {
  if (!value.is_array() || value.size() != length) {
    throw ParseError(where + " must be an array of " + std::to_string(length) +
                     " numbers");
  }
  std::vector<double> out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    out.push_back(
        finite_number(value[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

}  // namespace

NNChain ProblemSpec::resource() const {
  return NNChain(num_qubits, resource_couplings);
}

CouplingGraph ProblemSpec::target_graph() const {
  CouplingGraph graph(num_qubits);
  if (const auto* ata = std::get_if<AtaTarget>(&target)) {
    for (const auto& c : ata->couplings) graph.set(c.i, c.j, c.value);
  } else {
    const auto& nn = std::get<NnTarget>(target);
    for (int j = 0; j + 1 < num_qubits; ++j) {
      graph.set(j, j + 1, nn.angles[j] / t_f);
    }
  }
  return graph;
}

ProblemSpec parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  require_keys(doc, {"num_qubits", "resource_couplings", "target", "t_f"},
               {"num_qubits", "resource_couplings", "target", "t_f"},
               "problem");

  ProblemSpec spec;
  spec.num_qubits = integer(doc["num_qubits"], "num_qubits");
  if (spec.num_qubits < 2) throw ParseError("num_qubits must be >= 2");
  const auto slots = static_cast<std::size_t>(spec.num_qubits - 1);
  spec.resource_couplings =
      number_array(doc["resource_couplings"], slots, "resource_couplings");
  spec.t_f = finite_number(doc["t_f"], "t_f");
  if (spec.t_f <= 0.0) throw ParseError("t_f must be positive");

  const json& target = doc["target"];
  if (!target.is_object() || !target.contains("type") ||
      !target["type"].is_string()) {
    throw ParseError("target needs a string 'type'");
  }
  const auto type = target["type"].get<std::string>();
  if (type == "ata") {
    require_keys(target, {"type", "couplings"}, {"type", "couplings"},
                 "target");
    if (!target["couplings"].is_array()) {
      throw ParseError("target.couplings must be an array");
    }
    AtaTarget ata;
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < target["couplings"].size(); ++k) {
      const json& entry = target["couplings"][k];
      const std::string where = "target.couplings[" + std::to_string(k) + "]";
      require_keys(entry, {"i", "j", "value"}, {"i", "j", "value"}, where);
      AtaCoupling c{integer(entry["i"], where + ".i"),
                    integer(entry["j"], where + ".j"),
                    finite_number(entry["value"], where + ".value")};
      if (c.i < 0 || c.j >= spec.num_qubits || c.i >= c.j) {
        throw ParseError(where + " needs 0 <= i < j < num_qubits");
      }
      if (!seen.insert({c.i, c.j}).second) {
        throw ParseError(where + " repeats edge (" + std::to_string(c.i) +
                         ", " + std::to_string(c.j) + ")");
      }
      ata.couplings.push_back(c);
    }
    spec.target = std::move(ata);
  } else if (type == "nn") {
    require_keys(target, {"type", "angles"}, {"type", "angles"}, "target");
    spec.target = NnTarget{number_array(target["angles"], slots, "target.angles")};
  } else {
    throw ParseError("unknown target type '" + type + "'");
  }
  return spec;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace daqc::cli
