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

#include "daqc/schedule_file.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include <json.hpp>

namespace daqc::cli {

namespace {

using nlohmann::json;

std::string quoted(std::string_view s) { return json(std::string(s)).dump(); }

void emit_sqr(std::ostringstream& os, const DigitalLayer& layer) {
  os << "{\"sqr\": [";
  for (std::size_t k = 0; k < layer.gates.size(); ++k) {
    const Gate& g = layer.gates[k];
    if (k > 0) os << ", ";
    os << "{\"q\": " << g.qubit << ", \"gate\": " << quoted(gate_name(g.kind));
    if (g.kind == GateKind::Rz) os << ", \"angle\": " << format_double(g.angle);
    os << "}";
  }
  os << "]}";
}

void emit_block(std::ostringstream& os, const ResourceBlock& block) {
  os << "{\"resource_block\": {\"duration\": " << format_double(block.duration)
     << ", \"x_mask\": [";
  for (std::size_t q = 0; q < block.x_mask.size(); ++q) {
    if (q > 0) os << ", ";
    os << (block.x_mask[q] ? "true" : "false");
  }
  os << "]}}";
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing field '" + std::string(key) + "' in " + where);
  }
  return *it;
}

void only_keys(const json& obj, const std::set<std::string>& allowed,
               const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ParseError("unknown field '" + key + "' in " + where);
    }
  }
}

std::size_t count(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) {
    throw ParseError(where + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(where + " must be finite");
  return d;
}

std::string text(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a string");
  return v.get<std::string>();
}

DigitalLayer parse_sqr(const json& gates, const std::string& where) {
  if (!gates.is_array()) throw ParseError(where + " must be an array");
  DigitalLayer layer;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const json& g = gates[k];
    if (!g.is_object()) throw ParseError(at + " must be an object");
    only_keys(g, {"q", "gate", "angle"}, at);
    const json& q = field(g, "q", at);
    if (!q.is_number_integer()) throw ParseError(at + ".q must be an integer");
    const auto name = text(field(g, "gate", at), at + ".gate");
    const auto kind = gate_kind_from_name(name);
    if (!kind) throw ParseError(at + ": unknown gate '" + name + "'");
    Gate gate{*kind, q.get<int>(), 0.0};
    if (gate.is_two_qubit()) {
      throw ParseError(at + ": two-qubit gate in a single-qubit layer");
    }
    if (*kind == GateKind::Rz) {
      gate.angle = number(field(g, "angle", at), at + ".angle");
    } else if (g.contains("angle")) {
      throw ParseError(at + ": angle given for gate '" + name + "'");
    }
    layer.gates.push_back(gate);
  }
  return layer;
}

ResourceBlock parse_block(const json& obj, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  only_keys(obj, {"duration", "x_mask"}, where);
  ResourceBlock block;
  block.duration = number(field(obj, "duration", where), where + ".duration");
  const json& mask = field(obj, "x_mask", where);
  if (!mask.is_array()) throw ParseError(where + ".x_mask must be an array");
  for (const auto& bit : mask) {
    if (!bit.is_boolean()) {
      throw ParseError(where + ".x_mask entries must be booleans");
    }
    block.x_mask.push_back(bit.get<bool>());
  }
  return block;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf{};
  // "-0" would read back as the integer 0.
  std::snprintf(buf.data(), buf.size(), "%.17g", value == 0.0 ? 0.0 : value);
  return buf.data();
}

std::string sha256_tag(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int k = 0; k < length; ++k) {
    out += kHex[digest[k] >> 4];
    out += kHex[digest[k] & 0xf];
  }
  return out;
}

std::string emit_schedule(const ScheduleFile& file) {
  const ScheduleStats& s = file.stats;
  std::ostringstream os;
  os << "{\n"
     << "  \"format\": " << quoted(kScheduleFormat) << ",\n"
     << "  \"tool_version\": " << quoted(file.tool_version) << ",\n"
     << "  \"input_hash\": " << quoted(file.input_hash) << ",\n"
     << "  \"num_qubits\": " << file.circuit.num_qubits() << ",\n"
     << "  \"t_f\": " << format_double(file.t_f) << ",\n"
     << "  \"stats\": {"
     << "\"analog_block_count\": " << s.analog_block_count
     << ", \"analog_request_count\": " << s.analog_request_count
     << ", \"total_analog_time\": " << format_double(s.total_analog_time)
     << ", \"sqr_count\": " << s.sqr_count
     << ", \"x_gate_count\": " << s.x_gate_count
     << ", \"iswap_layer_count\": " << s.iswap_layer_count << "},\n"
     << "  \"instructions\": [";
  const auto& insts = file.circuit.instructions();
  for (std::size_t k = 0; k < insts.size(); ++k) {
    os << (k == 0 ? "\n    " : ",\n    ");
    if (const auto* layer = std::get_if<DigitalLayer>(&insts[k])) {
      if (layer->has_two_qubit_gate()) {
        throw std::invalid_argument("schedule contains a two-qubit gate");
      }
      emit_sqr(os, *layer);
    } else if (const auto* block = std::get_if<ResourceBlock>(&insts[k])) {
      emit_block(os, *block);
    } else {
      throw std::invalid_argument("schedule contains an unscheduled request");
    }
  }
  os << (insts.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

ScheduleFile parse_schedule(std::string_view input) {
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const std::string top = "schedule";
  if (!doc.is_object()) throw ParseError("schedule must be an object");
  only_keys(doc,
            {"format", "tool_version", "input_hash", "num_qubits", "t_f",
             "stats", "instructions"},
            top);
  if (text(field(doc, "format", top), "format") != kScheduleFormat) {
    throw ParseError("format must be \"daqc-schedule\"");
  }
  const json& nq = field(doc, "num_qubits", top);
  if (!nq.is_number_integer() || nq.get<int>() < 2) {
    throw ParseError("num_qubits must be an integer >= 2");
  }

  ScheduleFile file;
  file.tool_version = text(field(doc, "tool_version", top), "tool_version");
  file.input_hash = text(field(doc, "input_hash", top), "input_hash");
  file.t_f = number(field(doc, "t_f", top), "t_f");

  const json& st = field(doc, "stats", top);
  only_keys(st,
            {"analog_block_count", "analog_request_count", "total_analog_time",
             "sqr_count", "x_gate_count", "iswap_layer_count"},
            "stats");
  auto stat = [&](const char* key) {
    return count(field(st, key, "stats"), std::string("stats.") + key);
  };
  file.stats.analog_block_count = stat("analog_block_count");
  file.stats.analog_request_count = stat("analog_request_count");
  file.stats.sqr_count = stat("sqr_count");
  file.stats.x_gate_count = stat("x_gate_count");
  file.stats.iswap_layer_count = stat("iswap_layer_count");
  file.stats.total_analog_time =
      number(field(st, "total_analog_time", "stats"), "stats.total_analog_time");

  const json& insts = field(doc, "instructions", top);
  if (!insts.is_array()) throw ParseError("instructions must be an array");
  Circuit circuit(nq.get<int>());
  try {
    for (std::size_t k = 0; k < insts.size(); ++k) {
      const std::string at = "instructions[" + std::to_string(k) + "]";
      const json& inst = insts[k];
      if (!inst.is_object() || inst.size() != 1) {
        throw ParseError(at + " must have exactly one of sqr, resource_block");
      }
      if (inst.contains("sqr")) {
        DigitalLayer layer = parse_sqr(inst["sqr"], at + ".sqr");
        if (layer.gates.empty()) throw ParseError(at + ".sqr is empty");
        circuit.append(std::move(layer));
      } else if (inst.contains("resource_block")) {
        circuit.append(parse_block(inst["resource_block"], at + ".resource_block"));
      } else {
        throw ParseError(at + " must have exactly one of sqr, resource_block");
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  file.circuit = std::move(circuit);
  return file;
}

}  // namespace daqc::cli
