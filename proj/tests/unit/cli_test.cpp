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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "daqc/commands.hpp"
#include "daqc/problem.hpp"
#include "daqc/schedule_file.hpp"

namespace daqc::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("daqc_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  std::string read(const std::string& name) const {
    return read_text_file(path(name));
  }

  int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "daqc");
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  static std::string problem(int n, const std::vector<double>& resource,
                             const nlohmann::json& target, double t_f) {
    nlohmann::json doc;
    doc["num_qubits"] = n;
    doc["resource_couplings"] = resource;
    doc["target"] = target;
    doc["t_f"] = t_f;
    return doc.dump();
  }

  static nlohmann::json ata(int n, std::mt19937_64* rng, double value = 1.0) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    nlohmann::json couplings = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        couplings.push_back(
            {{"i", i}, {"j", j}, {"value", rng ? dist(*rng) : value}});
      }
    }
    return {{"type", "ata"}, {"couplings", couplings}};
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, CompileVerifyRandomFourQubit) {
  std::mt19937_64 rng(71);
  write("p.json", problem(4, {1.0, 0.7, -1.2}, ata(4, &rng), 0.45));
  ASSERT_EQ(run_cli({"compile", "--input", path("p.json"), "--output",
                     path("s.json")}),
            kExitOk)
      << err_.str();
  EXPECT_EQ(run_cli({"verify", "--input", path("p.json"), "--schedule",
                     path("s.json")}),
            kExitOk)
      << out_.str();
  EXPECT_NE(out_.str().find("PASS"), std::string::npos);
}

TEST_F(CliTest, Deterministic) {
  std::mt19937_64 rng(73);
  write("p.json", problem(5, {1.0, 0.5, 1.5, -0.8}, ata(5, &rng), 0.9));
  run_cli({"compile", "--input", path("p.json"), "--output", path("a.json")});
  run_cli({"compile", "--input", path("p.json"), "--output", path("b.json")});
  EXPECT_EQ(read("a.json"), read("b.json"));
}

TEST_F(CliTest, RoundTrip) {
  std::mt19937_64 rng(79);
  write("p.json", problem(6, {1.0, 0.5, 1.5, -0.8, 1.1}, ata(6, &rng), 0.33));
  run_cli({"compile", "--input", path("p.json"), "--output", path("s.json")});
  const std::string text = read("s.json");
  const ScheduleFile parsed = parse_schedule(text);
  EXPECT_EQ(emit_schedule(parsed), text);
  EXPECT_EQ(parse_schedule(emit_schedule(parsed)), parsed);
  EXPECT_EQ(parsed.input_hash, sha256_tag(read("p.json")));
  EXPECT_EQ(parsed.tool_version, tool_version());
}

TEST_F(CliTest, RoundTripEdgeValues) {
  ScheduleFile f;
  f.tool_version = "x\"y";
  f.input_hash = "sha256:00";
  f.t_f = 1.0 / 3.0;
  f.circuit = Circuit(3);
  f.circuit.append(DigitalLayer{{Gate::rz(0, -0.0), Gate::rz(2, 1e-300)}});
  f.circuit.append(ResourceBlock{0.0, {true, false, true}});
  f.circuit.append(ResourceBlock{5e-324, {false, false, false}});
  const std::string text = emit_schedule(f);
  EXPECT_EQ(parse_schedule(text), f);
  EXPECT_EQ(emit_schedule(parse_schedule(text)), text);
  ScheduleFile empty;
  EXPECT_EQ(parse_schedule(emit_schedule(empty)), empty);
}

TEST_F(CliTest, PerturbedDurationFails) {
  std::mt19937_64 rng(83);
  write("p.json", problem(4, {1.0, 1.0, 1.0}, ata(4, &rng), 0.5));
  run_cli({"compile", "--input", path("p.json"), "--output", path("s.json")});
  ScheduleFile f = parse_schedule(read("s.json"));
  Circuit perturbed(4);
  bool done = false;
  for (auto inst : f.circuit.instructions()) {
    if (auto* b = std::get_if<ResourceBlock>(&inst); b && !done) {
      b->duration += 1e-3;
      done = true;
    }
    perturbed.append(inst);
  }
  f.circuit = perturbed;
  write("bad.json", emit_schedule(f));
  EXPECT_EQ(run_cli({"verify", "--input", path("p.json"), "--schedule",
                     path("bad.json")}),
            kExitVerifyFailed);
  EXPECT_NE(out_.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, OverCap) {
  write("p.json", problem(12, std::vector<double>(11, 1.0), ata(12, nullptr), 0.1));
  ASSERT_EQ(run_cli({"compile", "--input", path("p.json"), "--output",
                     path("s.json")}),
            kExitOk);
  EXPECT_EQ(run_cli({"verify", "--input", path("p.json"), "--schedule",
                     path("s.json")}),
            kExitOverCap);
  EXPECT_NE(err_.str().find("cap"), std::string::npos);
}

TEST_F(CliTest, UnschedulableSlot) {
  write("p.json", problem(4, {1.0, 0.0, 1.0}, ata(4, nullptr), 0.5));
  EXPECT_EQ(run_cli({"compile", "--input", path("p.json"), "--output",
                     path("s.json")}),
            kExitUnschedulable);
  EXPECT_NE(err_.str().find("slot"), std::string::npos);
}

TEST_F(CliTest, ParseErrors) {
  const std::vector<std::string> bad = {
      "{",
      R"({"num_qubits":3,"resource_couplings":[1,1],"target":{"type":"nn","angles":[0,0]},"t_f":1,"extra":0})",
      R"({"num_qubits":3,"resource_couplings":[1],"target":{"type":"nn","angles":[0,0]},"t_f":1})",
      R"({"num_qubits":3,"resource_couplings":[1,1],"target":{"type":"nn","angles":[0,0]},"t_f":0})",
      R"({"num_qubits":3,"resource_couplings":[1,1],"target":{"type":"ata","couplings":[{"i":2,"j":1,"value":1}]},"t_f":1})",
      R"({"num_qubits":3,"resource_couplings":[1,1],"target":{"type":"ata","couplings":[{"i":0,"j":1,"value":1},{"i":0,"j":1,"value":2}]},"t_f":1})",
      R"({"num_qubits":3,"resource_couplings":[1,1],"target":{"type":"ata","couplings":[{"i":0,"j":1,"value":1,"w":0}]},"t_f":1})",
      R"({"num_qubits":3,"resource_couplings":[1,1],"target":{"type":"xx"},"t_f":1})",
  };
  for (std::size_t k = 0; k < bad.size(); ++k) {
    write("p.json", bad[k]);
    EXPECT_EQ(run_cli({"compile", "--input", path("p.json"), "--output",
                       path("s.json")}),
              kExitParseError)
        << bad[k];
  }
  EXPECT_EQ(run_cli({"compile", "--input", path("missing.json"), "--output",
                     path("s.json")}),
            kExitParseError);
  EXPECT_EQ(run_cli({"frobnicate"}), kExitParseError);
  EXPECT_EQ(run_cli({"compile", "--input", path("p.json")}), kExitParseError);
}

TEST_F(CliTest, MalformedSchedule) {
  write("p.json", problem(2, {1.0}, {{"type", "nn"}, {"angles", {0.1}}}, 0.1));
  write("s.json", R"({"format":"daqc-schedule"})");
  EXPECT_EQ(run_cli({"stats", "--input", path("p.json"), "--schedule",
                     path("s.json")}),
            kExitParseError);
  EXPECT_EQ(run_cli({"verify", "--input", path("p.json"), "--schedule",
                     path("s.json")}),
            kExitParseError);
}

TEST_F(CliTest, NnTargetEqualToResource) {
  write("p.json", problem(3, {1.0, -2.0}, {{"type", "nn"}, {"angles", {0.3, -0.6}}}, 0.3));
  ASSERT_EQ(run_cli({"compile", "--input", path("p.json"), "--output",
                     path("s.json")}),
            kExitOk);
  const auto f = parse_schedule(read("s.json"));
  ASSERT_EQ(f.circuit.instructions().size(), 1u);
  const auto& block = std::get<ResourceBlock>(f.circuit.instructions()[0]);
  EXPECT_DOUBLE_EQ(block.duration, 0.3);
}

TEST_F(CliTest, StatsTwoQubits) {
  write("p.json", problem(2, {1.0}, ata(2, nullptr), 0.5));
  run_cli({"compile", "--input", path("p.json"), "--output", path("s.json")});
  ASSERT_EQ(run_cli({"stats", "--input", path("p.json"), "--schedule",
                     path("s.json")}),
            kExitOk);
  const std::string report = out_.str();
  EXPECT_NE(report.find("analog_block_count: 1\n"), std::string::npos);
  EXPECT_NE(report.find("reference_request_count_5L_minus_12: n/a"),
            std::string::npos);
}

TEST_F(CliTest, StatsSixQubitHomogeneous) {
  write("p.json", problem(6, std::vector<double>(5, 1.0), ata(6, nullptr), 0.7));
  run_cli({"compile", "--input", path("p.json"), "--output", path("s.json")});
  ASSERT_EQ(run_cli({"stats", "--input", path("p.json"), "--schedule",
                     path("s.json")}),
            kExitOk);
  const std::string report = out_.str();
  EXPECT_NE(report.find("reference_request_count_5L_minus_12: 18"),
            std::string::npos);
  const auto last = report.substr(report.rfind('{'));
  const auto block = nlohmann::json::parse(last);
  EXPECT_EQ(block["reference_request_count_5L_minus_12"], 18);
  EXPECT_LE(block["analog_request_count"].get<int>(), 8 * 6);
  EXPECT_NEAR(block["total_analog_time"].get<double>(),
              block["minimal_analog_time"].get<double>(), 1e-12);
}

}  // namespace
}  // namespace daqc::cli
