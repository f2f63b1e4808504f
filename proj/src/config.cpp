/*
 * Copyright 2026 The legslam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "legslam/config.hpp"

#include <set>
#include <stdexcept>

#include "legslam/toml.hpp"
#include "legslam/trajectory_io.hpp"

namespace legslam {

namespace {

class KeyReader {
 public:
  explicit KeyReader(std::map<std::string, toml::Value> table)
      : table_(std::move(table)) {}

  const toml::Value* Find(const std::string& key) {
    consumed_.insert(key);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }

  bool Has(const std::string& key) const { return table_.count(key) != 0; }

  /// Every key in the file must have been consumed; typos are errors.
  void CheckNoUnknownKeys() const {
    for (const auto& [key, value] : table_) {
      if (consumed_.count(key) == 0) {
        throw std::invalid_argument("config: unknown key '" + key + "'");
      }
    }
  }

 private:
  std::map<std::string, toml::Value> table_;
  std::set<std::string> consumed_;
};

void ReadDouble(KeyReader& reader, const std::string& key, double* out) {
  if (const toml::Value* v = reader.Find(key)) *out = v->AsFloat();
}

void ReadInt(KeyReader& reader, const std::string& key, int* out) {
  if (const toml::Value* v = reader.Find(key)) {
    *out = static_cast<int>(v->AsInt());
  }
}

void ReadBool(KeyReader& reader, const std::string& key, bool* out) {
  if (const toml::Value* v = reader.Find(key)) *out = v->AsBool();
}

void ReadString(KeyReader& reader, const std::string& key, std::string* out) {
  if (const toml::Value* v = reader.Find(key)) *out = v->AsString();
}

void ReadSigmas(KeyReader& reader, const std::string& key, Twist* out) {
  if (const toml::Value* v = reader.Find(key)) {
    const auto values = v->AsFloatArray();
    if (values.size() != 6) {
      throw std::invalid_argument("config: '" + key +
                                  "' must have exactly 6 entries");
    }
    for (int i = 0; i < 6; ++i) (*out)(i) = values[i];
  }
}

std::string SigmasToml(const Twist& sigmas) {
  std::string out = "[";
  for (int i = 0; i < 6; ++i) {
    if (i > 0) out += ", ";
    out += FormatDouble(sigmas(i));
  }
  return out + "]";
}

double PresetBias(const std::string& preset) {
  return preset == "cocopark" ? 0.12 : 0.1;
}

}  // namespace

std::vector<LaneConfig> RunConfig::LaneConfigs() const {
  std::vector<LaneConfig> configs;
  for (Variant variant : variants) {
    LaneConfig c = lane;
    c.variant = variant;
    configs.push_back(c);
  }
  return configs;
}

RunConfig DefaultRunConfig(const std::string& preset) {
  RunConfig config;
  config.scenario = ScenarioSpec::Preset(preset);
  config.noise.lidar_z_bias_per_keyframe = PresetBias(preset);
  return config;
}

RunConfig ParseRunConfig(const std::string& text) {
  KeyReader reader(toml::Parse(text));

  if (const toml::Value* v = reader.Find("format_version")) {
    if (v->AsInt() != 1) {
      throw std::invalid_argument("config: unsupported format_version");
    }
  }
  reader.Find("rng_algorithm");  // informational, written by us

  std::string preset = "factory";
  ReadString(reader, "scenario.preset", &preset);
  RunConfig config = DefaultRunConfig(preset);

  ReadString(reader, "scenario.name", &config.scenario.name);
  if (const toml::Value* v = reader.Find("scenario.loop")) {
    config.scenario.loop = LoopShapeFromName(v->AsString());
  }
  ReadDouble(reader, "scenario.path_length_m", &config.scenario.path_length);
  ReadDouble(reader, "scenario.relief_amplitude_m",
             &config.scenario.relief_amplitude);
  ReadDouble(reader, "scenario.keyframe_spacing_m",
             &config.scenario.keyframe_spacing);
  ReadDouble(reader, "scenario.fk_rate_hz", &config.scenario.fk_rate);
  ReadDouble(reader, "scenario.speed_mps", &config.scenario.speed);
  config.scenario.Validate();

  ReadDouble(reader, "noise.lidar_z_bias_per_keyframe_m",
             &config.noise.lidar_z_bias_per_keyframe);
  ReadSigmas(reader, "noise.lidar_white_sigmas",
             &config.noise.lidar_white_sigmas);
  ReadSigmas(reader, "noise.fk_white_sigmas", &config.noise.fk_white_sigmas);
  ReadDouble(reader, "noise.fk_z_sigma_m", &config.noise.fk_z_sigma);
  config.noise.Validate();

  ReadSigmas(reader, "lane.lidar_between_sigmas",
             &config.lane.lidar_between_sigmas);
  ReadSigmas(reader, "lane.fk_between_sigmas", &config.lane.fk_between_sigmas);
  if (const toml::Value* v = reader.Find("lane.coupling_sigmas")) {
    const auto values = v->AsFloatArray();
    if (values.size() != 6) {
      throw std::invalid_argument(
          "config: 'lane.coupling_sigmas' must have exactly 6 entries");
    }
    Twist s;
    for (int i = 0; i < 6; ++i) s(i) = values[i];
    config.lane.coupling = CouplingSigmas(s);
  }
  ReadDouble(reader, "lane.elevation_sigma_m", &config.lane.elevation_sigma);
  ReadSigmas(reader, "lane.anchor_sigmas", &config.lane.anchor_sigmas);
  ReadInt(reader, "lane.couple_every", &config.lane.couple_every);
  if (config.lane.couple_every < 1) {
    throw std::invalid_argument("config: lane.couple_every must be >= 1");
  }

  ReadInt(reader, "solver.max_iterations", &config.solver.max_iterations);
  ReadDouble(reader, "solver.initial_lambda", &config.solver.initial_lambda);
  ReadDouble(reader, "solver.lambda_up", &config.solver.lambda_up);
  ReadDouble(reader, "solver.lambda_down", &config.solver.lambda_down);
  ReadDouble(reader, "solver.relative_cost_tolerance",
             &config.solver.relative_cost_tolerance);
  ReadDouble(reader, "solver.absolute_gradient_tolerance",
             &config.solver.absolute_gradient_tolerance);
  if (config.solver.max_iterations < 1 ||
      !(config.solver.initial_lambda > 0.0) ||
      !(config.solver.lambda_up > 1.0) || !(config.solver.lambda_down > 1.0) ||
      !(config.solver.relative_cost_tolerance > 0.0) ||
      !(config.solver.absolute_gradient_tolerance > 0.0)) {
    throw std::invalid_argument("config: solver settings must be positive");
  }

  if (const toml::Value* v = reader.Find("run.variants")) {
    config.variants.clear();
    for (const std::string& name : v->AsStringArray()) {
      config.variants.push_back(VariantFromName(name));
    }
    if (config.variants.empty()) {
      throw std::invalid_argument("config: run.variants must be non-empty");
    }
  }
  if (const toml::Value* v = reader.Find("run.seeds")) {
    config.seeds.clear();
    for (int64_t s : v->AsIntArray()) {
      if (s < 0) throw std::invalid_argument("config: seeds must be >= 0");
      config.seeds.push_back(static_cast<uint64_t>(s));
    }
    if (config.seeds.empty()) {
      throw std::invalid_argument("config: run.seeds must be non-empty");
    }
  }
  ReadString(reader, "run.output_dir", &config.output_dir);
  ReadBool(reader, "run.plots", &config.plots);

  reader.CheckNoUnknownKeys();
  return config;
}

RunConfig LoadRunConfig(const std::string& path) {
  return ParseRunConfig(ReadFile(path));
}

std::string SerializeRunConfig(const RunConfig& config) {
  std::string out;
  out += "format_version = 1\n";
  out += "rng_algorithm = \"" + RngAlgorithmId() + "\"\n\n";

  out += "[scenario]\n";
  out += "name = \"" + config.scenario.name + "\"\n";
  out += "loop = \"" + LoopShapeName(config.scenario.loop) + "\"\n";
  out += "path_length_m = " + FormatDouble(config.scenario.path_length) + "\n";
  out += "relief_amplitude_m = " +
         FormatDouble(config.scenario.relief_amplitude) + "\n";
  out += "keyframe_spacing_m = " +
         FormatDouble(config.scenario.keyframe_spacing) + "\n";
  out += "fk_rate_hz = " + FormatDouble(config.scenario.fk_rate) + "\n";
  out += "speed_mps = " + FormatDouble(config.scenario.speed) + "\n\n";

  out += "[noise]\n";
  out += "lidar_z_bias_per_keyframe_m = " +
         FormatDouble(config.noise.lidar_z_bias_per_keyframe) + "\n";
  out += "lidar_white_sigmas = " +
         SigmasToml(config.noise.lidar_white_sigmas) + "\n";
  out += "fk_white_sigmas = " + SigmasToml(config.noise.fk_white_sigmas) + "\n";
  out += "fk_z_sigma_m = " + FormatDouble(config.noise.fk_z_sigma) + "\n\n";

  out += "[lane]\n";
  out += "lidar_between_sigmas = " +
         SigmasToml(config.lane.lidar_between_sigmas) + "\n";
  out += "fk_between_sigmas = " + SigmasToml(config.lane.fk_between_sigmas) +
         "\n";
  out += "coupling_sigmas = " + SigmasToml(config.lane.coupling.sigmas()) +
         "\n";
  out += "elevation_sigma_m = " + FormatDouble(config.lane.elevation_sigma) +
         "\n";
  out += "anchor_sigmas = " + SigmasToml(config.lane.anchor_sigmas) + "\n";
  out += "couple_every = " + std::to_string(config.lane.couple_every) + "\n\n";

  out += "[solver]\n";
  out += "max_iterations = " + std::to_string(config.solver.max_iterations) +
         "\n";
  out += "initial_lambda = " + FormatDouble(config.solver.initial_lambda) +
         "\n";
  out += "lambda_up = " + FormatDouble(config.solver.lambda_up) + "\n";
  out += "lambda_down = " + FormatDouble(config.solver.lambda_down) + "\n";
  out += "relative_cost_tolerance = " +
         FormatDouble(config.solver.relative_cost_tolerance) + "\n";
  out += "absolute_gradient_tolerance = " +
         FormatDouble(config.solver.absolute_gradient_tolerance) + "\n\n";

  out += "[run]\n";
  out += "variants = [";
  for (std::size_t i = 0; i < config.variants.size(); ++i) {
    if (i > 0) out += ", ";
    out += "\"" + VariantName(config.variants[i]) + "\"";
  }
  out += "]\n";
  out += "seeds = [";
  for (std::size_t i = 0; i < config.seeds.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(config.seeds[i]);
  }
  out += "]\n";
  out += "output_dir = \"" + config.output_dir + "\"\n";
  out += std::string("plots = ") + (config.plots ? "true" : "false") + "\n";
  return out;
}

}  // namespace legslam
