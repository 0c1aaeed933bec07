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

#include "mcvx/harness/config.hpp"

#include <fstream>

#include "mcvx/error.hpp"

namespace mcvx::harness {

using nlohmann::json;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over (seed, stream).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  try {
    ExperimentConfig cfg;
    cfg.d = j.at("d").get<std::size_t>();
    if (cfg.d == 0) throw ConfigError("d must be positive");
    cfg.horizon = j.value("T", std::size_t{0});
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.family = j.at("family");
    if (j.contains("agent")) cfg.agent = j.at("agent");
    if (j.contains("corruption")) cfg.corruption = j.at("corruption");
    const json learner = j.value("learner", json::object());
    cfg.learner.variant =
        parse_variant(learner.value("variant", std::string("centroid")));
    cfg.learner.exact_geometry = learner.value("exact_geometry", true);
    cfg.learner.geometry.exact_max_dim =
        learner.value("exact_max_dim", std::size_t{9});
    cfg.learner.fallback_samples =
        learner.value("fallback_samples", std::size_t{2000});
    cfg.learner.seed = derive_seed(cfg.seed, 3);
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

ExperimentConfig ExperimentConfig::with_seed(std::uint64_t new_seed) const {
  ExperimentConfig copy = *this;
  copy.seed = new_seed;
  copy.learner.seed = derive_seed(new_seed, 3);
  return copy;
}

json ExperimentConfig::to_json() const {
  return {{"d", d},
          {"T", horizon},
          {"seed", seed},
          {"family", family},
          {"agent", agent},
          {"corruption", corruption},
          {"learner",
           {{"variant", mcvx::to_string(learner.variant)},
            {"exact_geometry", learner.exact_geometry},
            {"exact_max_dim", learner.geometry.exact_max_dim},
            {"fallback_samples", learner.fallback_samples}}}};
}

}  // namespace mcvx::harness
