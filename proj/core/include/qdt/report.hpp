// Copyright 2026 The qdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <vector>

#include "qdt/experiments.hpp"

namespace qdt {

struct EmitOptions {
  std::filesystem::path out_dir;
  bool svg = false;
};

// Writes the machine-readable report for one experiment run and returns
// the paths written. Every file is a pure function of the result object:
// reruns with the same config and seed produce byte-identical output.
//
//   search / classify:  shots.csv (trial, shot, strategy, observable_index,
//                       outcome, p_value), summary.json, optional SVG of the
//                       median p-value with the 25-75% band
//   scaling / bias:     series.csv (x, mean_gain, predicted_gain),
//                       summary.json, optional SVG
std::vector<std::filesystem::path> emit_report(const SearchResult& result,
                                               const EmitOptions& options);
std::vector<std::filesystem::path> emit_report(const ScalingResult& result,
                                               const EmitOptions& options);
std::vector<std::filesystem::path> emit_report(const BiasResult& result,
                                               const EmitOptions& options);
std::vector<std::filesystem::path> emit_report(const ClassifyResult& result,
                                               const EmitOptions& options);

/// Shortest round-trip decimal representation (std::to_chars); the one
/// float formatter used in CSV and SVG output.
std::string format_double(double value);

}  // namespace qdt
