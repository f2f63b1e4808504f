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

#ifndef LEGSLAM_TRAJECTORY_IO_HPP
#define LEGSLAM_TRAJECTORY_IO_HPP

#include <string>
#include <vector>

#include "legslam/lanes.hpp"

namespace legslam {

/// Deterministic %.9g formatting shared by every text emitter.
std::string FormatDouble(double value);

/// TUM trajectory format: `timestamp tx ty tz qx qy qz qw` per line,
/// 9 significant digits, '#'-prefixed comment header.
std::string TumSerialize(const std::vector<OdometrySample>& trajectory,
                         const std::string& comment);

/// Throws std::invalid_argument on malformed lines.
std::vector<OdometrySample> TumParse(const std::string& text);

void WriteFile(const std::string& path, const std::string& content);
std::string ReadFile(const std::string& path);

void WriteTum(const std::string& path,
              const std::vector<OdometrySample>& trajectory,
              const std::string& comment);
std::vector<OdometrySample> ReadTum(const std::string& path);

}  // namespace legslam

#endif  // LEGSLAM_TRAJECTORY_IO_HPP
