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

#ifndef LEGSLAM_TOML_HPP
#define LEGSLAM_TOML_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace legslam::toml {

/// The TOML subset used by config files: [section] tables, string /
/// number / boolean scalars, single-line arrays, and # comments.
struct Value {
  enum class Kind { kString, kFloat, kInt, kBool, kArray };
  Kind kind = Kind::kString;
  std::string string_value;
  double float_value = 0.0;
  int64_t int_value = 0;
  bool bool_value = false;
  std::vector<Value> array;

  double AsFloat() const;  // accepts integers too
  int64_t AsInt() const;
  bool AsBool() const;
  const std::string& AsString() const;
  std::vector<double> AsFloatArray() const;
  std::vector<int64_t> AsIntArray() const;
  std::vector<std::string> AsStringArray() const;
};

/// Keys are flattened to "section.key". Throws std::invalid_argument
/// with a line number on malformed input or duplicate keys.
std::map<std::string, Value> Parse(const std::string& text);

}  // namespace legslam::toml

#endif  // LEGSLAM_TOML_HPP
