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

#include "legslam/toml.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace legslam::toml {

namespace {

[[noreturn]] void Fail(int line, const std::string& message) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " +
                              message);
}

std::string Trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Strips a trailing comment, respecting quoted strings.
std::string StripComment(const std::string& s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_string = !in_string;
    if (s[i] == '#' && !in_string) return s.substr(0, i);
  }
  return s;
}

Value ParseScalar(const std::string& token, int line) {
  Value v;
  if (token.size() >= 2 && token.front() == '"' && token.back() == '"') {
    v.kind = Value::Kind::kString;
    v.string_value = token.substr(1, token.size() - 2);
    return v;
  }
  if (token == "true" || token == "false") {
    v.kind = Value::Kind::kBool;
    v.bool_value = (token == "true");
    return v;
  }
  const bool looks_float = token.find_first_of(".eE") != std::string::npos ||
                           token == "inf" || token == "nan";
  char* end = nullptr;
  if (looks_float) {
    v.kind = Value::Kind::kFloat;
    v.float_value = std::strtod(token.c_str(), &end);
  } else {
    v.kind = Value::Kind::kInt;
    v.int_value = std::strtoll(token.c_str(), &end, 10);
  }
  if (end == nullptr || *end != '\0' || token.empty()) {
    Fail(line, "cannot parse value '" + token + "'");
  }
  return v;
}

Value ParseValue(const std::string& raw, int line) {
  const std::string token = Trim(raw);
  if (token.size() >= 2 && token.front() == '[' && token.back() == ']') {
    Value v;
    v.kind = Value::Kind::kArray;
    const std::string inner = token.substr(1, token.size() - 2);
    std::string item;
    bool in_string = false;
    for (char c : inner) {
      if (c == '"') in_string = !in_string;
      if (c == ',' && !in_string) {
        if (!Trim(item).empty()) v.array.push_back(ParseScalar(Trim(item), line));
        item.clear();
      } else {
        item += c;
      }
    }
    if (!Trim(item).empty()) v.array.push_back(ParseScalar(Trim(item), line));
    // Arrays must be homogeneous; ints and floats count as one class.
    auto klass = [](Value::Kind k) {
      return k == Value::Kind::kInt ? Value::Kind::kFloat : k;
    };
    for (const Value& element : v.array) {
      if (klass(element.kind) != klass(v.array.front().kind)) {
        Fail(line, "mixed value kinds in array");
      }
    }
    return v;
  }
  return ParseScalar(token, line);
}

}  // namespace

double Value::AsFloat() const {
  if (kind == Kind::kFloat) return float_value;
  if (kind == Kind::kInt) return static_cast<double>(int_value);
  throw std::invalid_argument("config: expected a number");
}

int64_t Value::AsInt() const {
  if (kind == Kind::kInt) return int_value;
  throw std::invalid_argument("config: expected an integer");
}

bool Value::AsBool() const {
  if (kind == Kind::kBool) return bool_value;
  throw std::invalid_argument("config: expected a boolean");
}

const std::string& Value::AsString() const {
  if (kind == Kind::kString) return string_value;
  throw std::invalid_argument("config: expected a string");
}

std::vector<double> Value::AsFloatArray() const {
  if (kind != Kind::kArray) throw std::invalid_argument("config: expected an array");
  std::vector<double> out;
  for (const Value& v : array) out.push_back(v.AsFloat());
  return out;
}

std::vector<int64_t> Value::AsIntArray() const {
  if (kind != Kind::kArray) throw std::invalid_argument("config: expected an array");
  std::vector<int64_t> out;
  for (const Value& v : array) out.push_back(v.AsInt());
  return out;
}

std::vector<std::string> Value::AsStringArray() const {
  if (kind != Kind::kArray) throw std::invalid_argument("config: expected an array");
  std::vector<std::string> out;
  for (const Value& v : array) out.push_back(v.AsString());
  return out;
}

std::map<std::string, Value> Parse(const std::string& text) {
  std::map<std::string, Value> table;
  std::istringstream stream(text);
  std::string raw_line;
  std::string section;
  int line_number = 0;

  while (std::getline(stream, raw_line)) {
    ++line_number;
    const std::string line = Trim(StripComment(raw_line));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') Fail(line_number, "unterminated section header");
      section = Trim(line.substr(1, line.size() - 2));
      if (section.empty()) Fail(line_number, "empty section name");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) Fail(line_number, "expected key = value");
    const std::string key = Trim(line.substr(0, eq));
    if (key.empty()) Fail(line_number, "empty key");
    const std::string full_key = section.empty() ? key : section + "." + key;
    if (table.count(full_key) != 0) {
      Fail(line_number, "duplicate key '" + full_key + "'");
    }
    table.emplace(full_key, ParseValue(line.substr(eq + 1), line_number));
  }
  return table;
}

}  // namespace legslam::toml
