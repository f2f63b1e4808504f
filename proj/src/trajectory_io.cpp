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

#include "legslam/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace legslam {

std::string FormatDouble(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

std::string TumSerialize(const std::vector<OdometrySample>& trajectory,
                         const std::string& comment) {
  std::string out;
  if (!comment.empty()) {
    out += "# " + comment + "\n";
  }
  out += "# timestamp tx ty tz qx qy qz qw\n";
  for (const OdometrySample& s : trajectory) {
    const Eigen::Vector3d& t = s.pose.translation();
    const Eigen::Quaterniond& q = s.pose.rotation();
    out += FormatDouble(s.t);
    for (double v : {t.x(), t.y(), t.z(), q.x(), q.y(), q.z(), q.w()}) {
      out += ' ';
      out += FormatDouble(v);
    }
    out += '\n';
  }
  return out;
}

std::vector<OdometrySample> TumParse(const std::string& text) {
  std::vector<OdometrySample> trajectory;
  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    double t, tx, ty, tz, qx, qy, qz, qw;
    std::string extra;
    if (!(fields >> t >> tx >> ty >> tz >> qx >> qy >> qz >> qw) ||
        (fields >> extra)) {
      throw std::invalid_argument("TUM line " + std::to_string(line_number) +
                                  ": expected 8 fields");
    }
    trajectory.push_back(
        {t, Pose3(Eigen::Quaterniond(qw, qx, qy, qz),
                  Eigen::Vector3d(tx, ty, tz))});
  }
  return trajectory;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  file << content;
  if (!file) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

void WriteTum(const std::string& path,
              const std::vector<OdometrySample>& trajectory,
              const std::string& comment) {
  WriteFile(path, TumSerialize(trajectory, comment));
}

std::vector<OdometrySample> ReadTum(const std::string& path) {
  return TumParse(ReadFile(path));
}

}  // namespace legslam
