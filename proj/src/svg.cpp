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

#include "legslam/svg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "legslam/trajectory_io.hpp"

namespace legslam {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 50.0;

std::string Polyline(const std::vector<ElevationProfilePoint>& profile,
                     bool estimated, double z_min, double z_max,
                     const std::string& color) {
  const double x_span = std::max<double>(profile.size() - 1, 1);
  const double z_span = std::max(z_max - z_min, 1e-9);
  std::string points;
  for (const auto& p : profile) {
    const double z = estimated ? p.z_estimated : p.z_true;
    const double px = kMargin + (kWidth - 2 * kMargin) * p.index / x_span;
    const double py =
        kHeight - kMargin - (kHeight - 2 * kMargin) * (z - z_min) / z_span;
    points += FormatDouble(px) + "," + FormatDouble(py) + " ";
  }
  return "<polyline fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
}

}  // namespace

std::string ElevationProfileSvg(
    const std::vector<ElevationProfilePoint>& profile,
    const std::string& title) {
  if (profile.empty()) {
    throw std::invalid_argument("ElevationProfileSvg: empty profile");
  }
  double z_min = 0.0, z_max = 0.0;
  for (const auto& p : profile) {
    z_min = std::min({z_min, p.z_estimated, p.z_true});
    z_max = std::max({z_max, p.z_estimated, p.z_true});
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         FormatDouble(kWidth) + "\" height=\"" + FormatDouble(kHeight) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + FormatDouble(kWidth / 2) +
         "\" y=\"25\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + title + "</text>\n";

  // Axes.
  svg += "<line x1=\"" + FormatDouble(kMargin) + "\" y1=\"" +
         FormatDouble(kHeight - kMargin) + "\" x2=\"" +
         FormatDouble(kWidth - kMargin) + "\" y2=\"" +
         FormatDouble(kHeight - kMargin) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + FormatDouble(kMargin) + "\" y1=\"" +
         FormatDouble(kMargin) + "\" x2=\"" + FormatDouble(kMargin) +
         "\" y2=\"" + FormatDouble(kHeight - kMargin) +
         "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + FormatDouble(kMargin) + "\" y=\"" +
         FormatDouble(kMargin - 8) +
         "\" font-family=\"sans-serif\" font-size=\"11\">z [m], range " +
         FormatDouble(z_min) + " to " + FormatDouble(z_max) + "</text>\n";
  svg += "<text x=\"" + FormatDouble(kWidth - kMargin) + "\" y=\"" +
         FormatDouble(kHeight - kMargin + 20) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">keyframe index</text>\n";

  svg += Polyline(profile, false, z_min, z_max, "#2a7e2a");
  svg += Polyline(profile, true, z_min, z_max, "#c0392b");

  // Legend.
  svg += "<text x=\"" + FormatDouble(kWidth - kMargin - 150) +
         "\" y=\"40\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#c0392b\">estimated z</text>\n";
  svg += "<text x=\"" + FormatDouble(kWidth - kMargin - 150) +
         "\" y=\"56\" font-family=\"sans-serif\" font-size=\"12\" "
         "fill=\"#2a7e2a\">true z</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace legslam
