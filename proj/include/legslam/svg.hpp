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

#ifndef LEGSLAM_SVG_HPP
#define LEGSLAM_SVG_HPP

#include <string>
#include <vector>

#include "legslam/eval.hpp"

namespace legslam {

/// Minimal line chart of estimated vs true elevation over keyframe
/// index. No external tooling; deterministic output.
std::string ElevationProfileSvg(
    const std::vector<ElevationProfilePoint>& profile,
    const std::string& title);

}  // namespace legslam

#endif  // LEGSLAM_SVG_HPP
