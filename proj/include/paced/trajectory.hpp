/*
 Copyright 2026 The PACED Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include "paced/types.hpp"

namespace paced {

/// Reference state at one controller step: position, feed-forward velocity,
/// level attitude.
struct RefState {
    Vec3 p = Vec3::Zero();
    Vec3 v = Vec3::Zero();
    double phi = 0.0;
    double theta = 0.0;
};

struct Waypoint {
    double t = 0.0;
    Vec3 p = Vec3::Zero();
};

struct ReferenceSpec {
    enum class Kind { circle, hover, waypoints };
    Kind kind = Kind::circle;

    // circle: p = (r sin(k/div), r cos(k/div), altitude), k the controller step
    double radius = 1.0;
    double divisor = 600.0;
    double altitude = 0.8;

    Vec3 hover_point = Vec3(0, 0, 1);

    std::vector<Waypoint> waypoints;  // strictly increasing times

    /// Controller period; the analytic circle velocity is per-step and needs
    /// Ts to convert to m/s.
    double ts = 1.0 / 30.0;
    /// Reproduces the pure position reference (zero velocity feed-forward).
    bool zero_velocity = false;
};

RefState reference_at(const ReferenceSpec& spec, long k);

/// [reference_at(k), ..., reference_at(k+N)] — N+1 entries.
std::vector<RefState> reference_window(const ReferenceSpec& spec, long k, int horizon);

/// Waypoint file: CSV lines `time_s,x,y,z`. Throws ConfigError on bad rows
/// or non-increasing times.
std::vector<Waypoint> load_waypoints_csv(const std::string& path);

}  // namespace paced
