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

#include "paced/trajectory.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace paced {

namespace {

RefState circle_at(const ReferenceSpec& spec, long k) {
    RefState r;
    const double arg = static_cast<double>(k) / spec.divisor;
    r.p = Vec3(spec.radius * std::sin(arg), spec.radius * std::cos(arg), spec.altitude);
    if (!spec.zero_velocity) {
        // d(p)/dk / Ts: the analytic tangent converted from per-step to m/s.
        const double scale = spec.radius / (spec.divisor * spec.ts);
        r.v = Vec3(scale * std::cos(arg), -scale * std::sin(arg), 0.0);
    }
    return r;
}

RefState waypoints_at(const ReferenceSpec& spec, long k) {
    RefState r;
    const auto& wps = spec.waypoints;
    if (wps.empty()) {
        return r;
    }
    const double t = static_cast<double>(k) * spec.ts;
    if (t <= wps.front().t) {
        r.p = wps.front().p;
        return r;
    }
    if (t >= wps.back().t) {
        r.p = wps.back().p;
        return r;
    }
    std::size_t i = 1;
    while (wps[i].t < t) ++i;
    const Waypoint& a = wps[i - 1];
    const Waypoint& b = wps[i];
    const double span = b.t - a.t;
    const double s = (t - a.t) / span;
    r.p = a.p + s * (b.p - a.p);
    if (!spec.zero_velocity) {
        r.v = (b.p - a.p) / span;
    }
    return r;
}

}  // namespace

RefState reference_at(const ReferenceSpec& spec, long k) {
    switch (spec.kind) {
        case ReferenceSpec::Kind::circle:
            return circle_at(spec, k);
        case ReferenceSpec::Kind::hover: {
            RefState r;
            r.p = spec.hover_point;
            return r;
        }
        case ReferenceSpec::Kind::waypoints:
            return waypoints_at(spec, k);
    }
    return {};
}

std::vector<RefState> reference_window(const ReferenceSpec& spec, long k, int horizon) {
    std::vector<RefState> window;
    window.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int j = 0; j <= horizon; ++j) {
        window.push_back(reference_at(spec, k + j));
    }
    return window;
}

std::vector<Waypoint> load_waypoints_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open waypoint file: " + path);
    }
    std::vector<Waypoint> wps;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        Waypoint w;
        char comma;
        if (!(ss >> w.t >> comma >> w.p.x() >> comma >> w.p.y() >> comma >> w.p.z())) {
            throw ConfigError("bad waypoint row at line " + std::to_string(lineno) +
                              " in " + path);
        }
        if (!wps.empty() && w.t <= wps.back().t) {
            throw ConfigError("waypoint times must be strictly increasing (line " +
                              std::to_string(lineno) + ")");
        }
        wps.push_back(w);
    }
    return wps;
}

}  // namespace paced
