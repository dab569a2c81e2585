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

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace paced {

using Vec3 = Eigen::Vector3d;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kGravity = 9.81;

/// World-frame gravity vector [0, 0, -g].
inline Vec3 gravity_vec() { return Vec3(0.0, 0.0, -kGravity); }

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteError : Error {
    explicit NonFiniteError(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

struct SimulationDiverged : Error {
    explicit SimulationDiverged(const std::string& what) : Error(what) {}
};

struct ChannelClosed : Error {
    explicit ChannelClosed(const std::string& what) : Error(what) {}
};

struct EmptyOverlap : Error {
    explicit EmptyOverlap(const std::string& what) : Error(what) {}
};

struct EmptyLog : Error {
    explicit EmptyLog(const std::string& what) : Error(what) {}
};

struct OversizedPayload : Error {
    explicit OversizedPayload(const std::string& what) : Error(what) {}
};

struct SocketError : Error {
    explicit SocketError(const std::string& what) : Error(what) {}
};

/// Vehicle state in the world frame. Yaw is fixed at zero; the attitude
/// degrees of freedom are roll and pitch only.
struct UavState {
    Vec3 p = Vec3::Zero();   // position, m
    Vec3 v = Vec3::Zero();   // velocity, m/s
    double phi = 0.0;        // roll, rad
    double theta = 0.0;      // pitch, rad
    double t = 0.0;          // time, s

    bool finite() const {
        return p.allFinite() && v.allFinite() && std::isfinite(phi) &&
               std::isfinite(theta) && std::isfinite(t);
    }

    /// Operating-regime check: attitude must stay clear of the +-pi/2
    /// singularities. Violations are simulation faults, never clamped.
    bool in_operating_regime() const {
        return std::abs(phi) < M_PI / 2 && std::abs(theta) < M_PI / 2;
    }
};

/// Outer-loop control input. F is mass-normalized total thrust in m/s^2,
/// so hover thrust equals 9.81 regardless of vehicle mass.
struct ControlInput {
    double F = kGravity;
    double phi_d = 0.0;
    double theta_d = 0.0;

    bool finite() const {
        return std::isfinite(F) && std::isfinite(phi_d) && std::isfinite(theta_d);
    }

    Vec3 as_vec() const { return Vec3(F, phi_d, theta_d); }
    static ControlInput from_vec(const Vec3& u) { return {u.x(), u.y(), u.z()}; }
};

/// Level-attitude input that exactly cancels gravity.
inline ControlInput hover_input() { return ControlInput{kGravity, 0.0, 0.0}; }

struct UavParams {
    double mass = 1.0;             // kg; thrust is mass-normalized, kept for reporting
    Vec3 drag = Vec3(0.1, 0.1, 0.2);  // diagonal drag coefficients, 1/s
    double alpha_phi = 0.15;       // roll inner-loop time constant, s
    double alpha_theta = 0.15;     // pitch inner-loop time constant, s
    double k_phi = 1.0;            // roll inner-loop gain
    double k_theta = 1.0;          // pitch inner-loop gain
    Vec3 g_vec = gravity_vec();

    bool valid() const {
        return mass > 0 && alpha_phi > 0 && alpha_theta > 0 && k_phi > 0 &&
               k_theta > 0 && (drag.array() >= 0).all();
    }
};

/// Ballistic obstacle: a point mass under gravity, confined by a collision
/// sphere of radius r_d.
struct ObstacleState {
    Vec3 p = Vec3::Zero();
    Vec3 v = Vec3::Zero();
    double r_d = 0.1;   // collision-sphere radius, m
    double t = 0.0;

    bool finite() const { return p.allFinite() && v.allFinite() && std::isfinite(t); }
};

}  // namespace paced
