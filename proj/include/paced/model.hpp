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

#include "paced/types.hpp"

namespace paced {

/// Time derivative of the vehicle state under an applied input.
struct UavDerivative {
    Vec3 v = Vec3::Zero();      // d(position)/dt
    Vec3 a = Vec3::Zero();      // d(velocity)/dt
    double phi_dot = 0.0;
    double theta_dot = 0.0;
};

/// World-from-body rotation, composed Z-Y-X (yaw-pitch-roll).
Mat3 rotation_matrix(double phi, double theta, double psi);

/// Maps mass-normalized collective thrust through the current attitude:
/// U = R(phi, theta, 0) * [0, 0, F]. Result is in acceleration units.
Vec3 thrust_to_force(const ControlInput& u, double phi, double theta);

/// Continuous dynamics. The caller supplies whatever input is actually
/// acting on the vehicle at this instant (in a delayed loop that is the
/// input sent one delay ago).
///   a        = R*[0,0,F] + g - A*v
///   phi_dot  = (K_phi * phi_d - phi) / alpha_phi
///   theta_dot analogous.
UavDerivative uav_derivative(const UavState& s, const ControlInput& u_applied,
                             const UavParams& params);

/// One forward-Euler step. Throws NonFiniteError if the result blows up.
UavState step_uav(const UavState& s, const ControlInput& u_applied,
                  const UavParams& params, double dt);

/// Forward-Euler step of the ballistic obstacle: position advances with the
/// pre-step velocity, then gravity updates the velocity.
ObstacleState step_obstacle(const ObstacleState& o, const UavParams& params, double dt);

}  // namespace paced
