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

#include "paced/model.hpp"

#include <cmath>

namespace paced {

Mat3 rotation_matrix(double phi, double theta, double psi) {
    const double cphi = std::cos(phi), sphi = std::sin(phi);
    const double cth = std::cos(theta), sth = std::sin(theta);
    const double cpsi = std::cos(psi), spsi = std::sin(psi);

    // Rz(psi) * Ry(theta) * Rx(phi), written out.
    Mat3 r;
    r << cpsi * cth, cpsi * sth * sphi - spsi * cphi, cpsi * sth * cphi + spsi * sphi,
         spsi * cth, spsi * sth * sphi + cpsi * cphi, spsi * sth * cphi - cpsi * sphi,
         -sth,       cth * sphi,                      cth * cphi;
    return r;
}

Vec3 thrust_to_force(const ControlInput& u, double phi, double theta) {
    // Third column of R(phi, theta, 0) scaled by F; avoids the full matrix.
    const double cphi = std::cos(phi), sphi = std::sin(phi);
    const double cth = std::cos(theta), sth = std::sin(theta);
    return Vec3(u.F * sth * cphi, -u.F * sphi, u.F * cth * cphi);
}

UavDerivative uav_derivative(const UavState& s, const ControlInput& u_applied,
                             const UavParams& params) {
    UavDerivative d;
    d.v = s.v;
    d.a = thrust_to_force(u_applied, s.phi, s.theta) + params.g_vec -
          params.drag.cwiseProduct(s.v);
    d.phi_dot = (params.k_phi * u_applied.phi_d - s.phi) / params.alpha_phi;
    d.theta_dot = (params.k_theta * u_applied.theta_d - s.theta) / params.alpha_theta;
    return d;
}

UavState step_uav(const UavState& s, const ControlInput& u_applied,
                  const UavParams& params, double dt) {
    const UavDerivative d = uav_derivative(s, u_applied, params);
    UavState next;
    next.p = s.p + dt * d.v;
    next.v = s.v + dt * d.a;
    next.phi = s.phi + dt * d.phi_dot;
    next.theta = s.theta + dt * d.theta_dot;
    next.t = s.t + dt;
    if (!next.finite()) {
        throw NonFiniteError("step_uav: state diverged at t=" + std::to_string(s.t));
    }
    return next;
}

ObstacleState step_obstacle(const ObstacleState& o, const UavParams& params, double dt) {
    ObstacleState next = o;
    next.p = o.p + dt * o.v;
    next.v = o.v + dt * params.g_vec;
    next.t = o.t + dt;
    return next;
}

}  // namespace paced
