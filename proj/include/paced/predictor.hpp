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

#include <vector>

#include "paced/types.hpp"

namespace paced {

/// UAV state extrapolated tau seconds past the observation.
struct PredictedState {
    Vec3 p_hat = Vec3::Zero();
    Vec3 v_hat = Vec3::Zero();
    double phi_hat = 0.0;
    double theta_hat = 0.0;
    double tau_used = 0.0;
};

struct PredictedObstacle {
    Vec3 p_hat = Vec3::Zero();
    Vec3 v_hat = Vec3::Zero();
};

struct PredictorOptions {
    /// Velocity used in the position extrapolation p_hat = p + v * tau:
    /// the just-predicted v_hat (tighter, default) or the observed velocity.
    enum class PositionVelocity { predicted, current };
    /// Attitude extrapolation: the implicit one-step discretization of the
    /// inner-loop lag (default, preserves the zero-delay identity), or the
    /// literal printed form kept for comparison runs only.
    enum class AttitudeForm { implicit, literal };

    PositionVelocity position_velocity = PositionVelocity::predicted;
    AttitudeForm attitude_form = AttitudeForm::implicit;
};

/// Extrapolates a delayed observation forward by tau under the last input
/// known to be acting on the vehicle (the most recent echoed command).
///
/// Velocity uses the implicit one-step form, unconditionally contractive
/// under drag:
///   v_hat = (I + A tau)^-1 (v + (U + g) tau),  U = R(attitude) [0,0,F]
/// Position: p_hat = p + v_hat tau. Attitude: implicit step of the
/// first-order lag. tau = 0 returns the observation exactly.
PredictedState predict_uav(const UavState& observed, const ControlInput& last_input,
                           double tau, const UavParams& params,
                           const PredictorOptions& opts = {});

/// Ballistic first-order extrapolation: position advances with the observed
/// velocity, velocity picks up gravity. (A closed ballistic form would add
/// 0.5 g tau^2 to the position; the first-order form is used as is.)
PredictedObstacle predict_obstacle(const ObstacleState& observed, double tau);

/// One sample of a position time series.
struct TimedSample {
    double t = 0.0;
    Vec3 value = Vec3::Zero();
};

/// Error series of a prediction log against ground truth. Each predicted
/// sample's `t` is the TARGET time (observation time + tau); it is matched
/// to the nearest actual sample within half the actual log's median spacing.
struct PredictionErrorSeries {
    std::vector<double> t;
    std::vector<double> ex, ey, ez, enorm;
    double rms_x = 0.0, rms_y = 0.0, rms_z = 0.0, rms_euclidean = 0.0;
};

/// Throws EmptyOverlap when no predicted sample aligns with the actual log.
PredictionErrorSeries prediction_error(const std::vector<TimedSample>& predicted,
                                       const std::vector<TimedSample>& actual);

}  // namespace paced
