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

#include "paced/predictor.hpp"

#include <algorithm>
#include <cmath>

#include "paced/model.hpp"

namespace paced {

PredictedState predict_uav(const UavState& observed, const ControlInput& last_input,
                           double tau, const UavParams& params,
                           const PredictorOptions& opts) {
    if (!observed.finite() || !last_input.finite() || !std::isfinite(tau)) {
        throw NonFiniteError("predict_uav: non-finite input");
    }

    // The echoed thrust is mapped through the observed (delayed) attitude,
    // which is the attitude actually available to the estimator.
    const Vec3 u_world = thrust_to_force(last_input, observed.phi, observed.theta);
    const Vec3 forced = u_world + params.g_vec;

    PredictedState out;
    out.tau_used = tau;
    for (int i = 0; i < 3; ++i) {
        out.v_hat[i] = (observed.v[i] + forced[i] * tau) / (1.0 + params.drag[i] * tau);
    }

    const Vec3 pos_vel = (opts.position_velocity == PredictorOptions::PositionVelocity::predicted)
                             ? out.v_hat
                             : observed.v;
    out.p_hat = observed.p + pos_vel * tau;

    if (opts.attitude_form == PredictorOptions::AttitudeForm::implicit) {
        out.phi_hat = (observed.phi + (params.k_phi * tau / params.alpha_phi) * last_input.phi_d) /
                      (1.0 + tau / params.alpha_phi);
        out.theta_hat =
            (observed.theta + (params.k_theta * tau / params.alpha_theta) * last_input.theta_d) /
            (1.0 + tau / params.alpha_theta);
    } else {
        // Literal printed form. The trailing tau factor kills the constant
        // term as tau -> 0, so this variant breaks the zero-delay identity;
        // it exists for side-by-side comparison only.
        out.phi_hat = (observed.phi - (params.k_phi / params.alpha_phi) * last_input.phi_d) * tau /
                      (1.0 + tau / params.alpha_phi);
        out.theta_hat =
            (observed.theta - (params.k_theta / params.alpha_theta) * last_input.theta_d) * tau /
            (1.0 + tau / params.alpha_theta);
    }
    return out;
}

PredictedObstacle predict_obstacle(const ObstacleState& observed, double tau) {
    if (!observed.finite() || !std::isfinite(tau)) {
        throw NonFiniteError("predict_obstacle: non-finite input");
    }
    PredictedObstacle out;
    out.p_hat = observed.p + observed.v * tau;
    out.v_hat = observed.v + gravity_vec() * tau;
    return out;
}

namespace {

double median_spacing(const std::vector<TimedSample>& log) {
    if (log.size() < 2) return 0.0;
    std::vector<double> gaps;
    gaps.reserve(log.size() - 1);
    for (std::size_t i = 1; i < log.size(); ++i) {
        gaps.push_back(log[i].t - log[i - 1].t);
    }
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    return gaps[gaps.size() / 2];
}

double rms(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += x * x;
    return std::sqrt(acc / static_cast<double>(xs.size()));
}

}  // namespace

PredictionErrorSeries prediction_error(const std::vector<TimedSample>& predicted,
                                       const std::vector<TimedSample>& actual) {
    PredictionErrorSeries out;
    if (predicted.empty() || actual.empty()) {
        throw EmptyOverlap("prediction_error: empty log");
    }
    const double half_dt = actual.size() > 1 ? 0.5 * median_spacing(actual) : 0.0;

    // actual is time-ordered; walk it once while scanning predictions.
    std::size_t j = 0;
    for (const TimedSample& pred : predicted) {
        while (j + 1 < actual.size() &&
               std::abs(actual[j + 1].t - pred.t) <= std::abs(actual[j].t - pred.t)) {
            ++j;
        }
        // Restart the scan for out-of-order prediction targets.
        if (j > 0 && std::abs(actual[j].t - pred.t) > half_dt) {
            j = 0;
            while (j + 1 < actual.size() &&
                   std::abs(actual[j + 1].t - pred.t) <= std::abs(actual[j].t - pred.t)) {
                ++j;
            }
        }
        if (std::abs(actual[j].t - pred.t) > half_dt + 1e-12) continue;

        const Vec3 err = pred.value - actual[j].value;
        out.t.push_back(pred.t);
        out.ex.push_back(err.x());
        out.ey.push_back(err.y());
        out.ez.push_back(err.z());
        out.enorm.push_back(err.norm());
    }
    if (out.t.empty()) {
        throw EmptyOverlap("prediction_error: no aligned samples");
    }
    out.rms_x = rms(out.ex);
    out.rms_y = rms(out.ey);
    out.rms_z = rms(out.ez);
    out.rms_euclidean = rms(out.enorm);
    return out;
}

}  // namespace paced
