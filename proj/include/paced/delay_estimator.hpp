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

#include <cstddef>
#include <cstdint>
#include <deque>

namespace paced {

/// Running estimate of the closed-loop delay, fed by timestamp-echo samples.
///
/// Default form is the cumulative mean recursion
///   tau(k+1) = tau(k) + (tau_new - tau(k)) / (k+1),   tau(0) = 0,
/// where tau_new = received_at - sent_at of one echoed command. A true
/// sliding-window mean is available for long runs with drifting delay
/// (window > 0); the cumulative form is the default.
///
/// Samples with received_at < sent_at (clock skew) are rejected: the
/// estimate and count stay unchanged and a diagnostic counter increments.
class DelayEstimator {
  public:
    DelayEstimator() = default;
    /// window == 0 selects the cumulative mean; window >= 1 keeps the mean
    /// of the most recent `window` accepted samples.
    explicit DelayEstimator(std::size_t window) : window_(window) {}

    /// Feeds one echo sample. Returns false (and counts the rejection) when
    /// the sample is negative.
    bool record_sample(double sent_at, double received_at);

    /// Current tau-hat in seconds; 0 before any sample is accepted.
    double current_estimate() const { return tau_hat_; }

    std::uint64_t sample_count() const { return k_; }
    std::uint64_t rejected_count() const { return rejected_; }
    double last_sample() const { return last_sample_; }
    std::size_t window() const { return window_; }

  private:
    double tau_hat_ = 0.0;
    double last_sample_ = 0.0;
    std::uint64_t k_ = 0;
    std::uint64_t rejected_ = 0;
    std::size_t window_ = 0;            // 0 = cumulative
    std::deque<double> recent_;         // only used when window_ > 0
};

}  // namespace paced
