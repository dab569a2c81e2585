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

#include "paced/delay_estimator.hpp"

namespace paced {

bool DelayEstimator::record_sample(double sent_at, double received_at) {
    const double tau_new = received_at - sent_at;
    if (tau_new < 0.0) {
        ++rejected_;
        return false;
    }
    last_sample_ = tau_new;

    if (window_ == 0) {
        ++k_;
        tau_hat_ += (tau_new - tau_hat_) / static_cast<double>(k_);
        return true;
    }

    recent_.push_back(tau_new);
    if (recent_.size() > window_) {
        recent_.pop_front();
    }
    ++k_;
    double sum = 0.0;
    for (double s : recent_) sum += s;
    tau_hat_ = sum / static_cast<double>(recent_.size());
    return true;
}

}  // namespace paced
