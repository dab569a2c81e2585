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

#include "paced/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace paced {

DelayModel::DelayModel(const Params& params) : params_(params), rng_(params.seed) {
    walk_ = clamp(params_.base_s);
    if (params_.kind == Kind::trace) {
        std::ifstream in(params_.trace_path);
        if (!in) {
            throw ConfigError("cannot open delay trace: " + params_.trace_path);
        }
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ss(line);
            double t = 0.0, d = 0.0;
            if (!(ss >> t >> d)) {
                throw ConfigError("bad trace row at line " + std::to_string(lineno) +
                                  " in " + params_.trace_path);
            }
            if (!trace_.empty() && t <= trace_.back().first) {
                throw ConfigError("trace times must be increasing (line " +
                                  std::to_string(lineno) + ")");
            }
            trace_.emplace_back(t, d);
        }
        if (trace_.empty()) {
            throw ConfigError("empty delay trace: " + params_.trace_path);
        }
    }
}

DelayModel DelayModel::constant(double delay_s) {
    Params p;
    p.kind = Kind::constant;
    p.base_s = delay_s;
    p.min_s = 0.0;
    p.max_s = std::max(delay_s, p.max_s);
    return DelayModel(p);
}

double DelayModel::clamp(double d) const {
    return std::min(std::max(d, std::max(params_.min_s, 0.0)), params_.max_s);
}

double DelayModel::sample(double now) {
    switch (params_.kind) {
        case Kind::constant:
            return clamp(params_.base_s);
        case Kind::sinusoidal:
            return clamp(params_.base_s +
                         params_.amplitude_s *
                             std::sin(2.0 * M_PI * now / params_.period_s));
        case Kind::random_walk: {
            std::uniform_real_distribution<double> step(-params_.step_s, params_.step_s);
            walk_ = clamp(walk_ + step(rng_));
            return walk_;
        }
        case Kind::trace: {
            // Zero-order hold on the trace.
            auto it = std::upper_bound(
                trace_.begin(), trace_.end(), now,
                [](double t, const std::pair<double, double>& row) { return t < row.first; });
            if (it == trace_.begin()) return clamp(it->second);
            return clamp(std::prev(it)->second);
        }
    }
    return clamp(params_.base_s);
}

void SimChannel::send(const TimestampedMessage& msg, double now) {
    if (closed_) {
        throw ChannelClosed("send on closed channel");
    }
    if (now >= blackout_start_ && now < blackout_end_) {
        return;  // link down, datagram lost
    }
    const double release = now + model_.sample(now);
    queue_.emplace(std::make_pair(release, arrival_counter_++), msg);
}

std::vector<Delivery> SimChannel::poll(double now) {
    std::vector<Delivery> due;
    auto it = queue_.begin();
    while (it != queue_.end() && it->first.first <= now) {
        due.push_back(Delivery{it->first.first, it->second});
        it = queue_.erase(it);
    }
    return due;
}

}  // namespace paced
