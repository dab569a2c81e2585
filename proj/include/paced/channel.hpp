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

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "paced/types.hpp"

namespace paced {

// Message payloads carried by the control loop. These mirror the datagram
// schemas one to one so the in-process channels and the UDP tunnel are
// interchangeable.
struct ControlCommand {
    ControlInput input;
};

struct UavOdometry {
    Vec3 p = Vec3::Zero();
    Vec3 v = Vec3::Zero();
    double phi = 0.0;
    double theta = 0.0;
};

struct ObstacleOdometry {
    Vec3 p = Vec3::Zero();
    Vec3 v = Vec3::Zero();
};

struct CommandEcho {
    ControlInput input;
    double echo_of = 0.0;  // sent_at of the original command, same clock
};

using Payload = std::variant<ControlCommand, UavOdometry, ObstacleOdometry, CommandEcho>;

struct TimestampedMessage {
    std::uint64_t seq = 0;
    double sent_at = 0.0;  // virtual-clock seconds
    Payload payload;
};

/// Per-direction delay source. All randomness is seeded; identical seeds
/// give identical delay sequences.
class DelayModel {
  public:
    enum class Kind { constant, sinusoidal, random_walk, trace };

    struct Params {
        Kind kind = Kind::constant;
        double base_s = 0.05;
        double amplitude_s = 0.0;   // sinusoidal
        double period_s = 10.0;     // sinusoidal
        double step_s = 0.003;      // random walk, uniform +- step per sample
        double min_s = 0.0;
        double max_s = 0.5;
        std::uint64_t seed = 1;
        std::string trace_path;     // trace
    };

    DelayModel() : DelayModel(Params{}) {}
    explicit DelayModel(const Params& params);

    static DelayModel constant(double delay_s);

    /// Next delay for a message sent at `now`. Mutates walk state.
    double sample(double now);

    const Params& params() const { return params_; }

  private:
    Params params_;
    double walk_ = 0.0;
    std::mt19937_64 rng_;
    std::vector<std::pair<double, double>> trace_;  // (time, delay), ZOH

    double clamp(double d) const;
};

struct Delivery {
    double delivered_at = 0.0;
    TimestampedMessage msg;
};

/// Deterministic virtual-clock message channel. Each message is released
/// send-time + sampled delay; poll() hands out everything due, ordered by
/// release time (ties by send order). A falling delay can reorder releases;
/// receivers resolve that with a StalenessFilter.
class SimChannel {
  public:
    SimChannel() = default;
    explicit SimChannel(DelayModel model) : model_(std::move(model)) {}

    void send(const TimestampedMessage& msg, double now);
    std::vector<Delivery> poll(double now);

    void close() { closed_ = true; }
    bool closed() const { return closed_; }
    std::size_t pending() const { return queue_.size(); }

    /// Scripted link blackout: messages sent inside [start, start+duration)
    /// are lost. Used for safety-monitor fault injection; off by default.
    void set_blackout(double start_s, double duration_s) {
        blackout_start_ = start_s;
        blackout_end_ = start_s + duration_s;
    }

  private:
    DelayModel model_;
    bool closed_ = false;
    std::uint64_t arrival_counter_ = 0;
    double blackout_start_ = std::numeric_limits<double>::infinity();
    double blackout_end_ = -std::numeric_limits<double>::infinity();
    // key: (release time, arrival order)
    std::multimap<std::pair<double, std::uint64_t>, TimestampedMessage> queue_;
};

/// Keeps only messages fresher than anything already seen (strictly newer
/// sent_at). Gives UDP-style streams well-defined receiver semantics.
class StalenessFilter {
  public:
    bool accept(const TimestampedMessage& msg) {
        if (msg.sent_at > latest_seen_) {
            latest_seen_ = msg.sent_at;
            return true;
        }
        return false;
    }
    double latest_seen() const { return latest_seen_; }

  private:
    double latest_seen_ = -std::numeric_limits<double>::infinity();
};

}  // namespace paced
