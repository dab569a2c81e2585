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
#include <span>
#include <variant>
#include <vector>

#include "paced/channel.hpp"
#include "paced/types.hpp"

namespace paced::wire {

// Datagram layout, little-endian throughout:
//   offset 0   magic      "PC5G"
//   offset 4   version    1 byte (= 1)
//   offset 5   msg_type   1 byte
//   offset 6   seq        u32
//   offset 10  sent_at_us u64
//   offset 18  payload_len u16
//   offset 20  payload    payload_len bytes of f64, plus a trailing u64 for echoes
inline constexpr std::uint8_t kMagic[4] = {0x50, 0x43, 0x35, 0x47};  // "PC5G"
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 20;

enum class MsgType : std::uint8_t {
    control_command = 1,
    uav_odometry = 2,
    obstacle_odometry = 3,
    command_echo = 4,
    heartbeat = 5,
};

/// Echo payload on the wire: the echoed command plus the original send
/// timestamp, preserved bit-exact.
struct WireEcho {
    ControlInput input;
    std::uint64_t echo_of_us = 0;
};

struct Heartbeat {};

using WirePayload =
    std::variant<ControlCommand, UavOdometry, ObstacleOdometry, WireEcho, Heartbeat>;

struct WireMessage {
    std::uint32_t seq = 0;
    std::uint64_t sent_at_us = 0;
    WirePayload payload = Heartbeat{};
};

enum class DecodeError : std::uint8_t {
    none = 0,
    bad_magic,
    bad_version,
    bad_length,
    unknown_type,
};

const char* decode_error_name(DecodeError err);

struct DecodeResult {
    DecodeError error = DecodeError::none;
    WireMessage msg;
    bool ok() const { return error == DecodeError::none; }
};

MsgType message_type(const WirePayload& payload);

/// Fixed payload size in bytes for each message type.
std::size_t payload_size(MsgType type);

std::vector<std::uint8_t> encode(const WireMessage& msg);

/// Total over arbitrary bytes: returns a typed error instead of throwing.
DecodeResult decode(std::span<const std::uint8_t> bytes);

}  // namespace paced::wire
