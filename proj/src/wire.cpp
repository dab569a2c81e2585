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

#include "paced/wire.hpp"

#include <bit>
#include <cstring>

namespace paced::wire {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
    put_u64(out, std::bit_cast<std::uint64_t>(v));
}

std::uint16_t get_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

double get_f64(const std::uint8_t* p) { return std::bit_cast<double>(get_u64(p)); }

}  // namespace

const char* decode_error_name(DecodeError err) {
    switch (err) {
        case DecodeError::none: return "none";
        case DecodeError::bad_magic: return "bad_magic";
        case DecodeError::bad_version: return "bad_version";
        case DecodeError::bad_length: return "bad_length";
        case DecodeError::unknown_type: return "unknown_type";
    }
    return "unknown";
}

MsgType message_type(const WirePayload& payload) {
    if (std::holds_alternative<ControlCommand>(payload)) return MsgType::control_command;
    if (std::holds_alternative<UavOdometry>(payload)) return MsgType::uav_odometry;
    if (std::holds_alternative<ObstacleOdometry>(payload)) return MsgType::obstacle_odometry;
    if (std::holds_alternative<WireEcho>(payload)) return MsgType::command_echo;
    return MsgType::heartbeat;
}

std::size_t payload_size(MsgType type) {
    switch (type) {
        case MsgType::control_command: return 3 * 8;
        case MsgType::uav_odometry: return 8 * 8;
        case MsgType::obstacle_odometry: return 6 * 8;
        case MsgType::command_echo: return 3 * 8 + 8;
        case MsgType::heartbeat: return 0;
    }
    return 0;
}

std::vector<std::uint8_t> encode(const WireMessage& msg) {
    const MsgType type = message_type(msg.payload);
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + payload_size(type));

    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(type));
    put_u32(out, msg.seq);
    put_u64(out, msg.sent_at_us);
    put_u16(out, static_cast<std::uint16_t>(payload_size(type)));

    if (const auto* cmd = std::get_if<ControlCommand>(&msg.payload)) {
        put_f64(out, cmd->input.F);
        put_f64(out, cmd->input.phi_d);
        put_f64(out, cmd->input.theta_d);
    } else if (const auto* odo = std::get_if<UavOdometry>(&msg.payload)) {
        for (int i = 0; i < 3; ++i) put_f64(out, odo->p[i]);
        for (int i = 0; i < 3; ++i) put_f64(out, odo->v[i]);
        put_f64(out, odo->phi);
        put_f64(out, odo->theta);
    } else if (const auto* obs = std::get_if<ObstacleOdometry>(&msg.payload)) {
        for (int i = 0; i < 3; ++i) put_f64(out, obs->p[i]);
        for (int i = 0; i < 3; ++i) put_f64(out, obs->v[i]);
    } else if (const auto* echo = std::get_if<WireEcho>(&msg.payload)) {
        put_f64(out, echo->input.F);
        put_f64(out, echo->input.phi_d);
        put_f64(out, echo->input.theta_d);
        put_u64(out, echo->echo_of_us);
    }
    return out;
}

DecodeResult decode(std::span<const std::uint8_t> bytes) {
    DecodeResult res;
    if (bytes.size() < kHeaderSize) {
        res.error = DecodeError::bad_length;
        return res;
    }
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
        res.error = DecodeError::bad_magic;
        return res;
    }
    if (bytes[4] != kVersion) {
        res.error = DecodeError::bad_version;
        return res;
    }
    const std::uint8_t raw_type = bytes[5];
    if (raw_type < 1 || raw_type > 5) {
        res.error = DecodeError::unknown_type;
        return res;
    }
    const MsgType type = static_cast<MsgType>(raw_type);
    const std::uint16_t payload_len = get_u16(bytes.data() + 18);
    if (payload_len != payload_size(type) || bytes.size() != kHeaderSize + payload_len) {
        res.error = DecodeError::bad_length;
        return res;
    }

    res.msg.seq = get_u32(bytes.data() + 6);
    res.msg.sent_at_us = get_u64(bytes.data() + 10);
    const std::uint8_t* p = bytes.data() + kHeaderSize;

    switch (type) {
        case MsgType::control_command: {
            ControlCommand cmd;
            cmd.input.F = get_f64(p);
            cmd.input.phi_d = get_f64(p + 8);
            cmd.input.theta_d = get_f64(p + 16);
            res.msg.payload = cmd;
            break;
        }
        case MsgType::uav_odometry: {
            UavOdometry odo;
            for (int i = 0; i < 3; ++i) odo.p[i] = get_f64(p + 8 * i);
            for (int i = 0; i < 3; ++i) odo.v[i] = get_f64(p + 24 + 8 * i);
            odo.phi = get_f64(p + 48);
            odo.theta = get_f64(p + 56);
            res.msg.payload = odo;
            break;
        }
        case MsgType::obstacle_odometry: {
            ObstacleOdometry obs;
            for (int i = 0; i < 3; ++i) obs.p[i] = get_f64(p + 8 * i);
            for (int i = 0; i < 3; ++i) obs.v[i] = get_f64(p + 24 + 8 * i);
            res.msg.payload = obs;
            break;
        }
        case MsgType::command_echo: {
            WireEcho echo;
            echo.input.F = get_f64(p);
            echo.input.phi_d = get_f64(p + 8);
            echo.input.theta_d = get_f64(p + 16);
            echo.echo_of_us = get_u64(p + 24);
            res.msg.payload = echo;
            break;
        }
        case MsgType::heartbeat:
            res.msg.payload = Heartbeat{};
            break;
    }
    return res;
}

}  // namespace paced::wire
