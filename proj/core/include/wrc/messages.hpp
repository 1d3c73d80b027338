#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "wrc/errors.hpp"

namespace wrc::msg {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

enum class OrderKind : std::uint8_t {
    SetpointVelocity = 0,  // wheel values in rpm
    SetpointTension = 1,   // wheel values in volts
    SetpointCurrent = 2,   // wheel values in milliamps
    Stop = 3,              // no payload values
};

enum class Source : std::uint8_t {
    Rc = 0,
    Pc = 1,
};

/// A decoded command: wheel and steering set-points, or a stop.
struct Order {
    OrderKind kind = OrderKind::Stop;
    std::array<double, 4> wheel{};  // rpm | V | mA depending on kind
    double steering = 0.0;          // degrees
    Source source = Source::Pc;

    static Order stop(Source src = Source::Pc) { return Order{OrderKind::Stop, {}, 0.0, src}; }
    static Order velocity(const std::array<double, 4>& rpm, double steeringDeg,
                          Source src = Source::Pc) {
        return Order{OrderKind::SetpointVelocity, rpm, steeringDeg, src};
    }

    /// True when every set-point sits inside its engineering range.
    bool withinLimits() const;

    bool operator==(const Order&) const = default;
};

/// Measurements and calculations reported once per control cycle.
struct Telemetry {
    std::uint16_t cycle = 0;
    std::array<double, 4> measuredVel{};  // rpm
    std::array<double, 4> measuredCur{};  // mA
    double measuredPos = 0.0;             // degrees
    std::uint16_t computeTimeUs = 0;
    std::uint8_t opStateCode = 0;
    std::uint8_t modeCode = 0;  // 0 = RC, 1 = PC

    bool operator==(const Telemetry&) const = default;
};

using Message = std::variant<Order, Telemetry>;

// ---------------------------------------------------------------------------
// Wire format
//
// Frame:   0x7E, then the escaped body  type(1) | len(1) | payload(len) | crc(1)
// Escape:  body bytes 0x7E / 0x7D become 0x7D, byte ^ 0x20
// CRC:     CRC-8 poly 0x07, init 0x00, MSB first, no reflection, no final xor,
//          computed over type | len | payload
//
// Set-point payload (11 B): kind u8 (0 vel, 1 tension, 2 current),
//   4 x i16 LE wheel, i16 LE steering.
// Telemetry payload (24 B): u16 cycle, 4 x i16 vel, 4 x i16 cur, i16 pos,
//   u16 computeTime us, u8 opState, u8 mode.
// Scaling: velocity 0.1 rpm, tension mV, current mA, position 0.1 degree.
// ---------------------------------------------------------------------------

inline constexpr std::uint8_t kFrameFlag = 0x7E;
inline constexpr std::uint8_t kEscape = 0x7D;
inline constexpr std::uint8_t kEscapeXor = 0x20;

inline constexpr std::uint8_t kTypeSetpoint = 0x01;
inline constexpr std::uint8_t kTypeStop = 0x02;
inline constexpr std::uint8_t kTypeTelemetry = 0x81;  // high bit: MCU -> PC

/// A set-point value does not fit the i16 wire representation.
class WireRangeError : public Error {
public:
    using Error::Error;
};

std::uint8_t crc8(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encodeFrame(const Order& order);
std::vector<std::uint8_t> encodeFrame(const Telemetry& telemetry);
std::vector<std::uint8_t> encodeFrame(const Message& message);

enum class DecodeError : std::uint8_t {
    ChecksumMismatch,
    UnknownType,
    MalformedPayload,
};

/// feed() result: nothing yet, a complete message, or a frame-level error.
using DecodeResult = std::variant<std::monostate, Order, Telemetry, DecodeError>;

/// Incremental, resynchronising frame decoder. One instance per link;
/// a flag byte in mid-frame abandons the partial frame and starts a new one.
class FrameDecoder {
public:
    DecodeResult feed(std::uint8_t byte);

    /// Convenience: feed a buffer, collecting every complete message.
    std::vector<Message> drain(std::span<const std::uint8_t> bytes,
                               std::vector<DecodeError>* errors = nullptr);

    void reset();

private:
    DecodeResult completeFrame();

    enum class State { Idle, Body };
    State state_ = State::Idle;
    bool escaped_ = false;
    std::vector<std::uint8_t> body_;  // unescaped: type, len, payload..., crc
};

}  // namespace wrc::msg
