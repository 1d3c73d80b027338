#include "wrc/messages.hpp"

#include <cmath>
#include <cstdlib>

namespace wrc::msg {

namespace {

constexpr std::size_t kSetpointPayload = 11;
constexpr std::size_t kTelemetryPayload = 24;

std::int16_t toWire(double value, double scale, const char* what) {
    const double scaled = std::round(value * scale);
    if (!(scaled >= -32768.0 && scaled <= 32767.0)) {
        throw WireRangeError(std::string(what) + " out of wire range");
    }
    return static_cast<std::int16_t>(scaled);
}

void putI16(std::vector<std::uint8_t>& out, std::int16_t v) {
    const auto u = static_cast<std::uint16_t>(v);
    out.push_back(static_cast<std::uint8_t>(u & 0xFF));
    out.push_back(static_cast<std::uint8_t>(u >> 8));
}

void putU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

std::int16_t getI16(std::span<const std::uint8_t> p, std::size_t at) {
    return static_cast<std::int16_t>(
        static_cast<std::uint16_t>(p[at]) | (static_cast<std::uint16_t>(p[at + 1]) << 8));
}

std::uint16_t getU16(std::span<const std::uint8_t> p, std::size_t at) {
    return static_cast<std::uint16_t>(static_cast<std::uint16_t>(p[at]) |
                                      (static_cast<std::uint16_t>(p[at + 1]) << 8));
}

/// Scale used for the wheel values of a given order kind.
double wheelScale(OrderKind kind) {
    switch (kind) {
        case OrderKind::SetpointVelocity: return 10.0;    // 0.1 rpm
        case OrderKind::SetpointTension: return 1000.0;   // mV
        case OrderKind::SetpointCurrent: return 1.0;      // mA
        case OrderKind::Stop: return 1.0;
    }
    return 1.0;
}

std::vector<std::uint8_t> frame(std::uint8_t type, std::span<const std::uint8_t> payload) {
    std::vector<std::uint8_t> body;
    body.reserve(payload.size() + 3);
    body.push_back(type);
    body.push_back(static_cast<std::uint8_t>(payload.size()));
    body.insert(body.end(), payload.begin(), payload.end());
    body.push_back(crc8(body));

    std::vector<std::uint8_t> out;
    out.reserve(body.size() + 4);
    out.push_back(kFrameFlag);
    for (std::uint8_t b : body) {
        if (b == kFrameFlag || b == kEscape) {
            out.push_back(kEscape);
            out.push_back(static_cast<std::uint8_t>(b ^ kEscapeXor));
        } else {
            out.push_back(b);
        }
    }
    return out;
}

}  // namespace

bool Order::withinLimits() const {
    const auto within = [](double v, double lim) { return v >= -lim && v <= lim; };
    if (!within(steering, 30.0)) return false;
    double lim = 0.0;
    switch (kind) {
        case OrderKind::SetpointVelocity: lim = 300.0; break;
        case OrderKind::SetpointTension: lim = 24.0; break;
        case OrderKind::SetpointCurrent: lim = 5000.0; break;
        case OrderKind::Stop:
            return wheel == std::array<double, 4>{} && steering == 0.0;
    }
    for (double v : wheel) {
        if (!within(v, lim)) return false;
    }
    return true;
}

std::uint8_t crc8(std::span<const std::uint8_t> bytes) {
    std::uint8_t crc = 0x00;
    for (std::uint8_t b : bytes) {
        crc ^= b;
        for (int i = 0; i < 8; ++i) {
            crc = (crc & 0x80) ? static_cast<std::uint8_t>((crc << 1) ^ 0x07)
                               : static_cast<std::uint8_t>(crc << 1);
        }
    }
    return crc;
}

std::vector<std::uint8_t> encodeFrame(const Order& order) {
    if (order.kind == OrderKind::Stop) {
        return frame(kTypeStop, {});
    }
    std::vector<std::uint8_t> payload;
    payload.reserve(kSetpointPayload);
    payload.push_back(static_cast<std::uint8_t>(order.kind));
    const double scale = wheelScale(order.kind);
    for (double v : order.wheel) {
        putI16(payload, toWire(v, scale, "wheel set-point"));
    }
    putI16(payload, toWire(order.steering, 10.0, "steering set-point"));
    return frame(kTypeSetpoint, payload);
}

std::vector<std::uint8_t> encodeFrame(const Telemetry& t) {
    std::vector<std::uint8_t> payload;
    payload.reserve(kTelemetryPayload);
    putU16(payload, t.cycle);
    for (double v : t.measuredVel) {
        putI16(payload, toWire(v, 10.0, "measured velocity"));
    }
    for (double v : t.measuredCur) {
        putI16(payload, toWire(v, 1.0, "measured current"));
    }
    putI16(payload, toWire(t.measuredPos, 10.0, "measured position"));
    putU16(payload, t.computeTimeUs);
    payload.push_back(t.opStateCode);
    payload.push_back(t.modeCode);
    return frame(kTypeTelemetry, payload);
}

std::vector<std::uint8_t> encodeFrame(const Message& message) {
    return std::visit([](const auto& m) { return encodeFrame(m); }, message);
}

void FrameDecoder::reset() {
    state_ = State::Idle;
    escaped_ = false;
    body_.clear();
}

DecodeResult FrameDecoder::feed(std::uint8_t byte) {
    if (byte == kFrameFlag) {
        // Flag bytes never occur inside an escaped body, so this is always
        // the start of a new frame; any partial frame is abandoned.
        state_ = State::Body;
        escaped_ = false;
        body_.clear();
        return std::monostate{};
    }
    if (state_ == State::Idle) {
        return std::monostate{};  // garbage between frames
    }
    if (byte == kEscape) {
        escaped_ = true;
        return std::monostate{};
    }
    if (escaped_) {
        byte ^= kEscapeXor;
        escaped_ = false;
    }
    body_.push_back(byte);
    if (body_.size() >= 2) {
        const std::size_t expected = 2u + body_[1] + 1u;  // type + len + payload + crc
        if (body_.size() == expected) {
            DecodeResult r = completeFrame();
            reset();
            return r;
        }
    }
    return std::monostate{};
}

DecodeResult FrameDecoder::completeFrame() {
    const std::uint8_t type = body_[0];
    const std::uint8_t len = body_[1];
    const std::span<const std::uint8_t> covered(body_.data(), body_.size() - 1);
    if (crc8(covered) != body_.back()) {
        return DecodeError::ChecksumMismatch;
    }
    const std::span<const std::uint8_t> payload(body_.data() + 2, len);
    switch (type) {
        case kTypeStop: {
            if (len != 0) return DecodeError::MalformedPayload;
            return Order::stop();
        }
        case kTypeSetpoint: {
            if (len != kSetpointPayload) return DecodeError::MalformedPayload;
            if (payload[0] > 2) return DecodeError::MalformedPayload;
            Order o;
            o.kind = static_cast<OrderKind>(payload[0]);
            o.source = Source::Pc;
            const double scale = wheelScale(o.kind);
            for (int w = 0; w < 4; ++w) {
                o.wheel[static_cast<std::size_t>(w)] =
                    getI16(payload, 1 + 2 * static_cast<std::size_t>(w)) / scale;
            }
            o.steering = getI16(payload, 9) / 10.0;
            return o;
        }
        case kTypeTelemetry: {
            if (len != kTelemetryPayload) return DecodeError::MalformedPayload;
            Telemetry t;
            t.cycle = getU16(payload, 0);
            for (int w = 0; w < 4; ++w) {
                t.measuredVel[static_cast<std::size_t>(w)] =
                    getI16(payload, 2 + 2 * static_cast<std::size_t>(w)) / 10.0;
            }
            for (int w = 0; w < 4; ++w) {
                t.measuredCur[static_cast<std::size_t>(w)] =
                    getI16(payload, 10 + 2 * static_cast<std::size_t>(w)) / 1.0;
            }
            t.measuredPos = getI16(payload, 18) / 10.0;
            t.computeTimeUs = getU16(payload, 20);
            t.opStateCode = payload[22];
            t.modeCode = payload[23];
            return t;
        }
        default:
            return DecodeError::UnknownType;
    }
}

std::vector<Message> FrameDecoder::drain(std::span<const std::uint8_t> bytes,
                                         std::vector<DecodeError>* errors) {
    std::vector<Message> out;
    for (std::uint8_t b : bytes) {
        DecodeResult r = feed(b);
        if (std::holds_alternative<Order>(r)) {
            out.emplace_back(std::get<Order>(r));
        } else if (std::holds_alternative<Telemetry>(r)) {
            out.emplace_back(std::get<Telemetry>(r));
        } else if (std::holds_alternative<DecodeError>(r) && errors) {
            errors->push_back(std::get<DecodeError>(r));
        }
    }
    return out;
}

}  // namespace wrc::msg
