#pragma once

#include <atomic>
#include <cstdint>

#include "wrc/sim_time.hpp"

namespace wrc::pipes {

/// What a reader sees: the latest value, its write sequence number, and
/// whether that sequence is new for this particular reader.
struct Reading {
    double value = 0.0;
    std::uint64_t seq = 0;
    bool fresh = false;
    SimTime writtenAt = SimTime::zero();
};

/// Latest-value connector between one anonymous source and its sinks.
///
/// Single slot, no history: a control loop must act on the freshest
/// measurement, so each write discards the previous value. One writer, any
/// number of readers, possibly on different threads; publication is a
/// seqlock over atomic fields so readers never see a torn sample.
class Pipe {
public:
    void write(double value, SimTime at) {
        const std::uint64_t v = version_.load(std::memory_order_relaxed);
        version_.store(v + 1, std::memory_order_release);  // odd: write in progress
        value_.store(value, std::memory_order_relaxed);
        seq_.store(seq_.load(std::memory_order_relaxed) + 1, std::memory_order_relaxed);
        at_.store(at.us, std::memory_order_relaxed);
        version_.store(v + 2, std::memory_order_release);
    }

    /// Snapshot of the slot; `fresh` is meaningless here (no reader cursor).
    Reading latest() const {
        Reading r;
        for (;;) {
            const std::uint64_t v1 = version_.load(std::memory_order_acquire);
            if (v1 & 1) continue;
            r.value = value_.load(std::memory_order_relaxed);
            r.seq = seq_.load(std::memory_order_relaxed);
            r.writtenAt = SimTime::fromUs(at_.load(std::memory_order_relaxed));
            std::atomic_thread_fence(std::memory_order_acquire);
            if (version_.load(std::memory_order_relaxed) == v1) break;
        }
        return r;
    }

private:
    std::atomic<std::uint64_t> version_{0};
    std::atomic<double> value_{0.0};
    std::atomic<std::uint64_t> seq_{0};
    std::atomic<std::int64_t> at_{0};
};

/// Per-reader cursor over a pipe. Freshness is relative to this reader's
/// previous call, so independent sinks each get their own view.
class PipeReader {
public:
    PipeReader() = default;
    explicit PipeReader(const Pipe* pipe) : pipe_(pipe) {}

    Reading read() {
        Reading r = pipe_->latest();
        r.fresh = r.seq > lastSeen_;
        lastSeen_ = r.seq;
        return r;
    }

    bool attached() const { return pipe_ != nullptr; }

private:
    const Pipe* pipe_ = nullptr;
    std::uint64_t lastSeen_ = 0;
};

}  // namespace wrc::pipes
