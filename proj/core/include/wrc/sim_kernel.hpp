#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "wrc/errors.hpp"
#include "wrc/sim_time.hpp"

namespace wrc::sim {

/// An invokable action bound to its target modules at build time. Interrupt
/// sources invoke whatever command is currently registered for their id, so
/// the reaction to an interrupt can be swapped without touching the kernel.
using ControlCommand = std::function<void(SimTime)>;

enum class InterruptFamily : std::uint16_t {
    ControllerTick = 0,    // control-cycle start
    WheelSampleTick = 1,   // per-wheel sub-sampling tick
    DirTick = 2,           // steering sub-sampling tick
    HallEdge = 3,          // index = wheel * 2 + (reverse ? 1 : 0)
    RcPinEdge = 4,         // index = channel * 2 + (fall ? 1 : 0)
    WheelCycleCommand = 5, // per-cycle order for one wheel system
    SteeringCycleCommand = 6,
};

struct InterruptId {
    InterruptFamily family = InterruptFamily::ControllerTick;
    std::uint16_t index = 0;

    auto operator<=>(const InterruptId&) const = default;
};

struct TimerHandle {
    std::uint32_t id = 0;
    bool valid() const { return id != 0; }
};

struct TraceEntry {
    SimTime at;
    std::string label;
    std::uint64_t seq = 0;

    bool operator==(const TraceEntry&) const = default;
};

class TimeReversalError : public Error {
public:
    using Error::Error;
};

class UnhandledInterruptError : public Error {
public:
    using Error::Error;
};

/// Discrete-event kernel: virtual clock, periodic timers and interrupt
/// dispatch. Single execution context owns the kernel; commands it invokes
/// may fan work out to other threads but must return before the next event.
///
/// Event order is total and replay-stable: by time, interrupts before
/// timers, shorter timer period first, then registration order, then
/// submission order.
class SimKernel {
public:
    SimTime now() const { return now_; }

    /// cmd fires at t0 + k*period for k = 1, 2, ... until cancelled.
    TimerHandle schedulePeriodic(SimDuration period, std::string label, ControlCommand cmd);
    void cancel(TimerHandle handle);

    /// Installs or replaces the command invoked for an interrupt id.
    void setInterruptHandler(InterruptId id, std::string label, ControlCommand cmd);
    bool hasInterruptHandler(InterruptId id) const;

    /// Enqueue the registered command. An `at` in the past (an edge reported
    /// for an already-elapsed window) executes at the current instant but
    /// keeps its nominal timestamp for ordering.
    void raiseInterrupt(InterruptId id, SimTime at);

    /// Execute every event with time <= t in deterministic order, then move
    /// the clock to t.
    void advanceUntil(SimTime t);

    void enableTrace(bool on) { traceEnabled_ = on; }
    const std::vector<TraceEntry>& trace() const { return trace_; }
    std::uint64_t dispatchCount() const { return dispatchSeq_; }

private:
    struct Key {
        std::int64_t timeUs;
        int rank;             // 0 interrupt, 1 timer
        std::int64_t aux;     // nominal time (interrupt) or period (timer)
        std::uint64_t order;  // registration index
        std::uint64_t seq;    // submission tiebreak

        bool operator>(const Key& o) const {
            if (timeUs != o.timeUs) return timeUs > o.timeUs;
            if (rank != o.rank) return rank > o.rank;
            if (aux != o.aux) return aux > o.aux;
            if (order != o.order) return order > o.order;
            return seq > o.seq;
        }
    };
    struct Event {
        Key key;
        std::uint32_t timerId = 0;  // 0: interrupt event
        InterruptId intId{};
        bool operator>(const Event& o) const { return key > o.key; }
    };
    struct Timer {
        SimDuration period{};
        std::string label;
        ControlCommand cmd;
        SimTime nextFire;
        std::uint64_t order = 0;
        bool alive = true;
    };
    struct Handler {
        std::string label;
        ControlCommand cmd;
        std::uint64_t order = 0;
    };

    void dispatch(const Event& ev);

    SimTime now_ = SimTime::zero();
    std::uint32_t nextTimerId_ = 1;
    std::uint64_t nextOrder_ = 0;
    std::uint64_t nextSeq_ = 0;
    std::uint64_t dispatchSeq_ = 0;
    bool traceEnabled_ = false;
    std::map<std::uint32_t, Timer> timers_;
    std::map<InterruptId, Handler> handlers_;
    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue_;
    std::vector<TraceEntry> trace_;
};

}  // namespace wrc::sim
