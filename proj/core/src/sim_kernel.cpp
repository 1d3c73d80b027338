#include "wrc/sim_kernel.hpp"

#include <stdexcept>

namespace wrc::sim {

TimerHandle SimKernel::schedulePeriodic(SimDuration period, std::string label,
                                        ControlCommand cmd) {
    if (period.count() <= 0) {
        throw std::invalid_argument("timer period must be positive");
    }
    const std::uint32_t id = nextTimerId_++;
    Timer t;
    t.period = period;
    t.label = std::move(label);
    t.cmd = std::move(cmd);
    t.nextFire = now_ + period;
    t.order = nextOrder_++;
    const SimTime first = t.nextFire;
    const auto periodUs = period.count();
    const auto order = t.order;
    timers_.emplace(id, std::move(t));
    queue_.push(Event{Key{first.us, 1, periodUs, order, nextSeq_++}, id, {}});
    return TimerHandle{id};
}

void SimKernel::cancel(TimerHandle handle) {
    const auto it = timers_.find(handle.id);
    if (it != timers_.end()) it->second.alive = false;
}

void SimKernel::setInterruptHandler(InterruptId id, std::string label, ControlCommand cmd) {
    auto it = handlers_.find(id);
    if (it == handlers_.end()) {
        handlers_.emplace(id, Handler{std::move(label), std::move(cmd), nextOrder_++});
    } else {
        // Substitution: keep the registration order, swap the action.
        it->second.label = std::move(label);
        it->second.cmd = std::move(cmd);
    }
}

bool SimKernel::hasInterruptHandler(InterruptId id) const {
    return handlers_.count(id) != 0;
}

void SimKernel::raiseInterrupt(InterruptId id, SimTime at) {
    const auto it = handlers_.find(id);
    if (it == handlers_.end()) {
        throw UnhandledInterruptError("no command registered for interrupt family " +
                                      std::to_string(static_cast<int>(id.family)) +
                                      " index " + std::to_string(id.index));
    }
    const std::int64_t execUs = at.us < now_.us ? now_.us : at.us;
    queue_.push(Event{Key{execUs, 0, at.us, it->second.order, nextSeq_++}, 0, id});
}

void SimKernel::advanceUntil(SimTime t) {
    if (t < now_) {
        throw TimeReversalError("advanceUntil into the past");
    }
    while (!queue_.empty() && queue_.top().key.timeUs <= t.us) {
        const Event ev = queue_.top();
        queue_.pop();
        now_ = SimTime::fromUs(ev.key.timeUs);
        dispatch(ev);
    }
    now_ = t;
}

void SimKernel::dispatch(const Event& ev) {
    if (ev.timerId != 0) {
        auto it = timers_.find(ev.timerId);
        if (it == timers_.end() || !it->second.alive) return;
        Timer& timer = it->second;
        if (traceEnabled_) trace_.push_back({now_, timer.label, dispatchSeq_});
        ++dispatchSeq_;
        timer.nextFire = timer.nextFire + timer.period;
        queue_.push(Event{Key{timer.nextFire.us, 1, timer.period.count(), timer.order,
                              nextSeq_++},
                          ev.timerId,
                          {}});
        // Copy before invoking: the command may cancel or replace itself.
        const ControlCommand cmd = timer.cmd;
        cmd(now_);
        return;
    }
    const auto it = handlers_.find(ev.intId);
    if (it == handlers_.end()) return;  // handler removed after raise
    if (traceEnabled_) trace_.push_back({now_, it->second.label, dispatchSeq_});
    ++dispatchSeq_;
    const ControlCommand cmd = it->second.cmd;
    cmd(SimTime::fromUs(ev.key.aux));
}

}  // namespace wrc::sim
