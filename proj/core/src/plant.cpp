#include "wrc/plant.hpp"

#include <algorithm>
#include <cmath>

namespace wrc::plant {

WheelParams WheelParams::fromConfig(const Config& cfg) {
    WheelParams p;
    p.kv = cfg.getDouble("plant.kv");
    p.tau = cfg.getDouble("plant.tau");
    p.resistance = cfg.getDouble("plant.resistance");
    p.maxTension = cfg.getDouble("plant.maxTension");
    p.pulsesPerRev = cfg.getDouble("plant.pulsesPerRev");
    p.currentClipMa = cfg.getDouble("plant.currentClipMa");
    return p;
}

SteeringParams SteeringParams::fromConfig(const Config& cfg) {
    SteeringParams p;
    p.slewDegPerSec = cfg.getDouble("plant.steeringSlew");
    p.rangeDeg = cfg.getDouble("plant.steeringRange");
    return p;
}

WheelPlantState stepWheel(WheelPlantState state, double tensionVolts, double dtSeconds,
                          const WheelParams& p) {
    const double tension = std::clamp(tensionVolts, -p.maxTension, p.maxTension);
    const double alpha = std::exp(-dtSeconds / p.tau);
    state.omega = alpha * state.omega + (1.0 - alpha) * p.kv * tension;
    state.appliedTension = tension;
    if (state.omega != 0.0) state.direction = state.omega > 0.0 ? 1 : -1;
    return state;
}

double wheelCurrentMa(const WheelPlantState& state, const WheelParams& p) {
    const double amps = (state.appliedTension - state.omega / p.kv) / p.resistance;
    return std::clamp(amps * 1000.0, -p.currentClipMa, p.currentClipMa);
}

std::vector<HallEdge> emitHallEdges(WheelPlantState& state, double dtSeconds,
                                    const WheelParams& p) {
    std::vector<HallEdge> edges;
    const double rate = std::abs(state.omega) * p.pulsesPerRev / 60.0;  // edges per second
    state.hallPhase += rate * dtSeconds;
    const int count = static_cast<int>(std::floor(state.hallPhase));
    if (count <= 0) return edges;
    state.hallPhase -= count;
    const bool reverse = state.omega < 0.0;
    edges.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double frac = (k + 0.5) / count;
        edges.push_back({SimDuration{static_cast<std::int64_t>(
                             std::llround(frac * dtSeconds * 1e6))},
                         reverse});
    }
    return edges;
}

SteeringPlantState stepSteering(SteeringPlantState state, double dtSeconds,
                                const SteeringParams& p) {
    if (!state.enabled) return state;
    const double target = std::clamp(state.target, -p.rangeDeg, p.rangeDeg);
    const double maxStep = p.slewDegPerSec * dtSeconds;
    const double delta = target - state.position;
    const double step = std::clamp(delta, -maxStep, maxStep);
    state.position = std::clamp(state.position + step, -p.rangeDeg, p.rangeDeg);
    return state;
}

}  // namespace wrc::plant
