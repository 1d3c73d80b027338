#pragma once

#include <vector>

#include "wrc/config.hpp"
#include "wrc/sim_time.hpp"

namespace wrc::plant {

struct WheelParams {
    double kv = 12.5;           // rpm per volt
    double tau = 0.5;           // seconds
    double resistance = 0.5;    // ohm
    double maxTension = 24.0;   // volts
    double pulsesPerRev = 480;  // hall edges per revolution
    double currentClipMa = 5000.0;

    static WheelParams fromConfig(const Config& cfg);
};

struct SteeringParams {
    double slewDegPerSec = 60.0;
    double rangeDeg = 30.0;

    static SteeringParams fromConfig(const Config& cfg);
};

/// Electro-mechanical state of one wheel. First-order velocity response:
/// omega' = a*omega + (1-a)*kv*tension with a = exp(-dt/tau).
struct WheelPlantState {
    double omega = 0.0;           // rpm
    double appliedTension = 0.0;  // volts, after clamping
    int direction = 1;            // sign of the last motion
    double hallPhase = 0.5;       // fractional edge carry between steps
};

struct SteeringPlantState {
    double position = 0.0;  // degrees
    double target = 0.0;    // degrees
    bool enabled = false;
};

/// One integration step. Tension is clamped to +/- maxTension first.
WheelPlantState stepWheel(WheelPlantState state, double tensionVolts, double dtSeconds,
                          const WheelParams& p);

/// Winding current in mA: (tension - omega/kv) / R, clipped to the
/// measurement range. Zero at steady state (back-EMF cancellation).
double wheelCurrentMa(const WheelPlantState& state, const WheelParams& p);

struct HallEdge {
    SimDuration offset{};  // position inside the elapsed window
    bool reverse = false;
};

/// Edges produced over a window of dt seconds, evenly spaced inside it.
/// A fractional carry is kept in the state so no rotation is lost across
/// windows shorter than one pulse.
std::vector<HallEdge> emitHallEdges(WheelPlantState& state, double dtSeconds,
                                    const WheelParams& p);

/// Moves position toward target by at most slew*dt, saturating at the
/// mechanical range. A disabled device holds position regardless of target.
SteeringPlantState stepSteering(SteeringPlantState state, double dtSeconds,
                                const SteeringParams& p);

}  // namespace wrc::plant
