#include "wrc/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace wrc {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::defaults() {
    Config c;
    // Wheel plant: first-order velocity response to applied tension.
    c.set("plant.kv", 12.5);            // rpm per volt
    c.set("plant.tau", 0.5);            // seconds
    c.set("plant.resistance", 0.5);     // ohm
    c.set("plant.maxTension", 24.0);    // volts
    c.set("plant.pulsesPerRev", 480.0); // hall edges per revolution
    c.set("plant.currentClipMa", 5000.0);
    // Steering plant.
    c.set("plant.steeringSlew", 60.0);  // degrees per second
    c.set("plant.steeringRange", 30.0); // degrees, symmetric
    // Wheel controller.
    c.set("wheel.kp", 0.08);            // V per rpm of error
    c.set("wheel.ki", 0.2);             // V per rpm*s
    c.set("wheel.currentKp", 0.0002);   // V per mA of error
    c.set("wheel.currentKi", 0.004);    // V per mA*s
    c.set("wheel.outputLimit", 24.0);   // volts
    // Steering controller.
    c.set("steering.deadband", 0.5);    // degrees
    // Main controller FSM.
    c.set("fsm.n", 5.0);                // waiting depth before Reconnecting
    // Timers.
    c.set("timer.cycleMs", 100.0);      // control cycle period
    c.set("timer.subMs", 10.0);         // sub-sampling period
    // Serial link.
    c.set("serial.syncThreshold", 3.0); // consecutive checksum errors -> Syncing
    c.set("serial.writeBufferFrames", 64.0);
    // RC receiver.
    c.set("rc.staleMs", 100.0);
    c.set("rc.minWidthUs", 900.0);
    c.set("rc.maxWidthUs", 2100.0);
    c.set("rc.pulsePeriodMs", 20.0);
    c.set("rc.maxVelocityRpm", 300.0);
    c.set("rc.maxSteeringDeg", 30.0);
    // Sensor stacks.
    c.set("sensor.ringSize", 64.0);
    return c;
}

Config Config::empty() { return Config{}; }

void Config::mergeFile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    mergeText(buf.str(), path.string());
}

void Config::mergeText(const std::string& text, const std::string& originName) {
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(originName + ":" + std::to_string(lineNo) +
                              ": expected key=value, got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(originName + ":" + std::to_string(lineNo) + ": empty key");
        }
        values_[key] = value;
    }
}

void Config::set(const std::string& key, const std::string& value) {
    values_[key] = value;
}

void Config::set(const std::string& key, double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    values_[key] = os.str();
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

double Config::getDouble(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw BuildError(key);
    char* end = nullptr;
    const double v = std::strtod(it->second.c_str(), &end);
    if (end == it->second.c_str() || *end != '\0') {
        throw ConfigError("config key '" + key + "' is not a number: '" + it->second + "'");
    }
    return v;
}

int Config::getInt(const std::string& key) const {
    const double v = getDouble(key);
    return static_cast<int>(v);
}

std::string Config::getString(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw BuildError(key);
    return it->second;
}

std::optional<double> Config::tryDouble(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return getDouble(key);
}

}  // namespace wrc
