#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "wrc/errors.hpp"

namespace wrc {

/// Flat key=value configuration shared by every subsystem.
///
/// There is exactly one Config per assembly; builders hand the same instance
/// to every module they wire so constants such as gains and plant parameters
/// cannot diverge between subsystems. Scenario files may override individual
/// keys on top of the defaults.
class Config {
public:
    /// Fully-populated built-in defaults.
    static Config defaults();

    /// No keys at all. Useful for exercising missing-key build errors.
    static Config empty();

    /// Parse `key=value` lines. '#' starts a comment, blank lines ignored.
    /// Parsed keys are laid over the current contents.
    void mergeFile(const std::filesystem::path& path);
    void mergeText(const std::string& text, const std::string& originName = "<text>");

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);

    bool has(const std::string& key) const;

    /// Typed getters. A missing key raises BuildError naming the key, so a
    /// misassembled system fails loudly instead of running on a silent zero.
    double getDouble(const std::string& key) const;
    int getInt(const std::string& key) const;
    std::string getString(const std::string& key) const;

    std::optional<double> tryDouble(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace wrc
