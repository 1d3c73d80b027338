#pragma once

#include <stdexcept>
#include <string>

namespace wrc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required configuration key is missing or a value failed to parse.
class ConfigError : public Error {
public:
    using Error::Error;
};

// System assembly failed (missing key, duplicate interrupt registration, ...).
class BuildError : public Error {
public:
    explicit BuildError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace wrc
