#pragma once

#include <stdexcept>
#include <string>

namespace circuit {

/// File could not be opened / read / written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Byte stream is not a valid instance of the expected format.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration value or an unusable run setup (e.g. empty dataset).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Data failed semantic validation (e.g. annotation box outside its image).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace circuit
