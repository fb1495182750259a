#pragma once

#include <stdexcept>
#include <string>

namespace seyolo {

// File / input-data problems (unreadable image, malformed label, bad config).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Model problems (archive corrupt, tensor missing, shape/dtype mismatch).
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Planning problems (layer cannot be tiled into L1, calibration target
// unreachable).
struct PlanError : std::runtime_error {
  explicit PlanError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace seyolo
