#pragma once

#include <stdexcept>
#include <string>

namespace scene123 {

// Invalid argument values (out-of-range pixels, non-positive depths, bad dims).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Projection of a point with z <= 0.
class BehindCameraError : public std::runtime_error {
 public:
  explicit BehindCameraError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs that are structurally valid but carry no usable data (empty masks etc).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called before its prerequisite state existed.
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric procedure hit a degenerate configuration (all pairs skipped etc).
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Optimization produced non-finite values or diverged.
class OptimizationError : public std::runtime_error {
 public:
  explicit OptimizationError(const std::string& msg) : std::runtime_error(msg) {}
};

// File/serialization problems.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration files or CLI arguments.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace scene123
