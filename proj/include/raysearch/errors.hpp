#pragma once

#include <stdexcept>
#include <string>

namespace raysearch {

/// Search path never reaches the target ray; the horizon is too short.
class NoDetection : public std::runtime_error {
 public:
  explicit NoDetection(const std::string& what) : std::runtime_error(what) {}
};

/// Terrain consumed the return budget before a legal turn existed.
class BudgetInfeasible : public std::runtime_error {
 public:
  explicit BudgetInfeasible(const std::string& what) : std::runtime_error(what) {}
};

/// Free space does not connect the start with the goal ray.
class Unreachable : public std::runtime_error {
 public:
  explicit Unreachable(const std::string& what) : std::runtime_error(what) {}
};

/// A scalar search was asked to bracket an extremum but the sign
/// pattern of the derivative (or the function values) does not admit one.
class BracketFailure : public std::runtime_error {
 public:
  explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Interval narrowing emptied the parameter box.
class InfeasibleTarget : public std::runtime_error {
 public:
  explicit InfeasibleTarget(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace raysearch
