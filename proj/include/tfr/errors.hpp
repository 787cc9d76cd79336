#pragma once

#include <stdexcept>
#include <string>

namespace tfr {

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPointedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FanViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHomogeneousError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerationFailureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotASubfanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedGeneratorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotGradedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WitnessDisagreementError : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace tfr
