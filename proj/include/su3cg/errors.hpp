#pragma once

#include <stdexcept>
#include <string>

namespace su3 {

struct YOutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};

struct OutsideDiagram : std::domain_error {
  using std::domain_error::domain_error;
};

struct MalformedKey : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TriangleViolation : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotInSeries : std::domain_error {
  using std::domain_error::domain_error;
};

struct BadState : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RankMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PropagationSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateLabeling : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal-consistency failures (non-integral factorial arguments and the like).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace su3
