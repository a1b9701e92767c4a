#pragma once

#include <stdexcept>
#include <string>

namespace weilhodge {

// Input-side failures derive from std::invalid_argument, internal-consistency
// failures from std::logic_error. The CLI maps the former to exit code 2.

struct InvalidAction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidSignature : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SignatureUnrealizable : std::logic_error {
  using std::logic_error::logic_error;
};

struct ZeroDiagonalEntry : std::logic_error {
  using std::logic_error::logic_error;
};

struct DegenerateSample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CriterionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace weilhodge
