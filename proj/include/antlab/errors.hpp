#pragma once

#include <stdexcept>
#include <string>

namespace antlab {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverlapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace antlab
