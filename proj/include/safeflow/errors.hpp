#pragma once

#include <stdexcept>
#include <string>

namespace safeflow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleError : Error {
  CycleError() : Error("graph is not a DAG") {}
};

struct ConservationError : Error {
  int vertex;
  ConservationError(int v, const std::string& detail)
      : Error("conservation violated at vertex " + std::to_string(v) + ": " + detail),
        vertex(v) {}
};

struct NonPositiveWeightError : Error {
  explicit NonPositiveWeightError(int edge_id)
      : Error("edge " + std::to_string(edge_id) + " has non-positive weight") {}
};

struct InvalidPathError : Error {
  using Error::Error;
};

struct InvalidExtensionError : Error {
  using Error::Error;
};

struct NonPositiveWError : Error {
  NonPositiveWError() : Error("w must be positive") {}
};

struct InvalidSpecError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct DanglingTripletError : Error {
  using Error::Error;
};

struct ExtractFromEmptyError : Error {
  ExtractFromEmptyError() : Error("extract from empty heap") {}
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace safeflow
