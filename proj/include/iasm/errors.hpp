#pragma once

#include <stdexcept>
#include <string>

namespace iasm {

/// Bad arguments: out-of-range indices, malformed input files.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A symbol outside the state's alphabet reached an ingestion point.
class IngestionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested operation is not supported by the encoding (e.g. growing B
/// of a substring-vs-string matrix).
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A pivot set lost its one-per-row / one-per-column shape, or a delta did not
/// fit its base set. Always an algorithm bug upstream.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace iasm
