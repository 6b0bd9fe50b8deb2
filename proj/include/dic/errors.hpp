#pragma once

#include <stdexcept>
#include <string>

namespace dic {

// Bad caller input: length mismatches, empty files, c > n, ...
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bytes that do not decode to a valid value (wrong length, off-curve point,
// non-canonical field element, truncated frame).
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid data that violates a file-format rule (bad padding,
// manifest mismatch).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request that is well formed but cannot be served, e.g. a challenge index
// outside [1, n].
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation needs a secret the caller does not hold (commitment trapdoor) or a
// key mode that does not support it.
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class GameError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dic
