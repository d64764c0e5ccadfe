#pragma once

#include <stdexcept>
#include <string>

namespace hcc {

/// Malformed input: files, shapes, preconditions the caller controls.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension or degree guard would be exceeded. The message names the
/// override flag.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant the engine relies on failed at runtime.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcc
