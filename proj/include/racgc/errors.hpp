#pragma once

#include <stdexcept>
#include <string>

namespace racgc {

// Malformed input: bad JSON, loops, unknown vertices, broken preconditions.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the families the algorithms handle.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant failed; indicates a bug or an input we misjudged.
struct InvariantFailure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace racgc
