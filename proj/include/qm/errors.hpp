#pragma once

#include <stdexcept>
#include <string>

namespace qm {

// Malformed input or a violated precondition. CLI exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented size cap was exceeded. CLI exit status 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed (a solver returned an answer that does not
// survive substitution, a proven-feasible system came back infeasible, ...).
// CLI exit status 3.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qm
