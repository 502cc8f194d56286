#pragma once

#include <stdexcept>
#include <string>

namespace toricode {

// Malformed input: wrong shapes, non-integers, unknown keys. The CLI maps
// this to exit code 2 and the message should cite the offending JSON path
// when one is known.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that violates a mathematical precondition (lattice not
// full over the field, singular coordinate matrix, characteristic divides
// the group order, ...). CLI exit code 3.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration would exceed its configured work budget. CLI exit code 4.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace toricode
