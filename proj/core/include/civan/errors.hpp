#ifndef CIVAN_ERRORS_HPP
#define CIVAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace civan {

// Raised when an operation would exceed a caller-supplied resource budget
// (point enumeration, codeword sweeps, evaluation-matrix size). Callers that
// map errors to exit codes treat this differently from precondition errors.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace civan

#endif
