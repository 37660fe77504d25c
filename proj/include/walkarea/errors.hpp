#pragma once

#include <stdexcept>
#include <string>

namespace walkarea {

// Raised when a request exceeds a hard engine budget (enumeration N, DP N,
// spectral integer-recovery N). Callers can offer a bigger engine instead.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an internal cross-check fails (rounding residue, total count
// mismatch, eigensolver failure). Indicates a bug, never bad user input.
class consistency_error : public std::runtime_error {
 public:
  explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

class calibration_error : public consistency_error {
 public:
  explicit calibration_error(const std::string& msg) : consistency_error(msg) {}
};

class quadrature_error : public consistency_error {
 public:
  explicit quadrature_error(const std::string& msg) : consistency_error(msg) {}
};

}  // namespace walkarea
