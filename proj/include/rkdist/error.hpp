#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rkdist {

enum class ErrorKind {
  InvalidIdentifier,
  UnknownVertex,
  DuplicateVertex,
  BadHeader,
  DuplicateIl,
  MissingIl,
  MalformedLine,
  InvalidProfile,
  EmptyFactorList,
  FactorMismatch,
  NotALattice,
  InvalidTotal,
  UnknownEntry,
  MissingParameter,
  UnknownParameter,
  AdmissibilityViolation,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::DuplicateIl: return "DuplicateIl";
    case ErrorKind::MissingIl: return "MissingIl";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::EmptyFactorList: return "EmptyFactorList";
    case ErrorKind::FactorMismatch: return "FactorMismatch";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::InvalidTotal: return "InvalidTotal";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::AdmissibilityViolation: return "AdmissibilityViolation";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` tells callers what went
/// wrong, `line()` is set for errors attributable to an input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(format(kind, message, line)), kind_(kind), line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            std::optional<std::size_t> line) {
    std::string out(to_string(kind));
    if (line) out += " (line " + std::to_string(*line) + ")";
    out += ": ";
    out += message;
    return out;
  }

  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace rkdist
