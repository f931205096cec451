#pragma once

#include <stdexcept>
#include <string>

namespace crystal {

enum class ErrorKind {
  NotALattice,
  CycleDetected,
  UnknownLabel,
  DuplicateLabel,
  ParseError,
  ContextMismatch,
  ExponentOverflow,
  NonSquarefreeDegree,
  NonSquarefreeIdeal,
  TooManyGenerators,
  TooManyVariables,
  IndexOutOfRange,
  InvalidArgument,
  Cancelled,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; the kind lets callers (the CLI in
// particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool is_resource_guard() const noexcept {
    return kind_ == ErrorKind::TooManyGenerators ||
           kind_ == ErrorKind::TooManyVariables ||
           kind_ == ErrorKind::Cancelled;
  }

 private:
  ErrorKind kind_;
};

}  // namespace crystal
