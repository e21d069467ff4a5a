#pragma once

#include <stdexcept>
#include <string>

namespace ksf {

enum class ErrorKind {
  InvalidInput,
  DegenerateInput,
  CapacityExceeded,
  ForcingPreconditionFailed,
  ReconstructionFailure,
  NoEmbedding,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind lets callers (the CLI
/// in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::InvalidInput, what) {}
};

class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& what)
      : Error(ErrorKind::DegenerateInput, what) {}
};

class CapacityExceeded : public Error {
 public:
  explicit CapacityExceeded(const std::string& what)
      : Error(ErrorKind::CapacityExceeded, what) {}
};

class ForcingPreconditionFailed : public Error {
 public:
  explicit ForcingPreconditionFailed(const std::string& what)
      : Error(ErrorKind::ForcingPreconditionFailed, what) {}
};

class ReconstructionFailure : public Error {
 public:
  explicit ReconstructionFailure(const std::string& what)
      : Error(ErrorKind::ReconstructionFailure, what) {}
};

class NoEmbedding : public Error {
 public:
  explicit NoEmbedding(const std::string& what)
      : Error(ErrorKind::NoEmbedding, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::Internal, what) {}
};

}  // namespace ksf
