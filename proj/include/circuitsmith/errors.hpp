#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace circuitsmith {

class Simplex;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a type invariant (duplicate vertices, non-face-closed
/// simplex sets, unknown vertices in a map).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A simplex or vertex that was expected in a complex is absent.
class NotFound : public Error {
 public:
  using Error::Error;
};

/// Dimensions or subcomplex relations do not match the requested construction.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called without its precondition holding.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A pipeline stage failed; carries the stage name and its witnesses.
class StageFailure : public Error {
 public:
  StageFailure(std::string stage, const std::string& message,
               std::vector<std::vector<int>> witnesses = {})
      : Error(stage + ": " + message),
        stage_(std::move(stage)),
        witnesses_(std::move(witnesses)) {}

  const std::string& stage() const { return stage_; }
  const std::vector<std::vector<int>>& witnesses() const { return witnesses_; }

 private:
  std::string stage_;
  std::vector<std::vector<int>> witnesses_;
};

}  // namespace circuitsmith
