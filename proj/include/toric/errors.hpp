// Error types shared across the library. The three base classes map onto the
// CLI exit codes: input problems -> 2, cap overruns -> 3, failed checks -> 4.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// field
class NonPrime : public InputError {
 public:
  using InputError::InputError;
};
class ReducibleModulus : public InputError {
 public:
  using InputError::InputError;
};
class UnsupportedQ : public InputError {
 public:
  using InputError::InputError;
};
class DivisionByZero : public InputError {
 public:
  using InputError::InputError;
};
class FieldMismatch : public InputError {
 public:
  using InputError::InputError;
};

// graph
class ParseError : public InputError {
 public:
  using InputError::InputError;
};
class LoopEdge : public InputError {
 public:
  using InputError::InputError;
};
class DuplicateEdge : public InputError {
 public:
  using InputError::InputError;
};
class IsolatedVertex : public InputError {
 public:
  using InputError::InputError;
};
class TooFewEdges : public InputError {
 public:
  using InputError::InputError;
};
class NotACycle : public InputError {
 public:
  using InputError::InputError;
};
class OddCycle : public InputError {
 public:
  using InputError::InputError;
};
class EdgesOverlap : public InputError {
 public:
  using InputError::InputError;
};
class NotConnected : public InputError {
 public:
  using InputError::InputError;
};
class NotBipartite : public InputError {
 public:
  using InputError::InputError;
};
class CyclesNotVertexDisjoint : public InputError {
 public:
  using InputError::InputError;
};

// ideal / generators / groebner
class NotHomogeneous : public InputError {
 public:
  using InputError::InputError;
};
class NotReducible : public InputError {
 public:
  using InputError::InputError;
};
class BadR : public InputError {
 public:
  using InputError::InputError;
};
class BadPartition : public InputError {
 public:
  using InputError::InputError;
};
class BadTransfer : public InputError {
 public:
  using InputError::InputError;
};
class IndexOutOfRange : public InputError {
 public:
  using InputError::InputError;
};
class OutOfRange : public InputError {
 public:
  using InputError::InputError;
};

// caps
class EnumerationTooLarge : public CapError {
 public:
  using CapError::CapError;
};
class SearchTooLarge : public CapError {
 public:
  using CapError::CapError;
};
class MatrixTooLarge : public CapError {
 public:
  MatrixTooLarge(const std::string& msg, std::vector<long long> partial = {})
      : CapError(msg), partial_values(std::move(partial)) {}

  // Hilbert values computed before the cap was hit (may be empty).
  std::vector<long long> partial_values;
};

// verification
class GeneratorDoesNotVanish : public VerificationError {
 public:
  GeneratorDoesNotVanish(const std::string& msg, std::vector<std::size_t> bad)
      : VerificationError(msg), offenders(std::move(bad)) {}

  std::vector<std::size_t> offenders;  // indices of non-vanishing generators
};

}  // namespace toric
