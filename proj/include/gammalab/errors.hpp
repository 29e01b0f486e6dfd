#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gammalab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs a finite group received one with free rank > 0.
class InfiniteGroup : public Error {
 public:
  explicit InfiniteGroup(const std::string& what) : Error("InfiniteGroup: " + what) {}
};

/// A combinatorial bound was exceeded; raise the guard via GAMMA_LAB_GUARD.
class SizeGuard : public Error {
 public:
  explicit SizeGuard(const std::string& what) : Error("SizeGuard: " + what) {}
};

class NotFree : public Error {
 public:
  explicit NotFree(const std::string& what) : Error("NotFree: " + what) {}
};

class NotQuadratic : public Error {
 public:
  explicit NotQuadratic(const std::string& what) : Error("NotQuadratic: " + what) {}
};

class InvalidCocycle : public Error {
 public:
  explicit InvalidCocycle(const std::string& what) : Error("InvalidCocycle: " + what) {}
};

class AxiomFailure : public Error {
 public:
  explicit AxiomFailure(const std::string& what) : Error("AxiomFailure: " + what) {}
};

/// A section fails a compatibility check; witness() holds the element
/// indices of the failing instance.
class IncompatibleSection : public Error {
 public:
  explicit IncompatibleSection(const std::string& what, std::vector<std::size_t> witness = {})
      : Error("IncompatibleSection: " + what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

/// Malformed input: bad JSON, wrong shape, ill-defined homomorphism.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error("InputError: " + what) {}
};

}  // namespace gammalab
