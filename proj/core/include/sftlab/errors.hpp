#ifndef SFTLAB_ERRORS_HPP
#define SFTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sftlab {

// Base for all recoverable errors. `code()` is a stable machine-readable
// reason string used by the CLI's error JSON.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& w) : Error("invalid-input", w) {}
};

struct NotPrimitive : Error {
  explicit NotPrimitive(const std::string& w = "matrix is not primitive")
      : Error("not-primitive", w) {}
};

struct TrivialShift : Error {
  explicit TrivialShift(const std::string& w = "shift has zero entropy")
      : Error("trivial-shift", w) {}
};

struct LevelMismatch : Error {
  explicit LevelMismatch(const std::string& w) : Error("level-mismatch", w) {}
};

struct PeriodNotDivisible : Error {
  explicit PeriodNotDivisible(const std::string& w)
      : Error("period-not-divisible", w) {}
};

struct EntryTooSmall : Error {
  explicit EntryTooSmall(const std::string& w) : Error("entry-too-small", w) {}
};

struct InsufficientSamples : Error {
  explicit InsufficientSamples(const std::string& w)
      : Error("insufficient-samples", w) {}
};

struct AdmissibilityNotReached : Error {
  explicit AdmissibilityNotReached(const std::string& w)
      : Error("admissibility-not-reached", w) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& w) : Error("too-large", w) {}
};

struct NotNormal : Error {
  explicit NotNormal(const std::string& w) : Error("not-normal", w) {}
};

struct NotSimple : Error {
  explicit NotSimple(const std::string& w) : Error("not-simple", w) {}
};

struct InvalidPartition : Error {
  explicit InvalidPartition(const std::string& w)
      : Error("invalid-partition", w) {}
};

struct PreconditionEntry : Error {
  explicit PreconditionEntry(const std::string& w)
      : Error("precondition-entry", w) {}
};

struct SeedCollision : Error {
  explicit SeedCollision(const std::string& w) : Error("seed-collision", w) {}
};

struct ExtensionExhausted : Error {
  explicit ExtensionExhausted(const std::string& w)
      : Error("extension-exhausted", w) {}
};

struct ResourceCap : Error {
  explicit ResourceCap(const std::string& w) : Error("resource-cap", w) {}
};

}  // namespace sftlab

#endif
