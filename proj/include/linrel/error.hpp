#pragma once

#include <stdexcept>
#include <string>

namespace linrel {

enum class ErrorKind {
  Overflow,
  ShapeMismatch,
  ParentMismatch,
  DomainMismatch,
  NotAMember,
  NotAMorphism,
  InfiniteModule,
  UnsupportedRing,
  RingNotLocal,
  RingNotSemisimple,
  HypothesisViolated,
  NotInSubcategory,
  ModuleTooLarge,
  ProviderViolation,
  RayMismatch,
  ZeroElement,
  EmptyWitness,
  InvalidInput,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace linrel
