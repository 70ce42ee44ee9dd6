#pragma once

#include <stdexcept>
#include <string>

namespace hermsos {

/// A mathematical precondition of an operation does not hold for its input.
class MathError : public std::domain_error {
 public:
  enum class Kind { NotHermitian, NotPsd, ZeroInput, NotDivisible };

  MathError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

  /// Stable tag printed by the command-line tool.
  const char* tag() const {
    switch (kind_) {
      case Kind::NotHermitian: return "NOT_HERMITIAN";
      case Kind::NotPsd: return "NOT_PSD";
      case Kind::ZeroInput: return "ZERO_INPUT";
      case Kind::NotDivisible: return "NOT_DIVISIBLE";
    }
    return "MATH_ERROR";
  }

 private:
  Kind kind_;
};

}  // namespace hermsos
