#pragma once

#include <stdexcept>
#include <string>

namespace planeauto {

// Every failure raised by the library carries a stable error name so the CLI
// can render it and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define PLANEAUTO_DEFINE_ERROR(Type)                                      \
  class Type : public Error {                                             \
   public:                                                                \
    explicit Type(const std::string& what) : Error(#Type, what) {}        \
  };

PLANEAUTO_DEFINE_ERROR(InvalidResultantInput)
PLANEAUTO_DEFINE_ERROR(ConstantInput)
PLANEAUTO_DEFINE_ERROR(DivisionByZero)
PLANEAUTO_DEFINE_ERROR(DegenerateLinear)
PLANEAUTO_DEFINE_ERROR(SearchBudgetExceeded)
PLANEAUTO_DEFINE_ERROR(NotTriangularInput)
PLANEAUTO_DEFINE_ERROR(DegenerateCurve)
PLANEAUTO_DEFINE_ERROR(BudgetExhausted)
PLANEAUTO_DEFINE_ERROR(InvalidFamilySpec)
PLANEAUTO_DEFINE_ERROR(VerificationFailed)
PLANEAUTO_DEFINE_ERROR(BadIndex)
PLANEAUTO_DEFINE_ERROR(MixedVariables)
PLANEAUTO_DEFINE_ERROR(InvalidArgument)

#undef PLANEAUTO_DEFINE_ERROR

// Syntax errors remember the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace planeauto
