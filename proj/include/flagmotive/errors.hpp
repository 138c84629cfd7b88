#pragma once

#include <stdexcept>
#include <string>

namespace flagmotive {

// Base of all library errors. `name()` is the stable machine-readable
// error tag rendered by the CLI; `what()` carries the human message.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class SyntaxError : public Error {
public:
  explicit SyntaxError(const std::string& what) : Error("SyntaxError", what) {}
};

class InvalidMatrix : public Error {
public:
  explicit InvalidMatrix(const std::string& what) : Error("InvalidMatrix", what) {}
};

class NotFiniteType : public Error {
public:
  explicit NotFiniteType(const std::string& what) : Error("NotFiniteType", what) {}
};

class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(const std::string& what) : Error("BudgetExceeded", what) {}
};

class BaseMismatch : public Error {
public:
  explicit BaseMismatch(const std::string& what) : Error("BaseMismatch", what) {}
};

class RankMismatch : public Error {
public:
  explicit RankMismatch(const std::string& what) : Error("RankMismatch", what) {}
};

class NotProper : public Error {
public:
  explicit NotProper(const std::string& what) : Error("NotProper", what) {}
};

class SplittingNotCertified : public Error {
public:
  explicit SplittingNotCertified(const std::string& what)
      : Error("SplittingNotCertified", what) {}
};

class ShiftPresent : public Error {
public:
  explicit ShiftPresent(const std::string& what) : Error("ShiftPresent", what) {}
};

class NegativeDegree : public Error {
public:
  explicit NegativeDegree(const std::string& what) : Error("NegativeDegree", what) {}
};

}  // namespace flagmotive
