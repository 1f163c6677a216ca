#pragma once

#include <stdexcept>
#include <string>

namespace pfq {

// Base class for all structured failures. Every subclass carries a witness
// in its message so CLI and tests can surface the offending cell/element.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

enum class Axiom { Q1, Q2, Q3 };

inline const char *axiom_name(Axiom a) {
  switch (a) {
  case Axiom::Q1: return "Q1";
  case Axiom::Q2: return "Q2";
  default: return "Q3";
  }
}

class AxiomViolation : public Error {
public:
  Axiom axiom;
  int x, y, z; // z = -1 when the witness is a pair / column
  AxiomViolation(Axiom a, int x_, int y_, int z_ = -1)
      : Error(std::string("axiom ") + axiom_name(a) + " fails at (" +
              std::to_string(x_) + "," + std::to_string(y_) +
              (z_ >= 0 ? "," + std::to_string(z_) : std::string()) + ")"),
        axiom(a), x(x_), y(y_), z(z_) {}
};

class NotAbelian : public Error {
public:
  explicit NotAbelian(const std::string &msg) : Error(msg) {}
};

class NotKei : public Error {
public:
  explicit NotKei(const std::string &msg) : Error(msg) {}
};

class NotPrime : public Error {
public:
  explicit NotPrime(const std::string &msg) : Error(msg) {}
};

class DegreeMismatch : public Error {
public:
  explicit DegreeMismatch(const std::string &msg) : Error(msg) {}
};

class OrderBoundExceeded : public Error {
public:
  explicit OrderBoundExceeded(const std::string &msg) : Error(msg) {}
};

class NotSubgroup : public Error {
public:
  explicit NotSubgroup(const std::string &msg) : Error(msg) {}
};

class SizeBound : public Error {
public:
  explicit SizeBound(const std::string &msg) : Error(msg) {}
};

class NotConnected : public Error {
public:
  explicit NotConnected(const std::string &msg) : Error(msg) {}
};

// Structural guarantee failed on an instance where theory says it cannot.
class InvariantFailure : public Error {
public:
  explicit InvariantFailure(const std::string &msg) : Error(msg) {}
};

class InvalidSpec : public Error {
public:
  explicit InvalidSpec(const std::string &msg) : Error(msg) {}
};

class NotSurjective : public Error {
public:
  int level; // -1 when not tied to a tower level
  explicit NotSurjective(const std::string &msg, int level_ = -1)
      : Error(msg), level(level_) {}
};

class NotHom : public Error {
public:
  int level;
  explicit NotHom(const std::string &msg, int level_ = -1)
      : Error(msg), level(level_) {}
};

class TowerMismatch : public Error {
public:
  explicit TowerMismatch(const std::string &msg) : Error(msg) {}
};

class IndexOutOfRange : public Error {
public:
  explicit IndexOutOfRange(const std::string &msg) : Error(msg) {}
};

class WellDefinednessFailure : public Error {
public:
  explicit WellDefinednessFailure(const std::string &msg) : Error(msg) {}
};

class EquivarianceFailure : public Error {
public:
  explicit EquivarianceFailure(const std::string &msg) : Error(msg) {}
};

class IncompatibleChain : public Error {
public:
  explicit IncompatibleChain(const std::string &msg) : Error(msg) {}
};

enum class AugCheck { Action, AQ1, AQ2, Operation };

class AugmentationFailure : public Error {
public:
  AugCheck which;
  AugmentationFailure(AugCheck w, const std::string &msg)
      : Error(msg), which(w) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string &msg) : Error(msg) {}
};

} // namespace pfq
