#pragma once

#include <stdexcept>
#include <string>

namespace hopfcat {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& w) : Error("field mismatch: " + w) {}
};
struct DimMismatch : Error {
  explicit DimMismatch(const std::string& w) : Error("dimension mismatch: " + w) {}
};
struct NotSquare : Error {
  explicit NotSquare(const std::string& w) : Error("not square: " + w) {}
};
struct Singular : Error {
  explicit Singular(const std::string& w) : Error("singular: " + w) {}
};
struct AlgebraMismatch : Error {
  explicit AlgebraMismatch(const std::string& w) : Error("algebra mismatch: " + w) {}
};
struct ChargeMismatch : Error {
  explicit ChargeMismatch(const std::string& w) : Error("charge mismatch: " + w) {}
};
struct NotVerified : Error {
  explicit NotVerified(const std::string& w) : Error("structure not verified: " + w) {}
};
struct BadRootOfUnity : Error {
  explicit BadRootOfUnity(const std::string& w) : Error("bad root of unity: " + w) {}
};
struct BadGroupTable : Error {
  explicit BadGroupTable(const std::string& w) : Error("bad group table: " + w) {}
};
struct ZeroIntegral : Error {
  explicit ZeroIntegral(const std::string& w) : Error("zero integral space: " + w) {}
};
struct InfiniteGroup : Error {
  explicit InfiniteGroup(const std::string& w) : Error("infinite group: " + w) {}
};
struct UnstableCoefficient : Error {
  explicit UnstableCoefficient(const std::string& w) : Error("unstable coefficient: " + w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};

}  // namespace hopfcat
