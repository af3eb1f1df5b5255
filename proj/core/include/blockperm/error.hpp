#pragma once

#include <stdexcept>
#include <string>

namespace blockperm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mixed fields in one computation; always a construction bug upstream.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("field mismatch") {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& where)
      : Error("dimension mismatch: " + where) {}
};

/// A group or module is larger than the configured enumeration cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, unsigned long long size,
              unsigned long long cap)
      : Error(what + " of size " + std::to_string(size) +
              " exceeds enumeration cap " + std::to_string(cap)) {}
};

class NotASubgroup : public Error {
 public:
  explicit NotASubgroup(const std::string& where)
      : Error("not a subgroup: " + where) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace blockperm
