#pragma once

#include <stdexcept>
#include <string>

namespace bfca {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: wrong length, invalid digit, bad CSV row.
class ParseError : public Error {
public:
  using Error::Error;
};

// Argument outside the operation's domain: index out of range, wrong
// arity, invalid order, state too short, singular matrix.
class DomainError : public Error {
public:
  using Error::Error;
};

// An enumeration grew past the caller-supplied bound.
class LimitExceeded : public Error {
public:
  using Error::Error;
};

// Unreadable, truncated or version-mismatched checkpoint file.
class CheckpointError : public Error {
public:
  using Error::Error;
};

// Class-signature table failed its distinctness gate, or a lookup met a
// signature that matches no class (which would indicate a bug).
class SignatureError : public Error {
public:
  using Error::Error;
};

} // namespace bfca
