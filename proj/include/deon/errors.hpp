#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deon {

// Base class for everything the engine throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors raised while reading concrete syntax. `position` is a 0-based
// byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

// An identifier that is not declared in the vocabulary.
class UnknownAtomError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A deontic operator in a position where only a propositional formula
// is allowed (the language has no nesting).
class NestingError : public ParseError {
 public:
  using ParseError::ParseError;
};

class VocabularyTooLargeError : public Error {
 public:
  using Error::Error;
};

class VocabMismatchError : public Error {
 public:
  using Error::Error;
};

// The normality relation stopped being a reflexive, transitive, totally
// connected relation after an exception introduction.
class NormalityDegenerateError : public Error {
 public:
  using Error::Error;
};

class PremiseLimitError : public Error {
 public:
  using Error::Error;
};

class AbsurdStateError : public Error {
 public:
  using Error::Error;
};

}  // namespace deon
