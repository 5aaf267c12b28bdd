#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monolog {

// Base of every error the library throws. The CLI maps subclasses onto exit
// codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  using Error::Error;
};

class EmptyConcept : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class UnknownContext : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class TemplateError : public Error {
 public:
  enum class Kind { NoVariable, MultipleVariables, Empty };
  TemplateError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ModelError : public Error {
 public:
  enum class Kind { UninterpretedSymbol, UniverseCapExceeded, Invalid };
  ModelError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Malformed input file; carries the 1-based line number when one applies.
class FileFormatError : public Error {
 public:
  FileFormatError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ExtractionError : public Error {
 public:
  enum class Kind { IdenticalSentences, EmptySpan, NoContext, ReservedToken };
  ExtractionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class UnannotatedContext : public Error {
 public:
  using Error::Error;
};

class ScoreError : public Error {
 public:
  enum class Kind { MissingPrediction, DuplicatePrediction, UnexpectedPrediction, UnknownLabel, DuplicateGold };
  ScoreError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace monolog
