#pragma once

#include <stdexcept>
#include <string>

namespace dpl {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

struct NotConjunctive : Error { using Error::Error; };
struct NotDnf : Error { using Error::Error; };
struct NotLiteralDisjunction : Error { using Error::Error; };
struct UnknownAbbreviation : Error { using Error::Error; };

struct DuplicatePlan : Error { using Error::Error; };
struct InconsistentPostcondition : Error { using Error::Error; };
struct NonConjunctivePostcondition : Error { using Error::Error; };
struct UnknownPlan : Error { using Error::Error; };

struct InconsistentLiteralSet : Error { using Error::Error; };
struct InconsistentFormula : Error { using Error::Error; };
struct IncoherentProgram : Error { using Error::Error; };
struct InconsistentAnnouncement : Error { using Error::Error; };

struct VocabularyTooLarge : Error { using Error::Error; };
struct UnknownWorld : Error { using Error::Error; };
struct WorldOutsideExtension : Error { using Error::Error; };
struct VocabularyMismatch : Error { using Error::Error; };
struct NotRanked : Error { using Error::Error; };
struct ResultNotPreorder : Error { using Error::Error; };

}  // namespace dpl
