#pragma once

#include <stdexcept>
#include <string>

namespace ttg {

/* Error taxonomy. Input/Guard/Parse class errors map to CLI exit code 2,
 * everything else that escapes a check is a failed mathematical check (exit 1).
 * Report-returning operations do not throw on violations; they describe them. */
enum class ErrorCode {
  Input,                  // malformed or inconsistent input data
  Guard,                  // size guard exceeded
  Parse,                  // document syntax error
  NotALattice,            // joins (or required meets) missing
  UnknownElement,         // label or id out of range
  MalformedDescriptor,    // Severi-Brauer descriptor ill-formed
  DimensionMismatch,      // proj model dimension disagrees with ecodim
  NotPrime,               // operation applied to a non-prime element
  AdmissibilityViolated,  // datum fails an admissibility hypothesis mid-algorithm
  NotSupportDatum,        // support datum axioms fail upstream
  AmbiguousChoice,        // universal map candidate not unique
  VerificationFailed      // double-entry verification did not confirm
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

  // true for errors that indicate bad input rather than failed mathematics
  bool is_input_error() const {
    switch (code_) {
      case ErrorCode::Input:
      case ErrorCode::Guard:
      case ErrorCode::Parse:
      case ErrorCode::NotALattice:
      case ErrorCode::UnknownElement:
      case ErrorCode::MalformedDescriptor:
      case ErrorCode::DimensionMismatch:
        return true;
      default:
        return false;
    }
  }

private:
  ErrorCode code_;
};

class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& msg)
      : Error(ErrorCode::Parse,
              "parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  ParseError(const std::string& msg, int line)
      : Error(ErrorCode::Parse, "parse error at line " + std::to_string(line) + ": " + msg), line_(line), col_(0) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_, col_;
};

}  // namespace ttg
