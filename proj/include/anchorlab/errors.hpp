#pragma once

#include <stdexcept>
#include <string>

namespace anchorlab {

// Every failure surfaced by the library carries one of these categories.
// The CLI prints them as "error[<kind>]: <message>" and maps them to a
// nonzero exit code.
enum class ErrorKind {
  dimension,
  rank,
  config,
  vocabulary,
  length,
  budget,
  degenerate_input,
  range,
  parse,
  schema,
  format,
  version,
  compatibility,
  io,
  alignment,
  training,
  argument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::rank: return "rank";
    case ErrorKind::config: return "config";
    case ErrorKind::vocabulary: return "vocabulary";
    case ErrorKind::length: return "length";
    case ErrorKind::budget: return "budget";
    case ErrorKind::degenerate_input: return "degenerate-input";
    case ErrorKind::range: return "range";
    case ErrorKind::parse: return "parse";
    case ErrorKind::schema: return "schema";
    case ErrorKind::format: return "format";
    case ErrorKind::version: return "version";
    case ErrorKind::compatibility: return "compatibility";
    case ErrorKind::io: return "io";
    case ErrorKind::alignment: return "alignment";
    case ErrorKind::training: return "training";
    case ErrorKind::argument: return "argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace anchorlab
