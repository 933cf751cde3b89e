#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace middiv {

/// Base class for domain errors (the CLI maps these to exit status 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds the trial-division budget; use the factored route instead.
class InputTooLarge : public Error {
 public:
  using Error::Error;
};

class LimitExceedsCap : public Error {
 public:
  using Error::Error;
};

class MalformedLine : public Error {
 public:
  MalformedLine(std::size_t line_number, std::string content)
      : Error("malformed b-file line " + std::to_string(line_number) + ": '" +
              content + "'"),
        line_number_(line_number),
        content_(std::move(content)) {}

  std::size_t line_number() const noexcept { return line_number_; }
  const std::string& content() const noexcept { return content_; }

 private:
  std::size_t line_number_;
  std::string content_;
};

class NonMonotoneIndex : public Error {
 public:
  NonMonotoneIndex(std::size_t line_number, unsigned long long index)
      : Error("b-file index " + std::to_string(index) + " on line " +
              std::to_string(line_number) + " does not increase"),
        line_number_(line_number),
        index_(index) {}

  std::size_t line_number() const noexcept { return line_number_; }
  unsigned long long index() const noexcept { return index_; }

 private:
  std::size_t line_number_;
  unsigned long long index_;
};

}  // namespace middiv
