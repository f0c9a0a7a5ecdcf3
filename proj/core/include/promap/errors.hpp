#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace promap {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad user-supplied configuration (sizes, counts, flag combinations).
class ConfigError : public Error {
public:
  using Error::Error;
};

// Malformed input file; carries the 1-based line where parsing stopped.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// A word segments into more sub-tokens than the padded span can hold.
// Callers decide the exclusion policy, so the actual count travels along.
class OverLengthError : public Error {
public:
  OverLengthError(const std::string& word, std::size_t subtokens, std::size_t limit)
      : Error("word '" + word + "' has " + std::to_string(subtokens) +
              " sub-tokens, limit is " + std::to_string(limit)),
        subtokens_(subtokens) {}

  std::size_t subtoken_count() const { return subtokens_; }

private:
  std::size_t subtokens_;
};

}  // namespace promap
