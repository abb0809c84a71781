#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropid {

  // Raised on malformed input or a violated precondition (dimension mismatch,
  // unmapped variable, bad exponent vector). Maps to CLI exit code 1.
  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A grammar error at a known character offset of the parsed text.
  class ParseError : public UsageError {
   public:
    ParseError(std::string const& text, std::size_t position, std::string const& what)
        : UsageError(format(text, position, what)), _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    static std::string format(std::string const& text, std::size_t position, std::string const& what) {
      std::string msg = "parse error at position " + std::to_string(position) + ": " + what + "\n  "
                        + text + "\n  " + std::string(position, ' ') + "^";
      return msg;
    }

    std::size_t _position;
  };

  // An enumeration would exceed its configured cap. We refuse instead of
  // truncating. Maps to CLI exit code 2.
  class LimitExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace tropid
