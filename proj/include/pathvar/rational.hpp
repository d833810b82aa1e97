#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathvar {

using Rational = mpq_class;

/// Raised when an input violates an operation's precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" (no decimals, q != 0) into canonical form.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p".
std::string to_string(const Rational& q);

}  // namespace pathvar
