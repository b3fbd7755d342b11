#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace carleman {

// Exact arbitrary-precision rational coefficients. cpp_rational keeps the
// value reduced with a positive denominator, which is exactly the invariant
// the row codecs rely on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed row text; `line` is 1-based, 0 when unknown.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

// A term violates its schema (unknown symbol, mixed schemas, ...).
struct SchemaError : Error {
    using Error::Error;
};

// An operation precondition was violated by the caller.
struct ContractError : Error {
    using Error::Error;
};

// Parses "p" or "p/q" with optional sign; q must be positive.
Rational parse_rational(const std::string& text);

// Emits the reduced form, "p" when the denominator is 1.
std::string format_rational(const Rational& r);

// r^n for n >= 0.
Rational rational_pow(const Rational& r, int n);

}  // namespace carleman
