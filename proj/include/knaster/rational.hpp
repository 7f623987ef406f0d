#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knaster {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Every gmpxx arithmetic result is canonical; values built from
/// a raw numerator/denominator pair must go through make_rat().
using Rat = mpq_class;

/// Malformed or out-of-domain input. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exact check that should hold failed. The CLI maps this to exit code 1.
class VerificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(std::int64_t num, std::int64_t den = 1);

/// Greatest integer <= x.
Int floor(const Rat& x);
/// Least integer >= x.
Int ceil(const Rat& x);

bool is_integer(const Rat& x);
bool in_unit_interval(const Rat& x);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Parses "p" or "p/q". With `strict`, only the canonical spelling produced
/// by to_string() is accepted (reduced, q > 1, no sign on q, no leading
/// zeros, no '+').
Rat parse_rat(std::string_view text, bool strict = true);
Int parse_int(std::string_view text);

/// Converts to int64 or throws InvalidInput if it does not fit.
std::int64_t to_int64(const Int& x);
std::uint64_t to_uint64(const Int& x);

} // namespace knaster
