#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace walg {

using Rational = mpq_class;

/// Every failure raised by the library carries one of these kinds so the CLI
/// can report a machine-readable error record.
enum class ErrorKind {
  InvalidInput,
  Validation,
  InternalConsistency,
  FormPairing,
  NotAMember,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string field = {})
      : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& field() const { return field_; }

 private:
  ErrorKind kind_;
  std::string field_;
};

/// Parses "p/q", "p" or "-p/q". Throws Error(InvalidInput) on anything else or
/// on a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& q);

/// p/q in canonical form; mpq_class(p, q) alone does not canonicalise.
Rational frac(long p, long q);
Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace walg
