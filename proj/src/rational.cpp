#include "walg/rational.hpp"

#include <cctype>

namespace walg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Validation: return "validation-error";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::FormPairing: return "form-pairing";
    case ErrorKind::NotAMember: return "not-a-member";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw Error(ErrorKind::InvalidInput, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class p(num, 10), q(den, 10);
  if (q == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational factorial(long n) {
  mpz_class r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational frac(long p, long q) {
  if (q == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace walg
