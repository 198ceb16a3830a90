#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lpgg/errors.hpp"

namespace lpgg {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long numerator, long denominator = 1) {
  if (denominator == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses an integer ("-3"), a fraction ("7/12") or a finite decimal
/// ("0.3333334", "-1.5e-2") into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw ParseError("not a rational literal: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(pos, end - pos);
  if (body.empty()) fail();

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(body.substr(0, slash));
    Rational den = parse_rational(body.substr(slash + 1));
    if (den == 0) throw DivisionByZeroError("rational literal with zero denominator");
    Rational r = num / den;
    return r;
  }

  bool negative = false;
  std::size_t i = 0;
  if (body[i] == '+' || body[i] == '-') {
    negative = body[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < body.size(); ++i) {
    char c = body[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail();
  long exponent = 0;
  if (i < body.size()) {
    if (body[i] != 'e' && body[i] != 'E') fail();
    ++i;
    std::string exp_text(body.substr(i));
    if (exp_text.empty()) fail();
    try {
      std::size_t used = 0;
      exponent = std::stol(exp_text, &used);
      if (used != exp_text.size()) fail();
    } catch (const std::logic_error&) {
      fail();
    }
  }
  Integer numerator(digits, 10);
  Integer ten_pow;
  long shift = exponent - scale;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift >= 0 ? Rational(numerator * ten_pow) : Rational(numerator, ten_pow);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

/// Decomposition m = root^2 * squarefree.
struct SquarefreeSplit {
  std::uint64_t root = 1;
  std::uint64_t squarefree = 1;
};

inline SquarefreeSplit squarefree_split(std::uint64_t m) {
  if (m == 0) return {0, 1};
  SquarefreeSplit out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      out.root *= p;
      m /= p * p;
    }
    if (m % p == 0) {
      out.squarefree *= p;
      m /= p;
    }
  }
  out.squarefree *= m;
  return out;
}

/// Primes of a squarefree integer, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t squarefree) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= squarefree; ++p) {
    if (squarefree % p == 0) {
      primes.push_back(p);
      squarefree /= p;
    }
  }
  if (squarefree > 1) primes.push_back(squarefree);
  return primes;
}

/// Converts a nonnegative mpz to uint64, or throws when it does not fit.
inline std::uint64_t to_uint64(const Integer& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 63) {
    throw InexactOperationError("integer too large for a radical key: " + z.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
  return out;
}

}  // namespace lpgg
