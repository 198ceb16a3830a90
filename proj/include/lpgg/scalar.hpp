#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <sstream>
#include <string>
#include <string_view>

#include "lpgg/errors.hpp"
#include "lpgg/radical.hpp"
#include "lpgg/rational.hpp"

namespace lpgg {

using Complex = std::complex<double>;

/// Approximate comparisons: relative 1e-10, absolute 1e-12 near zero.
inline constexpr double kRelativeTolerance = 1e-10;
inline constexpr double kAbsoluteTolerance = 1e-12;

inline bool approx_equal(double a, double b, double scale = 0.0) {
  double mag = std::max({std::abs(a), std::abs(b), scale});
  return std::abs(a - b) <= std::max(kAbsoluteTolerance, kRelativeTolerance * mag);
}

inline bool approx_equal(Complex a, Complex b, double scale = 0.0) {
  double mag = std::max({std::abs(a), std::abs(b), scale});
  return std::abs(a - b) <= std::max(kAbsoluteTolerance, kRelativeTolerance * mag);
}

/// Backend-specific operations every scalar type provides. Arithmetic
/// itself goes through the ordinary operators.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view backend = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& r) { return r == 0; }
  static bool equal(const Rational& a, const Rational& b, double = 0.0) { return a == b; }
  static double magnitude(const Rational& r) { return std::abs(r.get_d()); }
  static int sign(const Rational& r) { return sgn(r); }
  /// Exact only for squares of rationals.
  static Rational sqrt(const Rational& r) {
    if (r < 0) throw DomainError("square root of a negative rational");
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 || mpz_perfect_square_p(r.get_den_mpz_t()) == 0) {
      throw InexactOperationError("square root of " + r.get_str() + " is not rational");
    }
    Integer num;
    Integer den;
    mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
    return make_rational(num, den);
  }
  static std::size_t pivot_cost(const Rational& r) {
    return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
  }
  static double to_double(const Rational& r) { return r.get_d(); }
  static std::string to_text(const Rational& r) { return r.get_str(); }
};

template <>
struct ScalarTraits<Radical> {
  static constexpr bool exact = true;
  static constexpr std::string_view backend = "exact";
  static Radical zero() { return {}; }
  static Radical one() { return Radical(1); }
  static Radical from_rational(const Rational& r) { return Radical(r); }
  static bool is_zero(const Radical& r) { return r.is_zero(); }
  static bool equal(const Radical& a, const Radical& b, double = 0.0) { return a == b; }
  static double magnitude(const Radical& r) { return std::abs(r.to_double()); }
  static std::size_t pivot_cost(const Radical& r) { return r.size(); }
  static int sign(const Radical& r) { return r.sign(); }
  /// Exact only when the argument is a nonnegative rational.
  static Radical sqrt(const Radical& r) {
    auto q = r.to_rational();
    if (!q) throw InexactOperationError("square root of a non-rational radical: " + r.to_string());
    return Radical::sqrt_of(*q);
  }
  static double to_double(const Radical& r) { return r.to_double(); }
  static std::string to_text(const Radical& r) { return r.to_string(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view backend = "approx";
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_rational(const Rational& r) { return r.get_d(); }
  static bool is_zero(double r) { return r == 0.0; }
  static bool equal(double a, double b, double scale = 0.0) { return approx_equal(a, b, scale); }
  static double magnitude(double r) { return std::abs(r); }
  static int sign(double r) {
    if (std::abs(r) <= kAbsoluteTolerance) return 0;
    return r > 0 ? 1 : -1;
  }
  static double sqrt(double r) {
    if (r < -kAbsoluteTolerance) throw DomainError("square root of a negative value in the real backend");
    return std::sqrt(std::max(r, 0.0));
  }
  static double to_double(double r) { return r; }
  static std::string to_text(double r) {
    std::ostringstream os;
    os.precision(17);
    os << r;
    return os.str();
  }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr std::string_view backend = "complex";
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_rational(const Rational& r) { return {r.get_d(), 0.0}; }
  static bool is_zero(Complex r) { return r == Complex{}; }
  static bool equal(Complex a, Complex b, double scale = 0.0) { return approx_equal(a, b, scale); }
  static double magnitude(Complex r) { return std::abs(r); }
  static Complex sqrt(Complex r) { return std::sqrt(r); }
  static double to_double(Complex r) { return r.real(); }
  static std::string to_text(Complex r) {
    std::ostringstream os;
    os.precision(17);
    const double re = r.real() == 0.0 ? 0.0 : r.real();  // no "-0"
    if (r.imag() == 0.0) {
      os << re;
    } else if (re == 0.0) {
      os << r.imag() << "i";
    } else {
      os << "(" << re << (r.imag() < 0 ? "-" : "+") << std::abs(r.imag()) << "i)";
    }
    return os.str();
  }
};

template <class S>
concept ScalarType = requires(const S& a, const S& b) {
  { ScalarTraits<S>::zero() } -> std::convertible_to<S>;
  { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
  { ScalarTraits<S>::equal(a, b) } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
};

/// Backend conversion. Exact to approximate is always allowed; the
/// reverse direction does not exist.
template <class To, class From>
To scalar_cast(const From& value) {
  if constexpr (std::is_same_v<To, From>) {
    return value;
  } else if constexpr (std::is_same_v<From, Radical> || std::is_same_v<From, Rational>) {
    if constexpr (std::is_same_v<To, Radical>) {
      return Radical(value);
    } else {
      return To(ScalarTraits<From>::to_double(value));
    }
  } else if constexpr (std::is_same_v<From, double> && std::is_same_v<To, Complex>) {
    return Complex(value, 0.0);
  } else {
    static_assert(std::is_same_v<To, From>, "no conversion from an approximate to an exact backend");
  }
}

}  // namespace lpgg
