#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lpgg/errors.hpp"
#include "lpgg/rational.hpp"

namespace lpgg {

/// Exact element of the multiquadratic field Q(sqrt 2, sqrt 3, ...): a finite
/// sum of terms r * sqrt(m), m squarefree and positive, r a nonzero rational.
/// The rational part is stored under key m = 1.
///
/// Distinct square roots of squarefree integers are linearly independent
/// over Q, so the term list is a canonical form: two values are equal iff
/// their term lists are equal, and a value is zero iff the list is empty.
class Radical {
 public:
  using Key = std::uint64_t;
  using Term = std::pair<Key, Rational>;

  Radical() = default;
  Radical(int value) : Radical(Rational(value)) {}
  Radical(long value) : Radical(Rational(value)) {}
  Radical(const Rational& value) {
    if (value != 0) terms_.emplace_back(1, value);
  }

  /// coefficient * sqrt(radicand) for any nonnegative integer radicand.
  static Radical surd(const Rational& coefficient, std::uint64_t radicand) {
    Radical out;
    if (coefficient == 0 || radicand == 0) return out;
    auto split = squarefree_split(radicand);
    out.terms_.emplace_back(split.squarefree, coefficient * Rational(Integer(static_cast<unsigned long>(split.root))));
    return out;
  }

  /// Exact square root of a nonnegative rational: sqrt(a/b) = sqrt(a*b)/b.
  static Radical sqrt_of(const Rational& value) {
    if (value < 0) throw InexactOperationError("square root of a negative rational is not real");
    if (value == 0) return {};
    Integer product = value.get_num() * value.get_den();
    Rational scale(Integer(1), value.get_den());
    return surd(scale, to_uint64(product));
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 1);
  }
  std::optional<Rational> to_rational() const {
    if (!is_rational()) return std::nullopt;
    return rational_part();
  }
  Rational rational_part() const {
    if (!terms_.empty() && terms_.front().first == 1) return terms_.front().second;
    return Rational(0);
  }
  std::size_t size() const noexcept { return terms_.size(); }

  double to_double() const {
    double sum = 0.0;
    for (const auto& [key, coef] : terms_) sum += coef.get_d() * std::sqrt(static_cast<double>(key));
    return sum;
  }

  /// Image under the field automorphism sqrt(prime) -> -sqrt(prime).
  Radical conjugate(Key prime) const {
    Radical out = *this;
    for (auto& [key, coef] : out.terms_) {
      if (key % prime == 0) coef = -coef;
    }
    return out;
  }

  /// Multiplicative inverse, obtained by multiplying through by the
  /// conjugates of every prime until the denominator becomes rational.
  Radical inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero radical");
    Radical numerator(1);
    Radical denominator = *this;
    while (!denominator.is_rational()) {
      Key prime = denominator.some_prime();
      Radical conj = denominator.conjugate(prime);
      numerator *= conj;
      denominator *= conj;
    }
    Rational r = denominator.rational_part();
    return numerator * Rational(1 / r);
  }

  /// -1, 0 or +1; exact.
  int sign() const {
    if (terms_.empty()) return 0;
    if (is_rational()) return sgn(terms_.front().second) > 0 ? 1 : -1;
    bool all_positive = true;
    bool all_negative = true;
    for (const auto& t : terms_) {
      if (sgn(t.second) > 0) all_negative = false; else all_positive = false;
    }
    if (all_positive) return 1;
    if (all_negative) return -1;
    // x = u + v sqrt(p) with u, v free of sqrt(p).
    Key prime = some_prime();
    Radical u, v;
    for (const auto& [key, coef] : terms_) {
      if (key % prime == 0) v.terms_.emplace_back(key / prime, coef);
      else u.terms_.emplace_back(key, coef);
    }
    std::sort(v.terms_.begin(), v.terms_.end(), by_key);
    int su = u.sign();
    int sv = v.sign();
    if (su == 0) return sv;
    if (sv == 0 || su == sv) return su;
    Radical diff = u * u - v * v * Rational(Integer(static_cast<unsigned long>(prime)));
    return su * diff.sign();
  }

  Radical operator-() const {
    Radical out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  Radical& operator+=(const Radical& rhs) {
    merge(rhs, false);
    return *this;
  }
  Radical& operator-=(const Radical& rhs) {
    merge(rhs, true);
    return *this;
  }

  Radical& operator*=(const Radical& rhs) {
    if (is_zero() || rhs.is_zero()) {
      terms_.clear();
      return *this;
    }
    if (rhs.is_rational()) {
      const Rational& r = rhs.terms_.front().second;
      for (auto& t : terms_) t.second *= r;
      return *this;
    }
    std::vector<Term> products;
    products.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& [k1, c1] : terms_) {
      for (const auto& [k2, c2] : rhs.terms_) {
        Key g = std::gcd(k1, k2);
        Key a = k1 / g;
        Key b = k2 / g;
        if (b != 0 && a > UINT64_MAX / b) throw InexactOperationError("radical key overflow");
        products.emplace_back(a * b, c1 * c2 * Rational(Integer(static_cast<unsigned long>(g))));
      }
    }
    std::sort(products.begin(), products.end(), by_key);
    terms_.clear();
    for (auto& t : products) {
      if (!terms_.empty() && terms_.back().first == t.first) {
        terms_.back().second += t.second;
      } else {
        terms_.push_back(std::move(t));
      }
    }
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
    return *this;
  }

  Radical& operator/=(const Radical& rhs) {
    if (rhs.is_zero()) throw DivisionByZeroError("division by zero radical");
    if (rhs.is_rational()) {
      const Rational& r = rhs.terms_.front().second;
      for (auto& t : terms_) t.second /= r;
      return *this;
    }
    return *this *= rhs.inverse();
  }

  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(Radical a, const Radical& b) { return a *= b; }
  friend Radical operator/(Radical a, const Radical& b) { return a /= b; }

  friend bool operator==(const Radical& a, const Radical& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
    }
    return true;
  }
  friend std::strong_ordering operator<=>(const Radical& a, const Radical& b) {
    int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "0", "3/2", "-sqrt(3)", "1/2*sqrt(6)", "1 + 1/2*sqrt(3)".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coef] : terms_) {
      Rational magnitude = abs(coef);
      bool negative = sgn(coef) < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (key == 1) {
        out += magnitude.get_str();
      } else if (magnitude == 1) {
        out += "sqrt(" + std::to_string(key) + ")";
      } else {
        out += magnitude.get_str() + "*sqrt(" + std::to_string(key) + ")";
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Radical& r) { return os << r.to_string(); }

 private:
  static bool by_key(const Term& a, const Term& b) { return a.first < b.first; }

  Key some_prime() const {
    for (const auto& t : terms_) {
      if (t.first != 1) return prime_factors(t.first).front();
    }
    return 1;
  }

  void merge(const Radical& rhs, bool subtract) {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() || j != rhs.terms_.end()) {
      if (j == rhs.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
        ++j;
      } else {
        Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
        if (c != 0) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

}  // namespace lpgg
