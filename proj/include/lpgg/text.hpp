#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lpgg/multivector.hpp"

namespace lpgg {

namespace detail {

template <class S>
bool coefficient_is_compound(const S& c) {
  if constexpr (std::is_same_v<S, Radical>) {
    return c.size() > 1;
  } else {
    // Complex text is already parenthesised when it has two parts.
    return false;
  }
}

template <class S>
bool coefficient_is_negative(const S& c) {
  if constexpr (std::is_same_v<S, Radical>) {
    return c.size() == 1 && sgn(c.terms().front().second) < 0;
  } else if constexpr (std::is_same_v<S, double> || std::is_same_v<S, Rational>) {
    return c < 0;
  } else {
    return (c.imag() == 0.0 && c.real() < 0) || (c.real() == 0.0 && c.imag() < 0);
  }
}

}  // namespace detail

/// Text form: sum of coef*blade terms, e.g. "1/2 - 1/2*e1^f1 + (1 + sqrt(3))*f2".
/// Terms are ordered by grade, then by blade mask.
template <ScalarType S>
std::string to_text(const Multivector<S>& u) {
  using traits = ScalarTraits<S>;
  if (u.is_zero()) return "0";
  std::vector<std::pair<Blade, S>> ordered(u.terms().begin(), u.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& x, const auto& y) { return grade(x.first) < grade(y.first); });
  std::string out;
  bool first = true;
  for (const auto& [b, c] : ordered) {
    std::string coef;
    bool negative = detail::coefficient_is_negative(c);
    if (detail::coefficient_is_compound(c)) {
      coef = "(" + traits::to_text(c) + ")";
      negative = false;
    } else {
      coef = traits::to_text(negative ? S(-c) : c);
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (b == 0) {
      out += coef;
    } else if (coef == "1") {
      out += u.context().blade_name(b);
    } else {
      out += coef + "*" + u.context().blade_name(b);
    }
  }
  return out;
}

namespace detail {

/// Recursive-descent parser for the multivector text form. Accepts
/// rationals, decimals, sqrt(k), blades (e1^f2), parentheses, + - * /.
template <class S>
class MultivectorParser {
 public:
  MultivectorParser(const AlgebraContext& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  Multivector<S> parse() {
    Multivector<S> out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  using traits = ScalarTraits<S>;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("multivector text at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Multivector<S> expression() {
    Multivector<S> out = term();
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  Multivector<S> term() {
    Multivector<S> out = unary();
    while (true) {
      if (accept('*')) {
        out = out * unary();
      } else if (accept('/')) {
        Multivector<S> divisor = unary();
        if (!divisor.has_only_grades({0}) || divisor.is_zero()) fail("division by a non-scalar or zero");
        out /= divisor.scalar_part();
      } else {
        return out;
      }
    }
  }

  Multivector<S> unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Multivector<S> primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Multivector<S> inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      Rational r = parse_rational(text_.substr(start, pos_ - start));
      return Multivector<S>(ctx_, traits::from_rational(r));
    }
    if (text_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      Multivector<S> arg = expression();
      if (!accept(')')) fail("expected ')' after sqrt argument");
      if (!arg.has_only_grades({0})) fail("sqrt of a non-scalar");
      return Multivector<S>(ctx_, traits::sqrt(arg.scalar_part()));
    }
    if (c == 'e' || c == 'f') return blade();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Multivector<S> blade() {
    Multivector<S> out(ctx_, traits::one());
    do {
      skip_space();
      std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'f')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      int index = ctx_.generator_index(name);
      if (index < 0) fail("unknown generator '" + name + "' in " + ctx_.to_string());
      out = outer_product(out, Multivector<S>::generator(ctx_, index));
    } while (accept('^'));
    if (out.is_zero()) fail("repeated generator in blade");
    return out;
  }

  AlgebraContext ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <ScalarType S>
Multivector<S> parse_multivector(const AlgebraContext& ctx, std::string_view text) {
  return detail::MultivectorParser<S>(ctx, text).parse();
}

}  // namespace lpgg
