#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lpgg/algebra.hpp"
#include "lpgg/errors.hpp"
#include "lpgg/scalar.hpp"

namespace lpgg {

/// Element of G(p,q): a coefficient map over the blade basis. Zero
/// coefficients are never stored, so the empty map is the zero element.
template <ScalarType S>
class Multivector {
 public:
  using scalar_type = S;
  using traits = ScalarTraits<S>;
  using TermMap = std::map<Blade, S>;

  Multivector() = default;
  explicit Multivector(const AlgebraContext& ctx) : ctx_(ctx) {}
  Multivector(const AlgebraContext& ctx, const S& scalar) : ctx_(ctx) { add(0, scalar); }

  static Multivector scalar(const AlgebraContext& ctx, const S& value) { return Multivector(ctx, value); }

  static Multivector blade(const AlgebraContext& ctx, Blade b, const S& coefficient = traits::one()) {
    if (b >= ctx.blade_count()) throw DomainError("blade outside " + ctx.to_string());
    Multivector out(ctx);
    out.add(b, coefficient);
    return out;
  }

  /// Basis vector with the given 0-based generator index.
  static Multivector generator(const AlgebraContext& ctx, int index) {
    if (index < 0 || index >= ctx.dimension()) throw DomainError("generator index out of range");
    return blade(ctx, Blade{1} << index);
  }

  const AlgebraContext& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  S coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? traits::zero() : it->second;
  }
  S scalar_part() const { return coefficient(0); }

  /// Accumulates coefficient * blade(b).
  void add(Blade b, const S& coefficient) {
    if (traits::is_zero(coefficient)) return;
    auto [it, inserted] = terms_.try_emplace(b, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Sorted list of grades with nonzero parts.
  std::vector<int> grades() const {
    std::vector<int> out;
    for (const auto& [b, c] : terms_) out.push_back(grade(b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  bool has_only_grades(std::initializer_list<int> allowed) const {
    for (const auto& [b, c] : terms_) {
      if (std::find(allowed.begin(), allowed.end(), grade(b)) == allowed.end()) return false;
    }
    return true;
  }

  /// Largest coefficient magnitude; used as the scale for approximate equality.
  double magnitude() const {
    double m = 0.0;
    for (const auto& [b, c] : terms_) m = std::max(m, traits::magnitude(c));
    return m;
  }

  Multivector operator-() const {
    Multivector out(ctx_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
  }

  Multivector& operator+=(const Multivector& rhs) {
    require_same(rhs);
    for (const auto& [b, c] : rhs.terms_) add(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& rhs) {
    require_same(rhs);
    for (const auto& [b, c] : rhs.terms_) add(b, -c);
    return *this;
  }
  Multivector& operator*=(const S& s) {
    if (traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    std::erase_if(terms_, [](const auto& kv) { return traits::is_zero(kv.second); });
    return *this;
  }
  Multivector& operator/=(const S& s) {
    if (traits::is_zero(s)) throw DivisionByZeroError("multivector divided by zero");
    for (auto& [b, c] : terms_) c /= s;
    return *this;
  }
  Multivector& operator*=(const Multivector& rhs);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, const S& s) { return a /= s; }
  friend Multivector operator*(const Multivector& a, const Multivector& b) { return geometric_product(a, b); }

  /// Exact backends compare exactly; approximate ones per coefficient,
  /// relative to the larger operand's magnitude.
  friend bool operator==(const Multivector& a, const Multivector& b) {
    if (!(a.ctx_ == b.ctx_)) return false;
    if constexpr (traits::exact) {
      return a.terms_ == b.terms_;
    } else {
      double scale = std::max(a.magnitude(), b.magnitude());
      auto ia = a.terms_.begin();
      auto ib = b.terms_.begin();
      while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
          if (!traits::equal(ia->second, traits::zero(), scale)) return false;
          ++ia;
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
          if (!traits::equal(traits::zero(), ib->second, scale)) return false;
          ++ib;
        } else {
          if (!traits::equal(ia->second, ib->second, scale)) return false;
          ++ia;
          ++ib;
        }
      }
      return true;
    }
  }

  void require_same(const Multivector& other) const {
    if (!(ctx_ == other.ctx_)) {
      throw ContextMismatchError("operands in " + ctx_.to_string() + " and " + other.ctx_.to_string());
    }
  }

 private:
  AlgebraContext ctx_;
  TermMap terms_;
};

namespace detail {

/// Sum over blade pairs of the signed blade product, keeping only pairs
/// accepted by keep(grade_a, grade_b, grade_result).
template <class S, class Keep>
Multivector<S> filtered_product(const Multivector<S>& u, const Multivector<S>& v, Keep keep) {
  u.require_same(v);
  const AlgebraContext& ctx = u.context();
  Multivector<S> out(ctx);
  for (const auto& [a, ca] : u.terms()) {
    int ga = grade(a);
    for (const auto& [b, cb] : v.terms()) {
      Blade c = a ^ b;
      if (!keep(ga, grade(b), grade(c))) continue;
      S coef = ca * cb;
      if (blade_product_sign(ctx, a, b) < 0) coef = -coef;
      out.add(c, coef);
    }
  }
  return out;
}

}  // namespace detail

template <ScalarType S>
Multivector<S> geometric_product(const Multivector<S>& u, const Multivector<S>& v) {
  return detail::filtered_product(u, v, [](int, int, int) { return true; });
}

template <ScalarType S>
Multivector<S>& Multivector<S>::operator*=(const Multivector& rhs) {
  *this = geometric_product(*this, rhs);
  return *this;
}

/// Grade-raising part of the product: <u_r v_s>_{r+s} per blade pair.
template <ScalarType S>
Multivector<S> outer_product(const Multivector<S>& u, const Multivector<S>& v) {
  return detail::filtered_product(u, v, [](int ga, int gb, int gc) { return gc == ga + gb; });
}

/// Left fold of outer products; the empty list gives the scalar 1.
template <ScalarType S>
Multivector<S> wedge_list(std::span<const Multivector<S>> factors, const AlgebraContext& ctx) {
  Multivector<S> out(ctx, ScalarTraits<S>::one());
  for (const auto& f : factors) out = outer_product(out, f);
  return out;
}

template <ScalarType S>
Multivector<S> wedge_list(const std::vector<Multivector<S>>& factors) {
  if (factors.empty()) throw DomainError("wedge of an empty list needs an explicit context");
  return wedge_list(std::span<const Multivector<S>>(factors), factors.front().context());
}

/// Inner product: grade |r - s| part of the product of grade-r and grade-s
/// pieces, summed over all grade pairs.
template <ScalarType S>
Multivector<S> dot(const Multivector<S>& u, const Multivector<S>& v) {
  return detail::filtered_product(u, v, [](int ga, int gb, int gc) { return gc == std::abs(ga - gb); });
}

/// Scalar part of the geometric product.
template <ScalarType S>
S scalar_product(const Multivector<S>& u, const Multivector<S>& v) {
  u.require_same(v);
  S out = ScalarTraits<S>::zero();
  for (const auto& [a, ca] : u.terms()) {
    auto it = v.terms().find(a);
    if (it == v.terms().end()) continue;
    S term = ca * it->second;
    if (blade_product_sign(u.context(), a, a) < 0) term = -term;
    out += term;
  }
  return out;
}

template <ScalarType S>
Multivector<S> grade_projection(const Multivector<S>& u, int k) {
  Multivector<S> out(u.context());
  if (k < 0 || k > u.context().dimension()) return out;
  for (const auto& [b, c] : u.terms()) {
    if (grade(b) == k) out.add(b, c);
  }
  return out;
}

/// Reverses the factor order of every blade: sign (-1)^{k(k-1)/2} on grade k.
template <ScalarType S>
Multivector<S> reverse(const Multivector<S>& u) {
  Multivector<S> out(u.context());
  for (const auto& [b, c] : u.terms()) {
    int k = grade(b);
    out.add(b, ((k * (k - 1) / 2) & 1) ? S(-c) : c);
  }
  return out;
}

/// Multiplies every blade of grade k by (-1)^k.
template <ScalarType S>
Multivector<S> grade_involution(const Multivector<S>& u) {
  Multivector<S> out(u.context());
  for (const auto& [b, c] : u.terms()) out.add(b, (grade(b) & 1) ? S(-c) : c);
  return out;
}

template <ScalarType To, ScalarType From>
Multivector<To> convert(const Multivector<From>& u) {
  Multivector<To> out(u.context());
  for (const auto& [b, c] : u.terms()) out.add(b, scalar_cast<To>(c));
  return out;
}

}  // namespace lpgg
