#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpgg/fit.hpp"
#include "lpgg/null_frame.hpp"
#include "lpgg/report.hpp"

namespace lpgg {

/// Exponents (or derivative orders) over the coordinates x_1..x_{n+1}.
using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Multivector-valued polynomial in the null coordinates.
template <ScalarType S>
class PolyField {
 public:
  using traits = ScalarTraits<S>;
  using MV = Multivector<S>;
  using TermMap = std::map<MultiIndex, MV>;

  PolyField(const AlgebraContext& ctx, int variables) : ctx_(ctx), vars_(variables) {}

  static PolyField constant(const AlgebraContext& ctx, int variables, const MV& value) {
    PolyField f(ctx, variables);
    f.add(MultiIndex(static_cast<std::size_t>(variables), 0), value);
    return f;
  }

  static PolyField monomial(const AlgebraContext& ctx, MultiIndex exponents, const MV& coefficient) {
    PolyField f(ctx, static_cast<int>(exponents.size()));
    f.add(std::move(exponents), coefficient);
    return f;
  }

  /// Scalar coordinate field x_i.
  static PolyField coordinate(const AlgebraContext& ctx, int variables, int i) {
    MultiIndex e(static_cast<std::size_t>(variables), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(ctx, std::move(e), MV(ctx, traits::one()));
  }

  /// Position field x = sum_i x_i a_i.
  static PolyField position(const NullFrame<S>& frame) {
    PolyField f(frame.context(), frame.size());
    for (int i = 0; i < frame.size(); ++i) {
      MultiIndex e(static_cast<std::size_t>(frame.size()), 0);
      e[i] = 1;
      f.add(std::move(e), frame[i]);
    }
    return f;
  }

  const AlgebraContext& context() const noexcept { return ctx_; }
  int variables() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  void add(MultiIndex exponents, const MV& coefficient) {
    if (static_cast<int>(exponents.size()) != vars_) throw DomainError("exponent vector length mismatch");
    for (int e : exponents)
      if (e < 0) throw DomainError("negative exponent");
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponents), coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// True when every coefficient has grade 0 only.
  bool is_scalar_valued() const {
    for (const auto& [e, c] : terms_)
      if (!c.has_only_grades({0})) return false;
    return true;
  }

  MV evaluate(std::span<const S> point) const {
    if (static_cast<int>(point.size()) != vars_) throw DomainError("evaluation point length mismatch");
    MV out(ctx_);
    for (const auto& [e, c] : terms_) {
      S w = traits::one();
      for (int i = 0; i < vars_; ++i)
        for (int p = 0; p < e[i]; ++p) w *= point[i];
      out += c * w;
    }
    return out;
  }

  PolyField& operator+=(const PolyField& rhs) {
    require_same(rhs);
    for (const auto& [e, c] : rhs.terms_) add(e, c);
    return *this;
  }
  PolyField& operator-=(const PolyField& rhs) {
    require_same(rhs);
    for (const auto& [e, c] : rhs.terms_) add(e, -c);
    return *this;
  }
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(PolyField a, const S& s) {
    PolyField out(a.ctx_, a.vars_);
    for (const auto& [e, c] : a.terms_) out.add(e, c * s);
    return out;
  }
  /// Left multiplication by a constant multivector.
  friend PolyField operator*(const MV& m, const PolyField& f) {
    PolyField out(f.ctx_, f.vars_);
    for (const auto& [e, c] : f.terms_) out.add(e, m * c);
    return out;
  }
  /// Pointwise geometric product.
  friend PolyField operator*(const PolyField& a, const PolyField& b) {
    a.require_same(b);
    PolyField out(a.ctx_, a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        MultiIndex e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add(std::move(e), ca * cb);
      }
    }
    return out;
  }
  /// Approximate backends treat a missing term as zero, so rounding noise
  /// left in an otherwise cancelled term still compares equal.
  friend bool operator==(const PolyField& a, const PolyField& b) {
    if (!(a.ctx_ == b.ctx_) || a.vars_ != b.vars_) return false;
    if constexpr (ScalarTraits<S>::exact) {
      return a.terms_ == b.terms_;
    } else {
      const Multivector<S> zero(a.ctx_);
      for (const auto& [k, v] : a.terms_) {
        auto it = b.terms_.find(k);
        if (!(v == (it == b.terms_.end() ? zero : it->second))) return false;
      }
      for (const auto& [k, v] : b.terms_)
        if (!a.terms_.contains(k) && !(v == zero)) return false;
      return true;
    }
  }

  void require_same(const PolyField& other) const {
    if (!(ctx_ == other.ctx_) || vars_ != other.vars_) {
      throw ContextMismatchError("fields over different frames");
    }
  }

 private:
  AlgebraContext ctx_;
  int vars_;
  TermMap terms_;
};

/// Formal partial derivative d/dx_i (0-based i), coordinates treated as free.
template <ScalarType S>
PolyField<S> partial(const PolyField<S>& f, int i) {
  using traits = ScalarTraits<S>;
  if (i < 0 || i >= f.variables()) throw DomainError("partial derivative index out of range");
  PolyField<S> out(f.context(), f.variables());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    MultiIndex d(e);
    --d[i];
    out.add(std::move(d), c * traits::from_rational(Rational(e[i])));
  }
  return out;
}

/// Finite sum of direction * d^alpha terms with constant multivector
/// directions; application multiplies the direction on the left. Terms with
/// the same multi-index are merged, so equal operators compare equal.
template <ScalarType S>
class DiffOperator {
 public:
  using traits = ScalarTraits<S>;
  using MV = Multivector<S>;
  using TermMap = std::map<MultiIndex, MV>;

  DiffOperator(const AlgebraContext& ctx, int variables) : ctx_(ctx), vars_(variables) {}

  /// direction * d/dx_i.
  static DiffOperator partial(const AlgebraContext& ctx, int variables, int i, const MV& direction) {
    if (i < 0 || i >= variables) throw DomainError("partial derivative index out of range");
    DiffOperator op(ctx, variables);
    MultiIndex m(static_cast<std::size_t>(variables), 0);
    m[i] = 1;
    op.add(std::move(m), direction);
    return op;
  }

  const AlgebraContext& context() const noexcept { return ctx_; }
  int variables() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }

  void add(MultiIndex index, const MV& direction) {
    if (static_cast<int>(index.size()) != vars_) throw DomainError("derivative index length mismatch");
    if (direction.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(index), direction);
    if (!inserted) {
      it->second += direction;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Sparse coordinates over (multi-index, blade).
  std::map<std::pair<MultiIndex, Blade>, S> flatten() const {
    std::map<std::pair<MultiIndex, Blade>, S> out;
    for (const auto& [m, d] : terms_)
      for (const auto& [b, c] : d.terms()) out.emplace(std::make_pair(m, b), c);
    return out;
  }

  DiffOperator& operator+=(const DiffOperator& rhs) {
    require_same(rhs);
    for (const auto& [m, d] : rhs.terms_) add(m, d);
    return *this;
  }
  DiffOperator& operator-=(const DiffOperator& rhs) {
    require_same(rhs);
    for (const auto& [m, d] : rhs.terms_) add(m, -d);
    return *this;
  }
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const DiffOperator& a, const S& s) {
    DiffOperator out(a.ctx_, a.vars_);
    for (const auto& [m, d] : a.terms_) out.add(m, d * s);
    return out;
  }
  friend DiffOperator operator*(const S& s, const DiffOperator& a) { return a * s; }
  /// Left multiplication of every direction by a constant multivector.
  friend DiffOperator operator*(const MV& v, const DiffOperator& a) {
    DiffOperator out(a.ctx_, a.vars_);
    for (const auto& [m, d] : a.terms_) out.add(m, v * d);
    return out;
  }
  /// Approximate backends treat a missing term as zero, so rounding noise
  /// left in an otherwise cancelled term still compares equal.
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
    if (!(a.ctx_ == b.ctx_) || a.vars_ != b.vars_) return false;
    if constexpr (ScalarTraits<S>::exact) {
      return a.terms_ == b.terms_;
    } else {
      const Multivector<S> zero(a.ctx_);
      for (const auto& [k, v] : a.terms_) {
        auto it = b.terms_.find(k);
        if (!(v == (it == b.terms_.end() ? zero : it->second))) return false;
      }
      for (const auto& [k, v] : b.terms_)
        if (!a.terms_.contains(k) && !(v == zero)) return false;
      return true;
    }
  }

  void require_same(const DiffOperator& other) const {
    if (!(ctx_ == other.ctx_) || vars_ != other.vars_) {
      throw ContextMismatchError("operators over different frames");
    }
  }

 private:
  AlgebraContext ctx_;
  int vars_;
  TermMap terms_;
};

/// outer after inner: directions multiply as d_outer * d_inner, orders add.
template <ScalarType S>
DiffOperator<S> compose(const DiffOperator<S>& outer, const DiffOperator<S>& inner) {
  outer.require_same(inner);
  DiffOperator<S> out(outer.context(), outer.variables());
  for (const auto& [m1, d1] : outer.terms()) {
    for (const auto& [m2, d2] : inner.terms()) {
      MultiIndex m(m1);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
      out.add(std::move(m), d1 * d2);
    }
  }
  return out;
}

template <ScalarType S>
DiffOperator<S> square(const DiffOperator<S>& op) {
  return compose(op, op);
}

/// v . op: dot product of v with every direction.
template <ScalarType S>
DiffOperator<S> dot(const Multivector<S>& v, const DiffOperator<S>& op) {
  DiffOperator<S> out(op.context(), op.variables());
  for (const auto& [m, d] : op.terms()) out.add(m, dot(v, d));
  return out;
}

/// op1 . op2: dot products of directions, orders added.
template <ScalarType S>
DiffOperator<S> inner(const DiffOperator<S>& op1, const DiffOperator<S>& op2) {
  op1.require_same(op2);
  DiffOperator<S> out(op1.context(), op1.variables());
  for (const auto& [m1, d1] : op1.terms()) {
    for (const auto& [m2, d2] : op2.terms()) {
      MultiIndex m(m1);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
      out.add(std::move(m), dot(d1, d2));
    }
  }
  return out;
}

template <ScalarType S>
PolyField<S> apply(const DiffOperator<S>& op, const PolyField<S>& f) {
  using traits = ScalarTraits<S>;
  if (!(op.context() == f.context()) || op.variables() != f.variables()) {
    throw ContextMismatchError("operator and field over different frames");
  }
  PolyField<S> out(f.context(), f.variables());
  for (const auto& [m, d] : op.terms()) {
    for (const auto& [e, c] : f.terms()) {
      MultiIndex rest(e);
      Integer factor = 1;
      bool vanishes = false;
      for (std::size_t i = 0; i < e.size() && !vanishes; ++i) {
        if (m[i] > e[i]) {
          vanishes = true;
          break;
        }
        for (int k = 0; k < m[i]; ++k) factor *= e[i] - k;
        rest[i] -= m[i];
      }
      if (vanishes) continue;
      out.add(std::move(rest), (d * c) * traits::from_rational(Rational(factor)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Frame operators

/// nabla = sum_i a^i d_i with a^i the reciprocal frame.
template <ScalarType S>
DiffOperator<S> make_nabla(const NullFrame<S>& frame) {
  auto rec = reciprocal_frame(frame);
  DiffOperator<S> op(frame.context(), frame.size());
  for (int i = 0; i < frame.size(); ++i) op += DiffOperator<S>::partial(frame.context(), frame.size(), i, rec[i]);
  return op;
}

/// Dual-sum gradient sum_i (A - a_i) d_i.
template <ScalarType S>
DiffOperator<S> make_dual_nabla(const NullFrame<S>& frame) {
  DiffOperator<S> op(frame.context(), frame.size());
  for (int i = 0; i < frame.size(); ++i) {
    op += DiffOperator<S>::partial(frame.context(), frame.size(), i, dual_sum(frame, i));
  }
  return op;
}

/// Null gradient sum_i a_i d_i.
template <ScalarType S>
DiffOperator<S> make_null_nabla(const NullFrame<S>& frame) {
  DiffOperator<S> op(frame.context(), frame.size());
  for (int i = 0; i < frame.size(); ++i) op += DiffOperator<S>::partial(frame.context(), frame.size(), i, frame[i]);
  return op;
}

/// Scalar operator sum_i d_i.
template <ScalarType S>
DiffOperator<S> make_flat_partial(const NullFrame<S>& frame) {
  Multivector<S> one(frame.context(), ScalarTraits<S>::one());
  DiffOperator<S> op(frame.context(), frame.size());
  for (int i = 0; i < frame.size(); ++i) op += DiffOperator<S>::partial(frame.context(), frame.size(), i, one);
  return op;
}

/// Scalar operator sum_i d_i^2.
template <ScalarType S>
DiffOperator<S> make_pure_second(const NullFrame<S>& frame) {
  Multivector<S> one(frame.context(), ScalarTraits<S>::one());
  DiffOperator<S> op(frame.context(), frame.size());
  for (int i = 0; i < frame.size(); ++i) {
    MultiIndex m(static_cast<std::size_t>(frame.size()), 0);
    m[i] = 2;
    op.add(std::move(m), one);
  }
  return op;
}

/// Scalar operator sum_{i<j} d_i d_j.
template <ScalarType S>
DiffOperator<S> make_mixed_second(const NullFrame<S>& frame) {
  Multivector<S> one(frame.context(), ScalarTraits<S>::one());
  DiffOperator<S> op(frame.context(), frame.size());
  for (int i = 0; i < frame.size(); ++i) {
    for (int j = i + 1; j < frame.size(); ++j) {
      MultiIndex m(static_cast<std::size_t>(frame.size()), 0);
      m[i] = 1;
      m[j] = 1;
      op.add(std::move(m), one);
    }
  }
  return op;
}

/// All exponent vectors over `variables` coordinates with total degree <= max_degree.
inline std::vector<MultiIndex> monomial_exponents(int variables, int max_degree) {
  std::vector<MultiIndex> out;
  MultiIndex e(static_cast<std::size_t>(variables), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == variables) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

/// True when both operators give identical fields on every scalar monomial
/// of degree <= max_degree.
template <ScalarType S>
bool agree_on_monomials(const DiffOperator<S>& a, const DiffOperator<S>& b, int max_degree = 3) {
  a.require_same(b);
  Multivector<S> one(a.context(), ScalarTraits<S>::one());
  for (auto& e : monomial_exponents(a.variables(), max_degree)) {
    auto f = PolyField<S>::monomial(a.context(), e, one);
    if (!(apply(a, f) == apply(b, f))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Identity report

namespace detail {

template <ScalarType S>
IdentityLine operator_line(std::string identity, const DiffOperator<S>& lhs, std::vector<DiffOperator<S>> terms,
                           const std::vector<Rational>& stated, const std::vector<Rational>& preferred = {}) {
  std::vector<std::map<std::pair<MultiIndex, Blade>, S>> flat;
  for (const auto& t : terms) flat.push_back(t.flatten());
  auto outcome = fit_identity<S>(std::move(identity), lhs.flatten(), std::move(flat), stated, preferred);
  if (outcome.coefficients) {
    // The accepted combination must also act identically on monomial fields.
    DiffOperator<S> rhs(lhs.context(), lhs.variables());
    for (std::size_t k = 0; k < terms.size(); ++k) rhs += terms[k] * (*outcome.coefficients)[k];
    if (!agree_on_monomials(lhs, rhs)) {
      outcome.line.status = Status::fail;
      outcome.line.details = "coefficient fit does not reproduce the action on monomials";
    }
  }
  return outcome.line;
}

template <ScalarType S>
IdentityLine value_line(std::string identity, const Multivector<S>& lhs, std::vector<Multivector<S>> terms,
                        const std::vector<Rational>& stated) {
  std::vector<std::map<Blade, S>> flat;
  for (const auto& t : terms) flat.push_back(t.terms());
  return fit_identity<S>(std::move(identity), lhs.terms(), std::move(flat), stated).line;
}

}  // namespace detail

/// Every decomposition formula for the gradient, plus the two frame
/// identities they rely on, each as an explicit coefficient comparison.
template <ScalarType S>
std::vector<IdentityLine> identity_report(const NullFrame<S>& frame) {
  using traits = ScalarTraits<S>;
  if (frame.n() < 1) throw DomainError("identity report needs n >= 1");
  const int n = frame.n();
  const int size = frame.size();
  const AlgebraContext& ctx = frame.context();
  const Multivector<S> A = k_sum(frame, size);
  const Multivector<S> one(ctx, traits::one());
  auto nabla = make_nabla(frame);
  auto dual = make_dual_nabla(frame);
  auto hat = make_null_nabla(frame);
  auto flat = make_flat_partial(frame);
  auto pure = make_pure_second(frame);
  auto mixed = make_mixed_second(frame);
  auto a_flat = A * flat;
  auto s = [](long v) { return traits::from_rational(Rational(v)); };
  auto r = [](long p, long q) { return make_rational(p, q); };

  std::vector<IdentityLine> lines;
  lines.push_back(detail::operator_line("∇ = (2/n)(A∂ − n∇̂)", nabla, {a_flat, hat}, {r(2, n), r(-2 * n, n)}));
  lines.push_back(detail::operator_line("∇ = (2/n)(∨∇ − (n−1)∇̂)", nabla, {dual, hat}, {r(2, n), r(-2 * (n - 1), n)}));
  lines.push_back(detail::operator_line("A·∇ = (n+1)∂ − 2A·∇̂", dot(A, nabla), {flat, dot(A, hat)},
                                        {Rational(n + 1), Rational(-2)}));
  lines.push_back(detail::operator_line("∨∇ + ∇̂ = A∂", dual + hat, {a_flat}, {Rational(1)}));
  lines.push_back(detail::operator_line("A·∨∇ + A·∇̂ = ((n+1)n/2)∂", dot(A, dual) + dot(A, hat), {flat},
                                        {r((n + 1) * n, 2)}));
  lines.push_back(detail::operator_line("∇̂² = Σ_{i<j} ∂i∂j", square(hat), {mixed}, {Rational(1)}));
  lines.push_back(detail::operator_line("∨∇² = ((n+1)n/2)Σ∂i² + (n²−n+1)Σ_{i<j}∂i∂j", square(dual), {pure, mixed},
                                        {r((n + 1) * n, 2), Rational(n * n - n + 1)}));
  auto combo = dual - hat * s(n - 1);
  auto combo_sq = square(combo) * traits::from_rational(r(4, n * n));
  lines.push_back(detail::operator_line("∇² = (4/n²)(∨∇ − (n−1)∇̂)²", square(nabla), {square(combo)}, {r(4, n * n)}));
  lines.push_back(detail::operator_line("(4/n²)(∨∇ − (n−1)∇̂)² = ∨∇² − 2(n−1)∨∇·∇̂ + ∇̂²", combo_sq,
                                        {square(dual), inner(dual, hat), square(hat)},
                                        {Rational(1), Rational(-2 * (n - 1)), Rational(1)},
                                        {r(4, n * n), r(-8 * (n - 1), n * n), r(4 * (n - 1) * (n - 1), n * n)}));
  lines.push_back(detail::operator_line("∨∇·∇̂ = (n/2)∨∇∂ − ∇̂²", inner(dual, hat),
                                        {compose(dual, flat), square(flat), square(hat)},
                                        {r(n, 2), Rational(0), Rational(-1)}));
  lines.push_back(detail::value_line("A² = (n+1)n/2", A * A, {one}, {r((n + 1) * n, 2)}));
  lines.push_back(detail::value_line("a1·A = (n/2)∨a1", dot(frame[0], A), {dual_sum(frame, 0), one},
                                     {r(n, 2), Rational(0)}));
  if (size >= 2) {
    lines.push_back(detail::value_line("∨a1·∨a2 = n²−n+1", dot(dual_sum(frame, 0), dual_sum(frame, 1)), {one},
                                       {Rational(n * n - n + 1)}));
  }
  return lines;
}

// ---------------------------------------------------------------------------
// Finite differences

enum class FieldTag { norm, unit, square, position };

inline std::string_view field_tag_name(FieldTag t) {
  switch (t) {
    case FieldTag::norm:
      return "|x|";
    case FieldTag::unit:
      return "x_hat";
    case FieldTag::square:
      return "x^2";
    case FieldTag::position:
      return "x";
  }
  return "";
}

inline FieldTag parse_field_tag(std::string_view text) {
  if (text == "|x|" || text == "norm") return FieldTag::norm;
  if (text == "x_hat" || text == "unit") return FieldTag::unit;
  if (text == "x^2" || text == "x2" || text == "square") return FieldTag::square;
  if (text == "x" || text == "position") return FieldTag::position;
  throw ParseError("unknown field tag '" + std::string(text) + "'");
}

struct FiniteDifferenceReport {
  FieldTag tag = FieldTag::norm;
  Multivector<double> numeric;
  Multivector<double> expected;
  double error = 0.0;
  double tolerance = 1e-6;
  bool ok = false;
};

namespace detail {

inline Multivector<double> evaluate_tagged(const NullFrame<double>& frame, FieldTag tag, std::span<const double> x) {
  Multivector<double> v = frame.vector_from(x);
  double sq = (v * v).scalar_part();
  switch (tag) {
    case FieldTag::position:
      return v;
    case FieldTag::square:
      return Multivector<double>(frame.context(), sq);
    case FieldTag::norm:
      if (sq <= 0.0) throw DomainError("|x| is not differentiable on or outside the light cone");
      return Multivector<double>(frame.context(), std::sqrt(sq));
    case FieldTag::unit:
      if (sq <= 0.0) throw DomainError("x_hat is undefined on or outside the light cone");
      return v / std::sqrt(sq);
  }
  return v;
}

}  // namespace detail

/// Central differences contracted with the reciprocal frame, compared to
/// the closed forms grad|x| = x_hat, grad x_hat = n/|x|, grad x^2 = 2x,
/// grad x = n+1.
inline FiniteDifferenceReport finite_difference_check(const NullFrame<double>& frame, FieldTag tag,
                                                      std::span<const double> point, double h,
                                                      double tolerance = 1e-6) {
  if (static_cast<int>(point.size()) != frame.size()) throw DomainError("point length does not match frame");
  if (!(h >= 1e-8)) throw DomainError("finite-difference step below 1e-8");
  Multivector<double> x = frame.vector_from(point);
  double sq = (x * x).scalar_part();
  if (sq <= kAbsoluteTolerance) throw DomainError("point is on or outside the light cone (|x|^2 <= 0)");
  auto rec = reciprocal_frame(frame);
  FiniteDifferenceReport out;
  out.tag = tag;
  out.tolerance = tolerance;
  out.numeric = Multivector<double>(frame.context());
  std::vector<double> plus(point.begin(), point.end());
  std::vector<double> minus(point.begin(), point.end());
  for (int i = 0; i < frame.size(); ++i) {
    plus[i] += h;
    minus[i] -= h;
    auto diff = (detail::evaluate_tagged(frame, tag, plus) - detail::evaluate_tagged(frame, tag, minus)) / (2.0 * h);
    out.numeric += rec[i] * diff;
    plus[i] = point[i];
    minus[i] = point[i];
  }
  double norm = std::sqrt(sq);
  const AlgebraContext& ctx = frame.context();
  switch (tag) {
    case FieldTag::norm:
      out.expected = x / norm;
      break;
    case FieldTag::unit:
      out.expected = Multivector<double>(ctx, frame.n() / norm);
      break;
    case FieldTag::square:
      out.expected = x * 2.0;
      break;
    case FieldTag::position:
      out.expected = Multivector<double>(ctx, static_cast<double>(frame.size()));
      break;
  }
  out.error = (out.numeric - out.expected).magnitude();
  out.ok = out.error <= tolerance;
  return out;
}

}  // namespace lpgg
