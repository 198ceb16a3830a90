#pragma once

#include <array>
#include <string>
#include <vector>

#include "lpgg/matrix.hpp"
#include "lpgg/multivector.hpp"
#include "lpgg/text.hpp"

namespace lpgg {

/// Correlated null frame a_1..a_{n+1} inside G(1,n) (sign +1) or G(n,1)
/// (sign -1). Public indices are 0-based throughout.
///
/// The standard frame F = (u_1, ..., u_{n+1}) is (e1, f1, ..., fn) for the
/// positive case and (f1, e1, ..., en) for the negative case. Rows of T are
/// the F-coordinates of the a_i.
template <ScalarType S>
class NullFrame {
 public:
  using traits = ScalarTraits<S>;
  using MV = Multivector<S>;

  NullFrame(AlgebraContext ctx, int sign, std::vector<int> standard_order, std::vector<MV> vectors, Matrix<S> t,
            Matrix<S> t_inv)
      : ctx_(ctx),
        sign_(sign),
        standard_order_(std::move(standard_order)),
        vectors_(std::move(vectors)),
        t_(std::move(t)),
        t_inv_(std::move(t_inv)) {}

  const AlgebraContext& context() const noexcept { return ctx_; }
  int sign() const noexcept { return sign_; }
  /// n+1, the number of null vectors.
  int size() const noexcept { return static_cast<int>(vectors_.size()); }
  int n() const noexcept { return size() - 1; }

  const std::vector<MV>& vectors() const noexcept { return vectors_; }
  const MV& operator[](int i) const { return vectors_.at(static_cast<std::size_t>(i)); }

  const Matrix<S>& T() const noexcept { return t_; }
  const Matrix<S>& T_inv() const noexcept { return t_inv_; }

  /// Generator index (in the algebra) of the j-th standard frame vector u_{j+1}.
  int standard_generator(int j) const { return standard_order_.at(static_cast<std::size_t>(j)); }
  MV standard_vector(int j) const { return MV::generator(ctx_, standard_generator(j)); }

  /// Name of the j-th standard frame vector, e.g. "e1" or "f2".
  std::string standard_name(int j) const { return ctx_.generator_name(standard_generator(j)); }

  /// Vector with the given null coordinates.
  MV vector_from(std::span<const S> x) const {
    if (static_cast<int>(x.size()) != size()) throw DomainError("coordinate row length does not match frame");
    MV out(ctx_);
    for (int i = 0; i < size(); ++i) {
      if (!traits::is_zero(x[i])) out += vectors_[i] * x[i];
    }
    return out;
  }

  /// Null coordinates of a grade-1 element (x = s T^{-1}).
  std::vector<S> coordinates_of(const MV& v) const {
    if (!v.has_only_grades({1})) throw DomainError("null coordinates need a grade-1 element");
    std::vector<S> s(static_cast<std::size_t>(size()), traits::zero());
    for (int j = 0; j < size(); ++j) s[j] = v.coefficient(Blade{1} << standard_generator(j));
    return std::span<const S>(s) * t_inv_;
  }

 private:
  AlgebraContext ctx_;
  int sign_;
  std::vector<int> standard_order_;
  std::vector<MV> vectors_;
  Matrix<S> t_;
  Matrix<S> t_inv_;
};

namespace detail {

template <class S>
Matrix<S> invert_transition(const Matrix<S>& t) {
  if constexpr (std::is_same_v<S, Radical>) {
    // Columns of T share one surd each, so T^t takes the rational path.
    return RadicalSolver(t.transpose()).inverse().transpose();
  } else {
    return inverse(t);
  }
}

}  // namespace detail

/// Builds the frame by inverting the k-sum recursion
///   a_{k+1} = (A_k + sqrt(k(k-1)/2) u_{k+1}) / (k-1),
/// starting from a_1 = (u_1 + u_2)/2, a_2 = (u_1 - u_2)/2.
template <ScalarType S>
NullFrame<S> build_null_frame(int n_plus_1, int sign) {
  using traits = ScalarTraits<S>;
  using MV = Multivector<S>;
  if (sign != 1 && sign != -1) throw DomainError("frame sign must be +1 or -1");
  if (n_plus_1 < 2) throw DomainError("a null frame needs at least two vectors");
  if (n_plus_1 > kMaxDimension) {
    throw DimensionLimitError("frame size " + std::to_string(n_plus_1) + " exceeds " + std::to_string(kMaxDimension));
  }
  const int n = n_plus_1 - 1;
  AlgebraContext ctx = sign > 0 ? AlgebraContext(1, n) : AlgebraContext(n, 1);

  std::vector<int> order;
  if (sign > 0) {
    for (int j = 0; j <= n; ++j) order.push_back(j);
  } else {
    order.push_back(n);
    for (int j = 0; j < n; ++j) order.push_back(j);
  }
  std::vector<MV> u;
  for (int g : order) u.push_back(MV::generator(ctx, g));

  const S half = traits::from_rational(make_rational(1, 2));
  std::vector<MV> a;
  a.push_back((u[0] + u[1]) * half);
  a.push_back((u[0] - u[1]) * half);
  MV sum = a[0] + a[1];
  for (int k = 2; k < n_plus_1; ++k) {
    S root = traits::sqrt(traits::from_rational(make_rational(k * (k - 1), 2)));
    MV next = (sum + u[k] * root) / traits::from_rational(Rational(k - 1));
    sum += next;
    a.push_back(std::move(next));
  }

  Matrix<S> t(n_plus_1, n_plus_1);
  for (int i = 0; i < n_plus_1; ++i)
    for (int j = 0; j < n_plus_1; ++j) t(i, j) = a[i].coefficient(Blade{1} << order[j]);
  Matrix<S> t_inv = detail::invert_transition(t);
  return NullFrame<S>(ctx, sign, std::move(order), std::move(a), std::move(t), std::move(t_inv));
}

// ---------------------------------------------------------------------------
// Coordinates

enum class CoordinateBasis { standard, null };

/// Row of n+1 coordinates multiplying a column of basis vectors.
template <ScalarType S>
struct CoordinateRow {
  std::vector<S> entries;
  CoordinateBasis basis = CoordinateBasis::standard;
};

template <ScalarType S>
CoordinateRow<S> to_null_coordinates(const NullFrame<S>& frame, const CoordinateRow<S>& s) {
  if (s.basis != CoordinateBasis::standard) throw DomainError("expected standard coordinates");
  if (static_cast<int>(s.entries.size()) != frame.size()) throw DomainError("coordinate row length mismatch");
  return {std::span<const S>(s.entries) * frame.T_inv(), CoordinateBasis::null};
}

template <ScalarType S>
CoordinateRow<S> to_standard_coordinates(const NullFrame<S>& frame, const CoordinateRow<S>& x) {
  if (x.basis != CoordinateBasis::null) throw DomainError("expected null coordinates");
  if (static_cast<int>(x.entries.size()) != frame.size()) throw DomainError("coordinate row length mismatch");
  return {std::span<const S>(x.entries) * frame.T(), CoordinateBasis::standard};
}

// ---------------------------------------------------------------------------
// Multiplication table

/// The four elements a_i, a_j, a_i a_j, a_j a_i of a pair.
template <ScalarType S>
std::array<Multivector<S>, 4> pair_elements(const NullFrame<S>& frame, int i, int j) {
  const auto& ai = frame[i];
  const auto& aj = frame[j];
  return {ai, aj, ai * aj, aj * ai};
}

/// Products row * column over the pair elements.
template <ScalarType S>
std::array<std::array<Multivector<S>, 4>, 4> multiplication_grid(const NullFrame<S>& frame, int i, int j) {
  auto e = pair_elements(frame, i, j);
  std::array<std::array<Multivector<S>, 4>, 4> grid;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) grid[r][c] = e[r] * e[c];
  return grid;
}

/// Table entries as (element index, sign) with index -1 for zero.
/// Element indices: 0 = a_i, 1 = a_j, 2 = a_i a_j, 3 = a_j a_i.
struct TableEntry {
  int element;
  int sign;
};

inline std::array<std::array<TableEntry, 4>, 4> expected_table(int s) {
  return {{{{{-1, 1}, {2, 1}, {-1, 1}, {0, s}}},
           {{{3, 1}, {-1, 1}, {1, s}, {-1, 1}}},
           {{{0, s}, {-1, 1}, {2, s}, {-1, 1}}},
           {{{-1, 1}, {1, s}, {-1, 1}, {3, s}}}}};
}

inline std::string table_entry_text(const TableEntry& e) {
  static const char* names[] = {"a_i", "a_j", "a_ia_j", "a_ja_i"};
  if (e.element < 0) return "0";
  return std::string(e.sign < 0 ? "-" : "") + names[e.element];
}

struct TableReport {
  int n_plus_1 = 0;
  int sign = 1;
  int pairs_checked = 0;
  int entries_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

template <ScalarType S>
TableReport verify_multiplication_table(const NullFrame<S>& frame) {
  TableReport report;
  report.n_plus_1 = frame.size();
  report.sign = frame.sign();
  const auto expected = expected_table(frame.sign());
  static const char* names[] = {"a_i", "a_j", "a_ia_j", "a_ja_i"};
  for (int i = 0; i < frame.size(); ++i) {
    for (int j = i + 1; j < frame.size(); ++j) {
      auto e = pair_elements(frame, i, j);
      auto grid = multiplication_grid(frame, i, j);
      ++report.pairs_checked;
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          ++report.entries_checked;
          const TableEntry& want = expected[r][c];
          Multivector<S> target(frame.context());
          if (want.element >= 0) target = want.sign < 0 ? -e[want.element] : e[want.element];
          if (!(grid[r][c] == target)) {
            report.violations.push_back("(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") " +
                                        names[r] + " * " + names[c] + ": expected " + table_entry_text(want) +
                                        ", got " + to_text(grid[r][c]));
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Sums

/// A_k = a_1 + ... + a_k, 1 <= k <= n+1.
template <ScalarType S>
Multivector<S> k_sum(const NullFrame<S>& frame, int k) {
  if (k < 1 || k > frame.size()) throw DomainError("k_sum index out of range");
  Multivector<S> out(frame.context());
  for (int i = 0; i < k; ++i) out += frame[i];
  return out;
}

/// sqrt(2/(k(k-1))) A_k; its square is the frame sign.
template <ScalarType S>
Multivector<S> unit_k_sum(const NullFrame<S>& frame, int k) {
  using traits = ScalarTraits<S>;
  if (k < 2) throw DomainError("unit_k_sum needs k >= 2");
  return k_sum(frame, k) * traits::sqrt(traits::from_rational(make_rational(2, k * (k - 1))));
}

/// A_{n+1} - a_i.
template <ScalarType S>
Multivector<S> dual_sum(const NullFrame<S>& frame, int i) {
  if (i < 0 || i >= frame.size()) throw DomainError("dual_sum index out of range");
  return k_sum(frame, frame.size()) - frame[i];
}

/// a^i with a^i . a_j = delta_ij: a^i = sum_j (T^{-1})_{ji} u_j / u_j^2.
template <ScalarType S>
std::vector<Multivector<S>> reciprocal_frame(const NullFrame<S>& frame) {
  using traits = ScalarTraits<S>;
  std::vector<Multivector<S>> out;
  for (int i = 0; i < frame.size(); ++i) {
    Multivector<S> r(frame.context());
    for (int j = 0; j < frame.size(); ++j) {
      const S& c = frame.T_inv()(j, i);
      if (traits::is_zero(c)) continue;
      int g = frame.standard_generator(j);
      r.add(Blade{1} << g, frame.context().generator_square(g) > 0 ? c : S(-c));
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pseudoscalar relation

template <ScalarType S>
struct PseudoscalarRelation {
  Multivector<S> lhs;
  Multivector<S> rhs;
  S coefficient;
  bool match = false;
};

/// e1 f1 ... fn against -sqrt(2^{n+1}/n) a_1 ^ ... ^ a_{n+1}.
template <ScalarType S>
PseudoscalarRelation<S> pseudoscalar_relation(const NullFrame<S>& frame) {
  using traits = ScalarTraits<S>;
  if (frame.sign() < 0) throw DomainError("pseudoscalar relation is stated for positive frames");
  const int n = frame.n();
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  S coefficient = -traits::sqrt(traits::from_rational(make_rational(power, Integer(n))));
  PseudoscalarRelation<S> out;
  out.lhs = Multivector<S>::blade(frame.context(), frame.context().pseudoscalar());
  out.rhs = wedge_list(frame.vectors()) * coefficient;
  out.coefficient = coefficient;
  out.match = out.lhs == out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// Canonical null-product basis

/// Index subsets of {0..size-1} as bitmasks, ordered by size, then
/// lexicographically by their sorted index lists.
inline std::vector<Blade> canonical_subsets(int size) {
  std::vector<Blade> out;
  out.reserve(std::size_t{1} << size);
  std::vector<int> idx;
  for (int k = 0; k <= size; ++k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) idx[t] = t;
    while (true) {
      Blade mask = 0;
      for (int t : idx) mask |= Blade{1} << t;
      out.push_back(mask);
      int t = k - 1;
      while (t >= 0 && idx[t] == size - k + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
  }
  return out;
}

inline std::string subset_label(Blade mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int k = 0; mask >> k; ++k) {
    if (mask & (Blade{1} << k)) out += "a" + std::to_string(k + 1);
  }
  return out;
}

/// Products a_{i1} a_{i2} ... a_{ik} over increasing index subsets, with the
/// change-of-basis matrix to the blade basis (row = product, column = blade).
template <ScalarType S>
class NullCanonicalBasis {
 public:
  using traits = ScalarTraits<S>;
  static constexpr int kMaxFrame = 8;

  explicit NullCanonicalBasis(const NullFrame<S>& frame) : ctx_(frame.context()) {
    if (frame.size() > kMaxFrame) {
      throw DimensionLimitError("canonical null basis is limited to n+1 <= " + std::to_string(kMaxFrame));
    }
    subsets_ = canonical_subsets(frame.size());
    const std::size_t count = subsets_.size();
    std::vector<Multivector<S>> by_mask(count);
    by_mask[0] = Multivector<S>(ctx_, traits::one());
    for (Blade mask = 1; mask < count; ++mask) {
      int top = std::bit_width(mask) - 1;
      by_mask[mask] = by_mask[mask & ~(Blade{1} << top)] * frame[top];
    }
    matrix_ = Matrix<S>(count, count);
    for (std::size_t r = 0; r < count; ++r) {
      products_.push_back(by_mask[subsets_[r]]);
      for (const auto& [b, c] : products_.back().terms()) matrix_(r, b) = c;
    }
    // Solving c M = v means M^t c^t = v^t; throws SingularMatrixError when
    // the products are dependent.
    solver_.emplace(matrix_.transpose());
  }

  const std::vector<Blade>& subsets() const noexcept { return subsets_; }
  const std::vector<Multivector<S>>& products() const noexcept { return products_; }
  const Matrix<S>& matrix() const noexcept { return matrix_; }
  std::string label(std::size_t k) const { return subset_label(subsets_.at(k)); }

  /// Coefficients of mv on the ordered products.
  std::vector<S> express(const Multivector<S>& mv) const {
    if (!(mv.context() == ctx_)) throw ContextMismatchError("element not in the frame's algebra");
    std::vector<S> v(products_.size(), traits::zero());
    for (const auto& [b, c] : mv.terms()) v[b] = c;
    return solver_->solve(v);
  }

  /// Sum of coefficient * product label, e.g. "1 + a1a3 - a2a3".
  std::string express_text(const Multivector<S>& mv) const {
    auto coefs = express(mv);
    std::string out;
    for (std::size_t k = 0; k < coefs.size(); ++k) {
      if (traits::is_zero(coefs[k])) continue;
      std::string c = traits::to_text(coefs[k]);
      bool negative = !c.empty() && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
      if (negative) c.erase(0, 1);
      if (c.find_first_of("+-", 1) != std::string::npos) c = "(" + c + ")";
      std::string term = subsets_[k] == 0 ? c : (c == "1" ? label(k) : c + "*" + label(k));
      if (out.empty()) {
        out = (negative ? "-" : "") + term;
      } else {
        out += (negative ? " - " : " + ") + term;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  AlgebraContext ctx_;
  std::vector<Blade> subsets_;
  std::vector<Multivector<S>> products_;
  Matrix<S> matrix_;
  std::optional<LinearSolver<S>> solver_;
};

}  // namespace lpgg
