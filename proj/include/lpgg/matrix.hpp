#pragma once

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "lpgg/errors.hpp"
#include "lpgg/scalar.hpp"

namespace lpgg {

/// Dense row-major matrix over a scalar backend.
template <class S>
class Matrix {
 public:
  using traits = ScalarTraits<S>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, traits::zero()) {}
  Matrix(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = traits::one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<S> column(std::size_t c) const {
    std::vector<S> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  /// Row vector times matrix.
  friend std::vector<S> operator*(std::span<const S> v, const Matrix& m) {
    if (v.size() != m.rows_) throw DomainError("row vector length does not match matrix rows");
    std::vector<S> out(m.cols_, traits::zero());
    for (std::size_t k = 0; k < m.rows_; ++k) {
      if (traits::is_zero(v[k])) continue;
      for (std::size_t j = 0; j < m.cols_; ++j) out[j] += v[k] * m(k, j);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    double scale = 0.0;
    if constexpr (!traits::exact) {
      for (const auto& x : a.data_) scale = std::max(scale, traits::magnitude(x));
      for (const auto& x : b.data_) scale = std::max(scale, traits::magnitude(x));
    }
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!traits::equal(a.data_[i], b.data_[i], scale)) return false;
    }
    return true;
  }

 private:
  void require_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class To, class From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = scalar_cast<To>(m(r, c));
  return out;
}

namespace detail {

/// Index of the preferred pivot in column `col` among rows >= `from`:
/// largest magnitude for approximate backends, cheapest nonzero entry
/// for exact ones. Returns nullopt when the column is zero.
template <class S>
std::optional<std::size_t> choose_pivot(const Matrix<S>& a, std::size_t col, std::size_t from) {
  using traits = ScalarTraits<S>;
  std::optional<std::size_t> best;
  if constexpr (traits::exact) {
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = from; r < a.rows(); ++r) {
      if (traits::is_zero(a(r, col))) continue;
      std::size_t cost = traits::pivot_cost(a(r, col));
      if (cost < best_cost) {
        best_cost = cost;
        best = r;
      }
    }
  } else {
    double best_mag = 0.0;
    double scale = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) scale = std::max(scale, traits::magnitude(a(r, c)));
    for (std::size_t r = from; r < a.rows(); ++r) {
      double mag = traits::magnitude(a(r, col));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    if (best && best_mag <= kAbsoluteTolerance * std::max(1.0, scale)) best.reset();
  }
  return best;
}

template <class S>
void swap_rows(Matrix<S>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

}  // namespace detail

/// PA = LU factorization of a square matrix over a field backend.
template <class S>
class LuDecomposition {
 public:
  using traits = ScalarTraits<S>;

  explicit LuDecomposition(Matrix<S> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    if (!lu_.is_square()) throw DomainError("LU of a non-square matrix");
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    const std::size_t n = lu_.rows();
    for (std::size_t k = 0; k < n; ++k) {
      auto pivot = detail::choose_pivot(lu_, k, k);
      if (!pivot) throw SingularMatrixError("matrix is singular (column " + std::to_string(k) + ")");
      if (*pivot != k) {
        detail::swap_rows(lu_, k, *pivot);
        std::swap(perm_[k], perm_[*pivot]);
        odd_permutation_ = !odd_permutation_;
      }
      const S inv_pivot = traits::one() / lu_(k, k);
      for (std::size_t r = k + 1; r < n; ++r) {
        if (traits::is_zero(lu_(r, k))) continue;
        S factor = lu_(r, k) * inv_pivot;
        lu_(r, k) = factor;
        for (std::size_t c = k + 1; c < n; ++c) {
          if (traits::is_zero(lu_(k, c))) continue;
          lu_(r, c) -= factor * lu_(k, c);
        }
      }
    }
  }

  std::size_t size() const noexcept { return lu_.rows(); }

  /// Solves A x = b.
  std::vector<S> solve(std::span<const S> b) const {
    const std::size_t n = size();
    if (b.size() != n) throw DomainError("right-hand side length mismatch");
    std::vector<S> x(n, traits::zero());
    for (std::size_t i = 0; i < n; ++i) {
      S sum = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) {
        if (!traits::is_zero(lu_(i, j)) && !traits::is_zero(x[j])) sum -= lu_(i, j) * x[j];
      }
      x[i] = sum;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      S sum = x[ii];
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (!traits::is_zero(lu_(ii, j)) && !traits::is_zero(x[j])) sum -= lu_(ii, j) * x[j];
      }
      x[ii] = sum / lu_(ii, ii);
    }
    return x;
  }

  Matrix<S> inverse() const {
    const std::size_t n = size();
    Matrix<S> inv(n, n);
    std::vector<S> e(n, traits::zero());
    for (std::size_t c = 0; c < n; ++c) {
      e.assign(n, traits::zero());
      e[c] = traits::one();
      auto col = solve(e);
      for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
    }
    return inv;
  }

  S determinant() const {
    S det = traits::one();
    for (std::size_t i = 0; i < size(); ++i) det *= lu_(i, i);
    return odd_permutation_ ? S(-det) : det;
  }

 private:
  Matrix<S> lu_;
  std::vector<std::size_t> perm_;
  bool odd_permutation_ = false;
};

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  return LuDecomposition<S>(m).inverse();
}

template <class S>
S determinant(const Matrix<S>& m) {
  try {
    return LuDecomposition<S>(m).determinant();
  } catch (const SingularMatrixError&) {
    return ScalarTraits<S>::zero();
  }
}

/// Row rank by Gaussian elimination.
template <class S>
std::size_t rank(Matrix<S> a) {
  using traits = ScalarTraits<S>;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    auto pivot = detail::choose_pivot(a, c, r);
    if (!pivot) continue;
    detail::swap_rows(a, r, *pivot);
    const S inv_pivot = traits::one() / a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (traits::is_zero(a(i, c))) continue;
      S factor = a(i, c) * inv_pivot;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
      if constexpr (!traits::exact) a(i, c) = traits::zero();
    }
    ++r;
  }
  return r;
}

/// Some solution of the (possibly overdetermined) system A x = b, with free
/// variables set to zero, or nullopt when the system is inconsistent.
template <class S>
std::optional<std::vector<S>> solve_consistent(Matrix<S> a, std::vector<S> b) {
  using traits = ScalarTraits<S>;
  if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    auto pivot = detail::choose_pivot(a, c, r);
    if (!pivot) continue;
    detail::swap_rows(a, r, *pivot);
    std::swap(b[r], b[*pivot]);
    const S inv_pivot = traits::one() / a(r, c);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || traits::is_zero(a(i, c))) continue;
      S factor = a(i, c) * inv_pivot;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
      b[i] -= factor * b[r];
      if constexpr (!traits::exact) a(i, c) = traits::zero();
    }
    pivot_cols.push_back(c);
    ++r;
  }
  double scale = 0.0;
  if constexpr (!traits::exact) {
    for (const auto& v : b) scale = std::max(scale, traits::magnitude(v));
  }
  for (std::size_t i = r; i < a.rows(); ++i) {
    if (!traits::equal(b[i], traits::zero(), scale)) return std::nullopt;
  }
  std::vector<S> x(a.cols(), traits::zero());
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = b[k] / a(k, pivot_cols[k]);
  return x;
}

/// Exact solver for A x = b over radicals. When every row of A is a single
/// common surd times rational entries (true for the frame change-of-basis
/// matrices), the row factors are divided out and the system is solved in
/// plain rationals, one radical component of b at a time. Otherwise it
/// falls back to elimination over the full radical field.
class RadicalSolver {
 public:
  explicit RadicalSolver(const Matrix<Radical>& a) {
    if (!a.is_square()) throw DomainError("solver needs a square matrix");
    std::vector<Radical::Key> keys(a.rows(), 1);
    bool rational_rows = true;
    for (std::size_t r = 0; r < a.rows() && rational_rows; ++r) {
      std::optional<Radical::Key> key;
      for (std::size_t c = 0; c < a.cols(); ++c) {
        const Radical& x = a(r, c);
        if (x.is_zero()) continue;
        if (x.size() != 1 || (key && *key != x.terms().front().first)) {
          rational_rows = false;
          break;
        }
        key = x.terms().front().first;
      }
      keys[r] = key.value_or(1);
    }
    if (rational_rows) {
      Matrix<Rational> reduced(a.rows(), a.cols());
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (!a(r, c).is_zero()) reduced(r, c) = a(r, c).terms().front().second;
      row_keys_ = std::move(keys);
      rational_.emplace(std::move(reduced));
    } else {
      general_.emplace(a);
    }
  }

  bool uses_rational_path() const noexcept { return rational_.has_value(); }

  std::vector<Radical> solve(std::span<const Radical> b) const {
    if (general_) return general_->solve(b);
    const std::size_t n = rational_->size();
    if (b.size() != n) throw DomainError("right-hand side length mismatch");
    // b_r / sqrt(k_r), split by surd.
    std::map<Radical::Key, std::vector<Rational>> components;
    for (std::size_t r = 0; r < n; ++r) {
      if (b[r].is_zero()) continue;
      Radical scaled = b[r] / Radical::surd(Rational(1), row_keys_[r]);
      for (const auto& [key, coef] : scaled.terms()) {
        auto [it, inserted] = components.try_emplace(key, n, Rational(0));
        it->second[r] = coef;
      }
    }
    std::vector<Radical> x(n);
    for (const auto& [key, rhs] : components) {
      auto part = rational_->solve(rhs);
      for (std::size_t i = 0; i < n; ++i) {
        if (part[i] != 0) x[i] += Radical::surd(part[i], key);
      }
    }
    return x;
  }

  Matrix<Radical> inverse() const {
    const std::size_t n = general_ ? general_->size() : rational_->size();
    Matrix<Radical> inv(n, n);
    std::vector<Radical> e(n);
    for (std::size_t c = 0; c < n; ++c) {
      e.assign(n, Radical());
      e[c] = Radical(1);
      auto col = solve(e);
      for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
    }
    return inv;
  }

 private:
  std::vector<Radical::Key> row_keys_;
  std::optional<LuDecomposition<Rational>> rational_;
  std::optional<LuDecomposition<Radical>> general_;
};

/// Exact backends solve over radicals with the rational fast path;
/// approximate ones use partial-pivoting LU.
template <class S>
using LinearSolver = std::conditional_t<std::is_same_v<S, Radical>, RadicalSolver, LuDecomposition<S>>;

}  // namespace lpgg
