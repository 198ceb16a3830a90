#pragma once

#include <vector>

#include "lpgg/null_frame.hpp"

namespace lpgg {

/// k-projection g* = Â_k g Â_k; a conjugation when k = n+1.
template <ScalarType S>
Multivector<S> star(const NullFrame<S>& frame, const Multivector<S>& g, int k) {
  if (k < 2 || k > frame.size()) throw DomainError("star projection needs 2 <= k <= n+1");
  Multivector<S> unit = unit_k_sum(frame, k);
  return unit * g * unit;
}

template <ScalarType S>
Multivector<S> star(const NullFrame<S>& frame, const Multivector<S>& g) {
  return star(frame, g, frame.size());
}

/// [g]_a with entries a_i g a_j, plus the contraction sum_ij a_i g a_j.
template <ScalarType S>
struct AMatrix {
  std::vector<std::vector<Multivector<S>>> entries;
  Multivector<S> contraction;

  const Multivector<S>& operator()(int i, int j) const { return entries.at(i).at(j); }
};

template <ScalarType S>
AMatrix<S> a_matrix(const NullFrame<S>& frame, const Multivector<S>& g) {
  g.require_same(Multivector<S>(frame.context()));
  AMatrix<S> out;
  out.contraction = Multivector<S>(frame.context());
  for (int i = 0; i < frame.size(); ++i) {
    Multivector<S> left = frame[i] * g;
    std::vector<Multivector<S>> row;
    for (int j = 0; j < frame.size(); ++j) {
      row.push_back(left * frame[j]);
      out.contraction += row.back();
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

/// Evaluation of Â (I^t [g]_a I I^t [h]_a I) Â against gh. The raw form
/// carries a factor c^2 with c = (n+1)n/2, times the frame sign.
template <ScalarType S>
struct MediatedProduct {
  Multivector<S> product;     // gh
  Multivector<S> raw;         // the display as written
  Multivector<S> normalized;  // raw / c^2
  S factor;                   // c^2
  bool raw_matches = false;
  bool normalized_matches = false;
};

template <ScalarType S>
MediatedProduct<S> mediated_product_check(const NullFrame<S>& frame, const Multivector<S>& g,
                                          const Multivector<S>& h) {
  using traits = ScalarTraits<S>;
  const int size = frame.size();
  auto ga = a_matrix(frame, g);
  auto ha = a_matrix(frame, h);
  // [g]_a I is the column of row sums, I^t [h]_a the row of column sums.
  std::vector<Multivector<S>> column(size, Multivector<S>(frame.context()));
  std::vector<Multivector<S>> row(size, Multivector<S>(frame.context()));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      column[i] += ga(i, j);
      row[j] += ha(i, j);
    }
  }
  Multivector<S> middle(frame.context());
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) middle += column[i] * row[j];
  Multivector<S> unit = unit_k_sum(frame, size);

  MediatedProduct<S> out;
  out.product = g * h;
  out.raw = unit * middle * unit;
  Rational c = make_rational(size * (size - 1), 2);
  out.factor = traits::from_rational(Rational(c * c));
  out.normalized = out.raw / out.factor;
  out.raw_matches = out.raw == out.product;
  out.normalized_matches = out.normalized == out.product;
  return out;
}

/// sum_{i != j} m_ij a_i a_j; the diagonal multiplies a_i a_i = 0 and is ignored.
template <ScalarType S>
Multivector<S> from_coefficient_matrix(const NullFrame<S>& frame, const Matrix<S>& m) {
  using traits = ScalarTraits<S>;
  if (static_cast<int>(m.rows()) != frame.size() || !m.is_square()) {
    throw DomainError("coefficient matrix must be (n+1)x(n+1)");
  }
  Multivector<S> out(frame.context());
  for (int i = 0; i < frame.size(); ++i) {
    for (int j = 0; j < frame.size(); ++j) {
      if (i == j || traits::is_zero(m(i, j))) continue;
      out += (frame[i] * frame[j]) * m(i, j);
    }
  }
  return out;
}

}  // namespace lpgg
