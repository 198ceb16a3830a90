#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lpgg/matrix.hpp"
#include "lpgg/scalar.hpp"

/// Values as they are published for the null-frame construction, kept
/// verbatim (typos included) so the verifier can compare against them.
namespace lpgg::stated {

/// p sqrt(a) / (q sqrt(b)).
inline Radical surd_ratio(long p, long a, long q, long b) {
  return Radical::surd(make_rational(p, q * b), static_cast<std::uint64_t>(a * b));
}

inline Radical rat(long p, long q = 1) { return Radical(make_rational(p, q)); }

inline Matrix<Radical> T3() {
  return {{rat(1, 2), rat(1, 2), rat(0)}, {rat(1, 2), rat(-1, 2), rat(0)}, {rat(1), rat(0), rat(1)}};
}

inline Matrix<Radical> T3_inv() {
  return {{rat(1), rat(1), rat(0)}, {rat(1), rat(-1), rat(0)}, {rat(-1), rat(-1), rat(1)}};
}

inline Matrix<Radical> T8() {
  const Radical z = rat(0);
  const Radical h = rat(1, 2);
  const Radical c3 = surd_ratio(1, 1, 2, 3);
  const Radical c4 = surd_ratio(1, 1, 2, 6);
  const Radical c5 = surd_ratio(1, 1, 2, 10);
  const Radical c6 = surd_ratio(1, 1, 2, 15);
  return {{h, h, z, z, z, z, z, z},
          {h, rat(-1, 2), z, z, z, z, z, z},
          {rat(1), z, rat(1), z, z, z, z, z},
          {rat(1), z, h, surd_ratio(1, 3, 2, 1), z, z, z, z},
          {rat(1), z, h, c3, surd_ratio(1, 2, 1, 3), z, z, z},
          {rat(1), z, h, c3, c4, surd_ratio(1, 5, 2, 2), z, z},
          {rat(1), z, h, c3, c4, c5, surd_ratio(1, 3, 1, 5), z},
          {rat(1), z, h, c3, c4, c5, c6, surd_ratio(1, 7, 2, 3)}};
}

inline Matrix<Radical> T8_inv() {
  const Radical z = rat(0);
  const Radical m3 = surd_ratio(-1, 1, 1, 3);
  const Radical m6 = surd_ratio(-1, 1, 1, 6);
  const Radical m10 = surd_ratio(-1, 1, 1, 10);
  const Radical m15 = surd_ratio(-1, 1, 1, 15);
  const Radical m21 = surd_ratio(-1, 1, 1, 21);
  return {{rat(1), rat(1), z, z, z, z, z, z},
          {rat(1), rat(-1), z, z, z, z, z, z},
          {rat(-1), rat(-1), rat(1), z, z, z, z, z},
          {m3, m3, m3, surd_ratio(-2, 1, 1, 3), z, z, z, z},
          {m6, m6, m6, m6, surd_ratio(1, 3, 1, 2), z, z, z},
          {m10, m10, m10, m10, m10, surd_ratio(2, 2, 1, 5), z, z},
          {m15, m15, m15, m15, m15, m15, surd_ratio(1, 5, 1, 3), z},
          {m21, m21, m21, m21, m21, m21, m21, surd_ratio(2, 3, 1, 7)}};
}

/// A null-basis expansion: (subset mask over a1.., coefficient), mask bit k
/// standing for a_{k+1}.
using NullExpansion = std::vector<std::pair<unsigned, Rational>>;

struct CanonicalForm {
  std::string element;  // standard-basis blade, e.g. "e1^f2"
  std::string display;
  NullExpansion expansion;
};

/// The three expansions in the n+1 = 3 algebra.
inline std::vector<CanonicalForm> canonical_forms() {
  return {{"e1^f1", "1 − 2a1a2", {{0b000, Rational(1)}, {0b011, Rational(-2)}}},
          {"e1^f2", "1 + a1a3 − a2a3", {{0b000, Rational(1)}, {0b101, Rational(1)}, {0b110, Rational(-1)}}},
          {"e1^f1^f2", "a1 + a3 − 2a1a2a3", {{0b001, Rational(1)}, {0b100, Rational(1)}, {0b111, Rational(-2)}}}};
}

/// Complex 2x2 matrices of a1, a2, a3 in G(1,2) implied by the display
/// [x] = [[x3 i, x2 − x3], [x1 − x3, −x3 i]].
inline std::array<Matrix<Complex>, 3> g12_frame_matrices() {
  const Complex i(0.0, 1.0);
  return {Matrix<Complex>{{0.0, 0.0}, {1.0, 0.0}}, Matrix<Complex>{{0.0, 1.0}, {0.0, 0.0}},
          Matrix<Complex>{{i, -1.0}, {-1.0, -i}}};
}

/// [x] = s1[e1] + s2[f1] + s3[f2] = [[s3 i, s1 − s2], [s1 + s2, −s3 i]].
inline std::array<Matrix<Complex>, 3> g12_standard_matrices() {
  const Complex i(0.0, 1.0);
  return {Matrix<Complex>{{0.0, 1.0}, {1.0, 0.0}}, Matrix<Complex>{{0.0, -1.0}, {1.0, 0.0}},
          Matrix<Complex>{{i, 0.0}, {0.0, -i}}};
}

/// Pseudoscalar-square signs per level, rows by descending p.
inline std::vector<std::string> level_signs() { return {"+-", "-+-", "-+-+", "+-+-+", "+-+-+-", "-+-+-+-"}; }

/// The concatenated sign sequence, token by token.
inline std::vector<std::string> sign_sequence() { return {"+", "-", "-+-", "-+-+", "+-+-+", "-+-+-+"}; }

/// The two-per-level sequence --,++,--,++,--,++ read one sign per level.
inline std::string product_sequence() { return "--++--++--++"; }

}  // namespace lpgg::stated
