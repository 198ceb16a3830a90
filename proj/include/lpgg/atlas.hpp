#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lpgg/multivector.hpp"

namespace lpgg {

inline constexpr int kMaxAtlasLevel = 10;

/// Sign s with (e1...ep f1...fq)^2 = s, from the actual product.
inline int pseudoscalar_square_sign(int p, int q) {
  if (p + q > kMaxAtlasLevel) throw DimensionLimitError("atlas limited to p+q <= 10");
  AlgebraContext ctx(p, q);
  auto i = Multivector<Rational>::blade(ctx, ctx.pseudoscalar());
  Multivector<Rational> sq = i * i;
  Rational s = sq.scalar_part();
  if (sq.terms().size() != 1 || (s != 1 && s != -1)) throw DomainError("pseudoscalar square is not +-1");
  return s > 0 ? 1 : -1;
}

/// Product of the anticommutation signs g_i g_j = s g_j g_i over all pairs
/// of `count` generators, each sign read off actual products.
inline int generator_pair_sign_product(int count) {
  if (count > kMaxDimension) throw DimensionLimitError("too many generators");
  AlgebraContext ctx(count, 0);
  int product = 1;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      auto gi = Multivector<Rational>::generator(ctx, i);
      auto gj = Multivector<Rational>::generator(ctx, j);
      if (gi * gj == -(gj * gi)) {
        product = -product;
      } else if (!(gi * gj == gj * gi)) {
        throw DomainError("generators neither commute nor anticommute");
      }
    }
  }
  return product;
}

struct AtlasRow {
  int p = 0;
  int q = 0;
  std::string pseudoscalar;
  int sign = 1;
  /// Sign product over the C(p+q+1, 2) pairs of p+q+1 generators; the same
  /// for every row of a level.
  int product_of_signs = 1;
};

struct AtlasLevel {
  int level = 0;
  std::vector<AtlasRow> rows;  // descending p
  std::string signs;            // e.g. "-+-" for level 2
};

inline std::string pseudoscalar_name(int p, int q) {
  std::string out;
  for (int k = 1; k <= p; ++k) out += "e" + std::to_string(k);
  for (int k = 1; k <= q; ++k) out += "f" + std::to_string(k);
  return out;
}

inline std::vector<AtlasLevel> atlas(int n_max) {
  if (n_max < 1) throw DomainError("atlas needs n_max >= 1");
  if (n_max > kMaxAtlasLevel) throw DimensionLimitError("atlas limited to n_max <= 10");
  std::vector<AtlasLevel> out;
  for (int n = 1; n <= n_max; ++n) {
    AtlasLevel level;
    level.level = n;
    const int product = generator_pair_sign_product(n + 1);
    for (int p = n; p >= 0; --p) {
      AtlasRow row{p, n - p, pseudoscalar_name(p, n - p), pseudoscalar_square_sign(p, n - p), product};
      level.signs += row.sign > 0 ? '+' : '-';
      level.rows.push_back(std::move(row));
    }
    out.push_back(std::move(level));
  }
  return out;
}

/// The per-level product column, one character per level.
inline std::string product_sequence(const std::vector<AtlasLevel>& levels) {
  std::string out;
  for (const auto& l : levels) out += l.rows.front().product_of_signs > 0 ? '+' : '-';
  return out;
}

inline void write_atlas_csv(std::ostream& os, const std::vector<AtlasLevel>& levels) {
  os << "p,q,sign,product_of_signs\n";
  for (const auto& l : levels)
    for (const auto& r : l.rows) os << r.p << ',' << r.q << ',' << r.sign << ',' << r.product_of_signs << '\n';
}

/// One centred line per level, signs separated by spaces.
inline void write_atlas_triangle(std::ostream& os, const std::vector<AtlasLevel>& levels) {
  const std::size_t width = levels.empty() ? 0 : 2 * levels.back().signs.size() - 1;
  for (const auto& l : levels) {
    std::string line;
    for (char c : l.signs) {
      if (!line.empty()) line += ' ';
      line += c;
    }
    os << std::string((width - line.size()) / 2, ' ') << line << '\n';
  }
}

}  // namespace lpgg
