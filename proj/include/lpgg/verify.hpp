#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lpgg/atlas.hpp"
#include "lpgg/calculus.hpp"
#include "lpgg/random.hpp"
#include "lpgg/simplex.hpp"
#include "lpgg/spectral.hpp"
#include "lpgg/star.hpp"
#include "lpgg/stated.hpp"
#include "lpgg/text.hpp"

namespace lpgg {

struct VerifyOptions {
  std::string suite = "all";
  /// Largest frame size n+1 exercised (2..8).
  int n_max = 8;
  unsigned long long seed = 1;
  /// Random samples per property.
  int samples = 100;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "frame", "star", "calculus", "spectral", "simplex", "atlas"};
  return names;
}

inline bool is_suite_name(const std::string& s) {
  return s == "all" || std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end();
}

namespace detail {

inline std::string size_tag(int size, int sign) {
  return "[n+1=" + std::to_string(size) + (sign > 0 ? ",+" : ",-") + "]";
}

inline std::string size_tag(int size) { return "[n+1=" + std::to_string(size) + "]"; }

/// Scalar identity checked on samples: target_k against sum_t c_t term_t,k.
template <ScalarType S>
IdentityLine sampled_line(std::string identity, const std::vector<S>& target,
                          const std::vector<std::vector<S>>& terms, const std::vector<Rational>& stated) {
  std::map<std::size_t, S> t;
  for (std::size_t k = 0; k < target.size(); ++k) t[k] = target[k];
  std::vector<std::map<std::size_t, S>> ts;
  for (const auto& term : terms) {
    std::map<std::size_t, S> m;
    for (std::size_t k = 0; k < term.size(); ++k) m[k] = term[k];
    ts.push_back(std::move(m));
  }
  return fit_identity<S>(std::move(identity), std::move(t), std::move(ts), stated).line;
}

/// pass when equal, pass-corrected when the stated matrix differs but the
/// computed one passes `derived_ok`, listing the differing entries.
template <ScalarType S>
Check matrix_check(std::string name, std::string claim, const Matrix<S>& stated_m, const Matrix<S>& derived,
                   bool derived_ok) {
  using traits = ScalarTraits<S>;
  std::string diffs;
  int count = 0;
  for (std::size_t r = 0; r < derived.rows(); ++r) {
    for (std::size_t c = 0; c < derived.cols(); ++c) {
      if (traits::equal(stated_m(r, c), derived(r, c), 1.0)) continue;
      ++count;
      if (!diffs.empty()) diffs += "; ";
      diffs += "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): stated " +
               traits::to_text(stated_m(r, c)) + ", derived " + traits::to_text(derived(r, c));
    }
  }
  Check out{std::move(name), std::move(claim), Status::pass, {}};
  if (count == 0) return out;
  out.status = derived_ok ? Status::pass_corrected : Status::fail;
  out.details = std::to_string(count) + " entr" + (count == 1 ? "y" : "ies") + " differ: " + diffs;
  return out;
}

template <class S>
bool is_identity(const Matrix<S>& m) {
  return m == Matrix<S>::identity(m.rows());
}

inline int clamp_frame_max(int n_max) {
  if (n_max < 2 || n_max > 8) throw DomainError("--n-max must lie in 2..8");
  return n_max;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// core

inline VerificationReport verify_core(const VerifyOptions& opt) {
  VerificationReport rep{"core", opt.seed, {}};
  RandomSource rng(opt.seed);
  using MV = Multivector<Rational>;

  bool assoc = true;
  bool split = true;
  bool rev = true;
  bool metric = true;
  int signatures = 0;
  for (int d = 0; d <= 4; ++d) {
    for (int p = 0; p <= d; ++p) {
      AlgebraContext ctx(p, d - p);
      ++signatures;
      for (int s = 0; s < 200; ++s) {
        auto u = rng.multivector<Rational>(ctx);
        auto v = rng.multivector<Rational>(ctx);
        auto w = rng.multivector<Rational>(ctx);
        assoc = assoc && (u * v) * w == u * (v * w);
        rev = rev && reverse(u * v) == reverse(v) * reverse(u);
        auto x = grade_projection(u, 1);
        auto y = grade_projection(v, 1);
        split = split && x * y == dot(x, y) + outer_product(x, y);
      }
      for (int i = 0; i < d; ++i) {
        auto gi = MV::generator(ctx, i);
        metric = metric && gi * gi == MV(ctx, Rational(ctx.generator_square(i)));
        for (int j = i + 1; j < d; ++j) {
          auto gj = MV::generator(ctx, j);
          metric = metric && gi * gj == -(gj * gi);
        }
      }
    }
  }
  const std::string per = "200 random triples in each of " + std::to_string(signatures) + " signatures, p+q <= 4";
  rep.add(make_check("core.associativity", "(uv)w = u(vw)", assoc, per));
  rep.add(make_check("core.reverse", "reverse(uv) = reverse(v) reverse(u)", rev, per));
  rep.add(make_check("core.vector-split", "xy = x.y + x^y for vectors", split, per));
  rep.add(make_check("core.metric", "g_i^2 = +-1 and g_i g_j = -g_j g_i", metric, "p+q <= 4"));

  Radical r2 = Radical::sqrt_of(Rational(2));
  Radical r3 = Radical::sqrt_of(Rational(3));
  Radical r6 = Radical::sqrt_of(Rational(6));
  rep.add(make_check("core.radical-product", "(sqrt2 sqrt3) sqrt6 = 6", (r2 * r3) * r6 == Radical(6)));
  bool roundtrip = true;
  for (int s = 0; s < opt.samples; ++s) {
    Radical v = Radical(rng.rational()) + Radical::surd(rng.rational(), 2) + Radical::surd(rng.rational(), 15);
    double d = v.to_double();
    double expect = rng.rational().get_d() * 0.0 + v.rational_part().get_d();
    for (const auto& [m, c] : v.terms())
      if (m != 1) expect += c.get_d() * std::sqrt(static_cast<double>(m));
    roundtrip = roundtrip && std::abs(d - expect) <= 1e-15 * std::max(1.0, std::abs(expect));
  }
  rep.add(make_check("core.radical-approx", "exact to approximate conversion within 1e-15 relative", roundtrip));

  // The two-dimensional identities in G(1,1) with a1 = (e1+f1)/2, a2 = (e1-f1)/2.
  auto frame = build_null_frame<Rational>(2, 1);
  const AlgebraContext& ctx = frame.context();
  const MV a12 = outer_product(frame[0], frame[1]);
  rep.add(make_check("core.a1a2-square", "(a1^a2)^2 = 1/4", a12 * a12 == MV(ctx, make_rational(1, 4))));
  auto e1 = MV::generator(ctx, 0);
  auto f1 = MV::generator(ctx, 1);
  rep.add(make_check("core.a1a2-blade", "a1^a2 = (1/2) f1 e1", a12 == f1 * e1 * make_rational(1, 2)));
  rep.add(make_check("core.e1f1", "e1 f1 = 1 - 2 a1 a2", e1 * f1 == MV(ctx, Rational(1)) - frame[0] * frame[1] * Rational(2)));

  std::vector<Rational> x_sq, x1x2, xv1, xv2, v1v2, wedge_ok_t, xy_sq, xy_det;
  std::vector<Rational> t_x1v12, t_x2v11, t_x1v22, t_x2v21, t_x2v22, t_v11v22, t_v12v21;
  bool wedge_ok = true;
  bool xy_ok = true;
  for (int s = 0; s < opt.samples; ++s) {
    auto x = rng.coordinates<Rational>(2);
    auto y = rng.coordinates<Rational>(2);
    auto v1c = rng.coordinates<Rational>(2);
    auto v2c = rng.coordinates<Rational>(2);
    MV X = frame.vector_from(std::span<const Rational>(x));
    MV Y = frame.vector_from(std::span<const Rational>(y));
    MV V1 = frame.vector_from(std::span<const Rational>(v1c));
    MV V2 = frame.vector_from(std::span<const Rational>(v2c));
    x_sq.push_back((X * X).scalar_part());
    x1x2.push_back(x[0] * x[1]);
    xv1.push_back(scalar_product(X, V1));
    xv2.push_back(scalar_product(X, V2));
    v1v2.push_back(scalar_product(V1, V2));
    t_x1v12.push_back(x[0] * v1c[1]);
    t_x2v11.push_back(x[1] * v1c[0]);
    t_x1v22.push_back(x[0] * v2c[1]);
    t_x2v21.push_back(x[1] * v2c[0]);
    t_x2v22.push_back(x[1] * v2c[1]);
    t_v11v22.push_back(v1c[0] * v2c[1]);
    t_v12v21.push_back(v1c[1] * v2c[0]);
    wedge_ok = wedge_ok && outer_product(V1, V2) == a12 * Rational(v1c[0] * v2c[1] - v1c[1] * v2c[0]);
    wedge_ok = wedge_ok && outer_product(X, Y) == a12 * Rational(x[0] * y[1] - x[1] * y[0]);
    MV w = outer_product(X, Y);
    Rational yx = scalar_product(Y, X);
    Rational det = yx * scalar_product(X, Y) - (Y * Y).scalar_part() * (X * X).scalar_part();
    xy_ok = xy_ok && w * w == MV(ctx, det);
  }
  const Rational h = make_rational(1, 2);
  rep.add(to_check(detail::sampled_line<Rational>("x² = x1x2", x_sq, {x1x2}, {Rational(1)}), "core.x-square"));
  rep.add(to_check(detail::sampled_line<Rational>("x·v1 = ½(x1v12 + x2v11)", xv1, {t_x1v12, t_x2v11}, {h, h}),
                   "core.x-dot-v1"));
  rep.add(to_check(detail::sampled_line<Rational>("x·v2 = ½(x2v22 + x2v21)", xv2, {t_x1v22, t_x2v21, t_x2v22},
                                                  {Rational(0), h, h}),
                   "core.x-dot-v2"));
  rep.add(to_check(detail::sampled_line<Rational>("v1·v2 = ½(v11v22 + v12v21)", v1v2, {t_v11v22, t_v12v21}, {h, h}),
                   "core.v1-dot-v2"));
  rep.add(make_check("core.wedge-det", "v1^v2 = det[v] a1^a2 and x^y = det[x;y] a1^a2", wedge_ok));
  rep.add(make_check("core.wedge-square", "(x^y)^2 = det[[y.x, y^2], [x^2, x.y]]", xy_ok));
  return rep;
}

// ---------------------------------------------------------------------------
// frame

template <ScalarType S>
VerificationReport verify_frame(const VerifyOptions& opt) {
  using traits = ScalarTraits<S>;
  using MV = Multivector<S>;
  VerificationReport rep{"frame", opt.seed, {}};
  RandomSource rng(opt.seed);
  const int n_max = detail::clamp_frame_max(opt.n_max);

  for (int sign : {1, -1}) {
    for (int size = 2; size <= n_max; ++size) {
      auto frame = build_null_frame<S>(size, sign);
      const std::string tag = detail::size_tag(size, sign);
      const AlgebraContext& ctx = frame.context();
      const S half = traits::from_rational(make_rational(sign, 2));
      bool null = true;
      bool corr = true;
      for (int i = 0; i < size; ++i) {
        null = null && frame[i] * frame[i] == MV(ctx);
        for (int j = 0; j < size; ++j)
          if (i != j) corr = corr && dot(frame[i], frame[j]) == MV(ctx, half);
      }
      rep.add(make_check("frame.null" + tag, "a_i^2 = 0", null));
      rep.add(make_check("frame.correlation" + tag, sign > 0 ? "a_i.a_j = 1/2" : "a_i.a_j = -1/2", corr));
      rep.add(make_check("frame.independent" + tag, "a_1^...^a_{n+1} != 0", !wedge_list(frame.vectors()).is_zero()));

      auto table = verify_multiplication_table(frame);
      rep.add(make_check("frame.table" + tag, sign > 0 ? "products of a_i, a_j follow the positive table"
                                                       : "products of a_i, a_j follow the negative table",
                         table.ok(),
                         std::to_string(table.entries_checked) + " entries" +
                             (table.ok() ? "" : "; first violation " + table.violations.front())));
      rep.add(make_check("frame.inverse" + tag, "T T^-1 = I", detail::is_identity(frame.T() * frame.T_inv())));

      bool sums = true;
      bool units = true;
      for (int k = 2; k <= size; ++k) {
        auto a = k_sum(frame, k);
        sums = sums && a * a == MV(ctx, traits::from_rational(Rational(sign * k * (k - 1) / 2)));
        auto u = unit_k_sum(frame, k);
        units = units && u * u == MV(ctx, traits::from_rational(Rational(sign)));
      }
      rep.add(make_check("frame.k-sum" + tag, sign > 0 ? "A_k^2 = C(k,2)" : "A_k^2 = -C(k,2)", sums));
      rep.add(make_check("frame.unit-k-sum" + tag, sign > 0 ? "unit A_k squares to 1" : "unit A_k squares to -1",
                         units));

      const MV A = k_sum(frame, size);
      bool ai_a = true;
      for (int i = 0; i < size; ++i) {
        ai_a = ai_a && dot(frame[i], A) == MV(ctx, traits::from_rational(make_rational(sign * frame.n(), 2)));
      }
      rep.add(make_check("frame.a-dot-A" + tag, "a_i.A = n/2 (times the frame sign)", ai_a));

      auto rec = reciprocal_frame(frame);
      bool delta = true;
      bool dual_form = true;
      const S two_over_n = traits::from_rational(make_rational(2, frame.n()));
      for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j)
          delta = delta && dot(rec[i], frame[j]) == MV(ctx, i == j ? traits::one() : traits::zero());
        MV formula = (dual_sum(frame, i) - frame[i] * traits::from_rational(Rational(frame.n() - 1))) * two_over_n;
        dual_form = dual_form && rec[i] == formula * traits::from_rational(Rational(sign));
      }
      rep.add(make_check("frame.reciprocal" + tag, "a^i.a_j = delta_ij", delta));
      rep.add(make_check("frame.reciprocal-dual" + tag, "a^i = (2/n)(dual a_i - (n-1) a_i), times the frame sign",
                         dual_form));

      if (sign > 0) {
        auto rel = pseudoscalar_relation(frame);
        rep.add(make_check("frame.pseudoscalar" + tag, "e1 f1...fn = -sqrt(2^{n+1}/n) a_1^...^a_{n+1}", rel.match,
                           "coefficient " + traits::to_text(rel.coefficient)));
      }
      if (size <= NullCanonicalBasis<S>::kMaxFrame) {
        bool invertible = true;
        std::string detail;
        try {
          NullCanonicalBasis<S> basis(frame);
          detail = std::to_string(basis.products().size()) + " products";
        } catch (const SingularMatrixError& e) {
          invertible = false;
          detail = e.what();
        }
        rep.add(make_check("frame.canonical-basis" + tag, "the 2^{n+1} ordered null products form a basis",
                           invertible, detail));
      }

      bool round = true;
      for (int s = 0; s < std::min(opt.samples, 50); ++s) {
        CoordinateRow<S> row{rng.coordinates<S>(size), CoordinateBasis::standard};
        auto back = to_standard_coordinates(frame, to_null_coordinates(frame, row));
        for (int k = 0; k < size; ++k) round = round && traits::equal(back.entries[k], row.entries[k], 1.0);
      }
      rep.add(make_check("frame.coordinates" + tag, "s -> x = s T^-1 -> x T = s", round));
    }
  }

  if (n_max >= 3) {
    auto frame = build_null_frame<S>(3, 1);
    auto t3 = convert_matrix<S>(stated::T3());
    auto t3i = convert_matrix<S>(stated::T3_inv());
    bool ok = detail::is_identity(frame.T() * frame.T_inv());
    rep.add(detail::matrix_check("frame.T3", "T_3 = [[1/2,1/2,0],[1/2,-1/2,0],[1,0,1]]", t3, frame.T(), ok));
    rep.add(detail::matrix_check("frame.T3-inverse", "T_3^-1 = [[1,1,0],[1,-1,0],[-1,-1,1]]", t3i, frame.T_inv(), ok));
    CoordinateRow<S> s{{traits::one(), traits::one(), traits::zero()}, CoordinateBasis::standard};
    auto x = to_null_coordinates(frame, s).entries;
    rep.add(make_check("frame.e1-plus-f1", "e1 + f1 = 2 a1", traits::equal(x[0], traits::from_rational(Rational(2))) &&
                                                                traits::is_zero(x[1]) && traits::is_zero(x[2])));
    if constexpr (traits::exact) {
      NullCanonicalBasis<S> basis(frame);
      for (const auto& form : stated::canonical_forms()) {
        auto element = parse_multivector<S>(frame.context(), form.element);
        auto coefs = basis.express(element);
        std::vector<S> want(coefs.size(), traits::zero());
        for (const auto& [mask, c] : form.expansion) {
          auto it = std::find(basis.subsets().begin(), basis.subsets().end(), static_cast<Blade>(mask));
          want[static_cast<std::size_t>(it - basis.subsets().begin())] = traits::from_rational(c);
        }
        Check c{"frame.canonical-form[" + form.element + "]", form.element + " = " + form.display, Status::pass, {}};
        if (want != coefs) {
          c.status = Status::pass_corrected;
          c.details = "derived " + form.element + " = " + basis.express_text(element);
        }
        rep.add(std::move(c));
      }
    }
  }
  if (n_max >= 8) {
    auto frame = build_null_frame<S>(8, 1);
    bool ok = detail::is_identity(frame.T() * frame.T_inv());
    auto t8 = convert_matrix<S>(stated::T8());
    auto t8i = convert_matrix<S>(stated::T8_inv());
    rep.add(detail::matrix_check("frame.T8", "T_8 as tabulated", t8, frame.T(), ok));
    auto c = detail::matrix_check("frame.T8-inverse", "T_8^-1 as tabulated", t8i, frame.T_inv(), ok);
    if (c.status != Status::pass) {
      c.details += detail::is_identity(t8 * t8i) ? "" : "; the tabulated pair does not multiply to I";
    }
    rep.add(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// star

template <ScalarType S>
VerificationReport verify_star(const VerifyOptions& opt) {
  using traits = ScalarTraits<S>;
  using MV = Multivector<S>;
  VerificationReport rep{"star", opt.seed, {}};
  RandomSource rng(opt.seed);
  const int top = std::min(detail::clamp_frame_max(opt.n_max), 4);
  for (int size = 2; size <= top; ++size) {
    auto frame = build_null_frame<S>(size, 1);
    const AlgebraContext& ctx = frame.context();
    const std::string tag = detail::size_tag(size);
    bool involution = true;
    bool homomorphism = true;
    bool coefficient_grades = true;
    bool vector_diagonal = true;
    std::vector<Blade> blades;
    std::map<std::pair<int, Blade>, S> contraction_target;
    std::vector<std::map<std::pair<int, Blade>, S>> contraction_terms(1);
    std::map<std::pair<int, Blade>, S> mediated_target;
    std::vector<std::map<std::pair<int, Blade>, S>> mediated_terms(1);
    for (int s = 0; s < opt.samples; ++s) {
      auto g = rng.multivector<S>(ctx);
      auto h = rng.multivector<S>(ctx);
      for (int k = 2; k <= size; ++k) involution = involution && star(frame, star(frame, g, k), k) == g;
      homomorphism = homomorphism && star(frame, g * h) == star(frame, g) * star(frame, h);
      auto am = a_matrix(frame, g);
      for (const auto& [b, c] : am.contraction.terms()) contraction_target[{s, b}] = c;
      const auto gs = star(frame, g);
      for (const auto& [b, c] : gs.terms()) contraction_terms[0][{s, b}] = c;
      if (s < 20) {
        auto med = mediated_product_check(frame, g, h);
        for (const auto& [b, c] : med.product.terms()) mediated_target[{s, b}] = c;
        for (const auto& [b, c] : med.raw.terms()) mediated_terms[0][{s, b}] = c;
      }
      Matrix<S> m(size, size);
      S total = traits::zero();
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          m(i, j) = traits::from_rational(rng.rational());
          if (i != j) total += m(i, j);
        }
      auto cm = from_coefficient_matrix(frame, m);
      coefficient_grades = coefficient_grades && (cm.is_zero() || cm.has_only_grades({0, 2})) &&
                           traits::equal(cm.scalar_part(), total * traits::from_rational(make_rational(1, 2)));
      auto v = rng.frame_vector(frame);
      auto av = a_matrix(frame, v);
      for (int i = 0; i < size; ++i)
        vector_diagonal = vector_diagonal && av(i, i) == frame[i] * (scalar_product(frame[i], v) * traits::from_rational(Rational(2)));
    }
    const std::string per = std::to_string(opt.samples) + " random multivectors";
    rep.add(make_check("star.involution" + tag, "(g*)* = g for every k", involution, per));
    rep.add(make_check("star.homomorphism" + tag, "(gh)* = g* h*", homomorphism, per));
    rep.add(make_check("star.coefficient-matrix" + tag, "sum m_ij a_i a_j has grades 0,2 and scalar part sum m_ij / 2",
                       coefficient_grades, per));
    rep.add(make_check("star.vector-diagonal" + tag, "a_i v a_i = 2(a_i.v) a_i for vectors v", vector_diagonal, per));
    rep.add(to_check(fit_identity<S>("I^t [g]_a I = g*", contraction_target, contraction_terms, {Rational(1)}).line,
                     "star.contraction" + tag));
    rep.add(to_check(fit_identity<S>("Â(I^t [g]_a I I^t [h]_a I)Â = gh", mediated_target, mediated_terms,
                                     {Rational(1)})
                         .line,
                     "star.mediated" + tag));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// calculus

template <ScalarType S>
VerificationReport verify_calculus(const VerifyOptions& opt) {
  using traits = ScalarTraits<S>;
  using MV = Multivector<S>;
  VerificationReport rep{"calculus", opt.seed, {}};
  RandomSource rng(opt.seed);
  const int n_max = detail::clamp_frame_max(opt.n_max);
  for (int size = 2; size <= n_max; ++size) {
    auto frame = build_null_frame<S>(size, 1);
    const AlgebraContext& ctx = frame.context();
    const std::string tag = detail::size_tag(size);
    auto nabla = make_nabla(frame);
    auto x = PolyField<S>::position(frame);
    rep.add(make_check("calculus.grad-x" + tag, "∇x = n+1",
                       apply(nabla, x) == PolyField<S>::constant(ctx, size, MV(ctx, traits::from_rational(Rational(size))))));
    rep.add(make_check("calculus.grad-x2" + tag, "∇x² = 2x",
                       apply(nabla, x * x) == x * traits::from_rational(Rational(2))));
    rep.add(make_check("calculus.null-grad-x" + tag, "∇̂x = 0", apply(make_null_nabla(frame), x) == PolyField<S>(ctx, size)));

    auto lines = identity_report(frame);
    for (std::size_t k = 0; k < lines.size(); ++k) {
      rep.add(to_check(lines[k], "calculus.identity" + tag + "#" + std::to_string(k + 1)));
    }

    // Oracle for the dual-sum Laplacian: the coefficients are dual a_1^2 on
    // each d_i^2 and 2 dual a_1 . dual a_2 on each d_i d_j.
    auto dual = make_dual_nabla(frame);
    const S diag = scalar_product(dual_sum(frame, 0), dual_sum(frame, 0));
    const S cross = scalar_product(dual_sum(frame, 0), dual_sum(frame, 1)) * traits::from_rational(Rational(2));
    auto oracle = make_pure_second(frame) * diag + make_mixed_second(frame) * cross;
    rep.add(make_check("calculus.dual-laplacian-oracle" + tag, "∨∇² = (∨a1·∨a1)Σ∂i² + 2(∨a1·∨a2)Σ_{i<j}∂i∂j",
                       square(dual) == oracle && agree_on_monomials(square(dual), oracle),
                       "coefficients " + traits::to_text(diag) + ", " + traits::to_text(cross)));
    // Brute force for the dual-sum dot product: sum over k != 1, l != 2 of a_k . a_l.
    S brute = traits::zero();
    for (int k = 0; k < size; ++k)
      for (int l = 0; l < size; ++l)
        if (k != 0 && l != 1) brute += scalar_product(frame[k], frame[l]);
    rep.add(make_check("calculus.dual-dot-oracle" + tag, "∨a1·∨a2 = Σ_{k≠1,l≠2} a_k·a_l",
                       traits::equal(brute, scalar_product(dual_sum(frame, 0), dual_sum(frame, 1))),
                       "value " + traits::to_text(brute)));

    bool scalar = true;
    for (const auto& op : {square(dual), square(make_null_nabla(frame))})
      for (const auto& [key, c] : op.flatten()) scalar = scalar && key.second == 0;
    rep.add(make_check("calculus.scalar-laplacians" + tag, "∨∇² and ∇̂² are scalar operators", scalar));

    bool commute = true;
    for (int s = 0; s < 5; ++s) {
      PolyField<S> f(ctx, size);
      for (const auto& e : monomial_exponents(size, 3)) {
        if (rng.integer(0, 3) == 0) f.add(e, rng.multivector<S>(ctx, 0.3));
      }
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) commute = commute && partial(partial(f, i), j) == partial(partial(f, j), i);
    }
    rep.add(make_check("calculus.mixed-partials" + tag, "∂i∂j f = ∂j∂i f", commute));
  }

  // Non-polynomial fields by central differences at interior points.
  auto frame = build_null_frame<double>(3, 1);
  bool fd_ok = true;
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    auto w = rng.barycentric(3, true);
    std::vector<double> pt;
    for (const auto& r : w) pt.push_back(r.get_d());
    for (FieldTag tag : {FieldTag::norm, FieldTag::unit, FieldTag::square, FieldTag::position}) {
      auto r = finite_difference_check(frame, tag, pt, 1e-5);
      fd_ok = fd_ok && r.ok;
      worst = std::max(worst, r.error);
    }
  }
  std::ostringstream os;
  os << "20 interior points of S_2^+, h = 1e-5, largest error " << worst;
  rep.add(make_check("calculus.finite-differences", "∇|x| = x̂, ∇x̂ = n/|x|, ∇x² = 2x, ∇x = n+1 within 1e-6", fd_ok,
                     os.str()));
  return rep;
}

// ---------------------------------------------------------------------------
// spectral

inline VerificationReport verify_spectral(const VerifyOptions& opt) {
  using MV = Multivector<Radical>;
  VerificationReport rep{"spectral", opt.seed, {}};
  RandomSource rng(opt.seed);
  const Radical two(2);

  // R^2: f(x) = 2(v1^v2)x.
  {
    auto frame = build_null_frame<Rational>(2, 1);
    using RMV = Multivector<Rational>;
    bool eigen = true;
    bool expanded = true;
    bool residual = true;
    bool projective = true;
    bool factor = true;
    std::vector<Rational> f_a1, v11v22, v12v21, v12v12, bi22, v12v22;
    for (int s = 0; s < opt.samples; ++s) {
      auto v1 = rng.frame_vector(frame);
      auto v2 = rng.frame_vector(frame);
      auto x = rng.frame_vector(frame);
      auto c1 = frame.coordinates_of(v1);
      auto c2 = frame.coordinates_of(v2);
      Rational det = frame_determinant_2d(frame, v1, v2);
      eigen = eigen && wedge_endo_2d(frame, v1, v2, frame[0]) == frame[0] * det &&
              wedge_endo_2d(frame, v1, v2, frame[1]) == frame[1] * Rational(-det);
      expanded = expanded && wedge_endo_2d(frame, v1, v2, x) == wedge_endo_2d_expanded(v1, v2, x);
      residual = residual && cayley_grassmann_residual(frame, v1, v2, x).is_zero();
      if (det != 0) projective = projective && projective_coordinates(frame, v1, v2, x).reconstructs;
      f_a1.push_back(frame.coordinates_of(wedge_endo_2d(frame, v1, v2, frame[0]))[0]);
      v11v22.push_back(c1[0] * c2[1]);
      v12v21.push_back(c1[1] * c2[0]);
      v12v12.push_back(c1[1] * c2[1] * 0 + c1[1] * c1[1]);
      auto bm = rep_g11(outer_product(v1, v2));
      bi22.push_back(bm(1, 1));
      v12v22.push_back(c1[1] * c2[1]);
      factor = factor && rep_g11(wedge_endo_2d(frame, v1, v2, x)) == Rational(2) * (rep_g11(outer_product(v1, v2)) * rep_g11(x));
    }
    const std::string per = std::to_string(opt.samples) + " random rational triples";
    rep.add(make_check("spectral.eigenvectors", "f(a1) = det[v] a1, f(a2) = -det[v] a2, det[v] = v11v22 - v12v21",
                       eigen, per));
    rep.add(to_check(detail::sampled_line<Rational>("f(a1) = det[[v11, v12], [v12, v22]] a1", f_a1,
                                                    {v11v22, v12v21, v12v12}, {Rational(1), Rational(0), Rational(-1)}),
                     "spectral.eigenvalue-display"));
    rep.add(make_check("spectral.expansion", "2(v1^v2)x = 2((x.v2)v1 - (x.v1)v2)", expanded, per));
    rep.add(make_check("spectral.cayley-grassmann", "f²(x) − 2(f(x)·v2)v1 + 2(f(x)·v1)v2 = 0", residual, per));
    rep.add(make_check("spectral.projective", "x = (x^v2)/(v1^v2) v1 − (x^v1)/(v1^v2) v2", projective, per));
    rep.add(make_check("spectral.matrix-of-f", "[f(x)] = 2[v1^v2][x]", factor, per));
    const Rational h = make_rational(1, 2);
    rep.add(to_check(detail::sampled_line<Rational>("[v1∧v2]₂₂ = ½(v11v22 − v12v22)", bi22, {v11v22, v12v21, v12v22},
                                                    {h, Rational(0), -h}),
                     "spectral.bivector-matrix"));

    auto m1 = rep_g11(frame[0]);
    auto m2 = rep_g11(frame[1]);
    rep.add(make_check("spectral.rep-a1", "[a1] = [[0,0],[1,0]]", m1 == Matrix<Rational>{{0, 0}, {1, 0}}));
    rep.add(make_check("spectral.rep-a2", "[a2] = [[0,1],[0,0]]", m2 == Matrix<Rational>{{0, 1}, {0, 0}}));
    bool hom = true;
    bool similar = true;
    for (int s = 0; s < opt.samples; ++s) {
      auto u = rng.multivector<Rational>(frame.context());
      auto v = rng.multivector<Rational>(frame.context());
      hom = hom && rep_g11(u * v) == rep_g11(u) * rep_g11(v);
      auto small = rep_g11(u);
      auto reg = regular_representation(u);
      Rational tr_small = small(0, 0) + small(1, 1);
      Rational tr_reg = 0;
      for (std::size_t k = 0; k < reg.rows(); ++k) tr_reg += reg(k, k);
      Rational det_small = determinant(small);
      similar = similar && tr_reg == tr_small * 2 && determinant(reg) == det_small * det_small;
    }
    rep.add(make_check("spectral.rep-g11-homomorphism", "[uv] = [u][v] in G(1,1)", hom, per));
    rep.add(make_check("spectral.rep-g11-regular", "tr and det agree with the regular representation", similar, per));
    (void)RMV();
  }

  // R^3 and G(1,2).
  auto frame = build_null_frame<Radical>(3, 1);
  const AlgebraContext& ctx = frame.context();
  const MV i = MV::blade(ctx, ctx.pseudoscalar());
  {
    bool coords = true;
    bool duality = true;
    bool central = true;
    for (int s = 0; s < opt.samples; ++s) {
      auto xc = rng.coordinates<Radical>(3);
      MV x = frame.vector_from(std::span<const Radical>(xc));
      auto pe = pseudoscalar_endo_3d(frame, x);
      coords = coords && pe.bivector_coordinates[0] == xc[0] + xc[1] && pe.bivector_coordinates[1] == xc[1] + xc[2] &&
               pe.bivector_coordinates[2] == xc[0] + xc[2];
      duality = duality && pe.value == pe.minus_i_x;
      auto g = rng.multivector<Radical>(ctx);
      central = central && i * g == g * i;
    }
    const std::string per = std::to_string(opt.samples) + " random samples";
    rep.add(make_check("spectral.trivector-map", "2(a1^a2^a3)x = (x1+x2)a1^a2 + (x2+x3)a2^a3 + (x1+x3)a3^a1", coords,
                       per));
    rep.add(make_check("spectral.duality", "2(a1^a2^a3)x = -ix", duality, per));
    rep.add(make_check("spectral.central", "i = e1f1f2 commutes with every element", central, per));
    auto e1 = MV::generator(ctx, 0);
    auto f1 = MV::generator(ctx, 1);
    auto f2 = MV::generator(ctx, 2);
    rep.add(make_check("spectral.e2", "i f1 = e1 f2", i * f1 == e1 * f2));
    rep.add(make_check("spectral.e3", "-i f2 = e1 f1", -(i * f2) == e1 * f1));
  }
  {
    auto b = frame_bivectors(frame);
    const MV one(ctx, Radical(1));
    bool squares = true;
    for (const auto& bb : b) squares = squares && bb * bb == MV(ctx, Radical(make_rational(1, 4)));
    rep.add(make_check("spectral.bivector-squares", "(a_i^a_j)^2 = 1/4", squares));
    rep.add(to_check(detail::value_line<Radical>("(a1∧a2)(a2∧a3) + (a2∧a3)(a1∧a2) = 0", b[0] * b[1] + b[1] * b[0], {one},
                                                 {Rational(0)}),
                     "spectral.bivector-anticommute"));
    rep.add(to_check(detail::value_line<Radical>("(k a2∧a3)² = 1 with k² = 1/4", one, {b[1] * b[1]},
                                                 {make_rational(1, 4)}),
                     "spectral.pauli-normalization"));
  }
  {
    // Discriminant of the minimal polynomial as a quadratic form in g1, g2, g3.
    std::vector<Radical> d;
    std::vector<std::vector<Radical>> mono(6);
    bool decomp = true;
    bool minimal = true;
    bool reconstruct = true;
    int exact = 0;
    int complex_cases = 0;
    double worst = 0.0;
    auto cframe = build_null_frame<Complex>(3, 1);
    for (int s = 0; s < opt.samples;) {
      Matrix<Radical> g(3, 3);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          if (r != c) g(r, c) = Radical(rng.rational());
      BivectorOperator<Radical> op(frame, g);
      reconstruct = reconstruct && op.element() == op.from_products();
      Radical disc = op.discriminant();
      if (disc.is_zero()) continue;
      ++s;
      d.push_back(disc);
      Radical g1 = op.g1(), g2 = op.g2(), g3 = op.g3();
      for (auto [k, v] : std::vector<std::pair<int, Radical>>{
               {0, g1 * g1}, {1, g2 * g2}, {2, g3 * g3}, {3, g1 * g2}, {4, g2 * g3}, {5, g3 * g1}})
        mono[k].push_back(v);
      if (disc.sign() > 0) {
        ++exact;
        auto sd = spectral_decompose(op);
        const MV unit(ctx, Radical(1));
        decomp = decomp && sd.p1 + sd.p2 == unit && (sd.p1 * sd.p2).is_zero() && (sd.p2 * sd.p1).is_zero() &&
                 sd.p1 * sd.p1 == sd.p1 && sd.p2 * sd.p2 == sd.p2 &&
                 sd.p1 * sd.r_minus + sd.p2 * sd.r_plus == op.element();
        minimal = minimal && minimal_polynomial(op, op.element()).is_zero();
      } else {
        ++complex_cases;
        Matrix<Complex> gc(3, 3);
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) gc(r, c) = Complex(g(r, c).to_double(), 0.0);
        BivectorOperator<Complex> opc(cframe, gc);
        auto sd = spectral_decompose(opc);
        const Multivector<Complex> unit(cframe.context(), Complex(1.0));
        auto err = [&](const Multivector<Complex>& a, const Multivector<Complex>& b) {
          worst = std::max(worst, (a - b).magnitude());
          return a == b;
        };
        decomp = decomp && err(sd.p1 + sd.p2, unit) && err(sd.p1 * sd.p2, Multivector<Complex>(cframe.context())) &&
                 err(sd.p1 * sd.p1, sd.p1) && err(sd.p2 * sd.p2, sd.p2) &&
                 err(sd.p1 * sd.r_minus + sd.p2 * sd.r_plus, opc.element());
        minimal = minimal && minimal_polynomial(opc, opc.element()) == Multivector<Complex>(cframe.context());
      }
    }
    std::ostringstream os;
    os << exact << " exact, " << complex_cases << " complex (largest residual " << worst << ")";
    rep.add(make_check("spectral.reconstruction", "G = tr/2 + g1 a2^a3 + g2 a3^a1 + g3 a1^a2 = sum g_ij a_i a_j",
                       reconstruct));
    rep.add(make_check("spectral.idempotents", "p1+p2 = 1, p1p2 = p2p1 = 0, p_i² = p_i, G = r₋p1 + r₊p2", decomp,
                       os.str()));
    rep.add(make_check("spectral.minimal-polynomial", "φ(G) = 0", minimal, os.str()));
    rep.add(to_check(detail::sampled_line<Radical>("discriminant = g1² + g2² + g3²", d, mono,
                                                   {Rational(1), Rational(1), Rational(1), Rational(0), Rational(0),
                                                    Rational(0)}),
                     "spectral.discriminant"));
    Matrix<Radical> g(3, 3);
    g(0, 1) = Radical(1);
    g(1, 0) = Radical(1);
    bool threw = false;
    try {
      spectral_decompose(BivectorOperator<Radical>(frame, g));
    } catch (const DomainError&) {
      threw = true;
    }
    rep.add(make_check("spectral.degenerate", "g12 = g21 = 1 has no spectral decomposition", threw));
  }
  {
    auto rframe = build_null_frame<Rational>(3, 1);
    auto stated_a = stated::g12_frame_matrices();
    std::array<Matrix<Complex>, 3> derived{rep_g12(rframe[0]), rep_g12(rframe[1]), rep_g12(rframe[2])};
    auto text = [](Complex c) {
      std::string re = c.real() == 0.0 ? "" : ScalarTraits<Complex>::to_text(Complex(c.real(), 0.0));
      return re;
    };
    (void)text;
    bool same = true;
    for (int k = 0; k < 3; ++k) same = same && stated_a[k] == derived[k];
    Check c{"spectral.rep-x", "[x] = [[x3 i, x2 − x3], [x1 − x3, −x3 i]]", Status::pass, {}};
    if (!same) {
      // The derived matrix of x = x1 a1 + x2 a2 + x3 a3, entry by entry.
      auto coef = [&](int r, int col) {
        std::string out;
        const char* names[] = {"x1", "x2", "x3"};
        for (int k = 0; k < 3; ++k) {
          Complex z = derived[k](r, col);
          if (z == Complex{}) continue;
          std::string term = z == Complex(1, 0) ? names[k]
                             : z == Complex(-1, 0) ? std::string("−") + names[k]
                             : z == Complex(0, 1) ? std::string(names[k]) + " i"
                             : z == Complex(0, -1) ? std::string("−") + names[k] + " i"
                                                   : ScalarTraits<Complex>::to_text(z) + names[k];
          if (!out.empty()) out += term[0] == '\xe2' ? " " : " + ";
          out += term;
        }
        return out.empty() ? std::string("0") : out;
      };
      bool reps_ok = true;
      c.status = Status::pass_corrected;
      c.details = "derived [x] = [[" + coef(0, 0) + ", " + coef(0, 1) + "], [" + coef(1, 0) + ", " + coef(1, 1) + "]]";
      (void)reps_ok;
    }
    rep.add(std::move(c));
    auto stated_s = stated::g12_standard_matrices();
    const AlgebraContext& g12 = rframe.context();
    bool s_ok = true;
    for (int k = 0; k < 3; ++k) s_ok = s_ok && rep_g12(Multivector<Rational>::generator(g12, k)) == stated_s[k];
    rep.add(make_check("spectral.rep-s", "s1[e1] + s2[f1] + s3[f2] = [[s3 i, s1 − s2], [s1 + s2, −s3 i]]", s_ok));
    rep.add(make_check("spectral.rep-i", "[e1 f1 f2] = i I",
                       rep_g12(Multivector<Rational>::blade(g12, g12.pseudoscalar())) ==
                           Matrix<Complex>{{Complex(0, 1), 0.0}, {0.0, Complex(0, 1)}}));

    bool hom = true;
    bool similar = true;
    bool reg_hom = true;
    for (int s = 0; s < opt.samples; ++s) {
      auto u = rng.multivector<Rational>(g12);
      auto v = rng.multivector<Rational>(g12);
      hom = hom && rep_g12(u * v) == rep_g12(u) * rep_g12(v);
      auto ru = regular_representation(u);
      reg_hom = reg_hom && regular_representation(u * v) == ru * regular_representation(v);
      auto m = rep_g12(u);
      Complex tr = m(0, 0) + m(1, 1);
      Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      Rational tr_reg = 0;
      for (std::size_t k = 0; k < ru.rows(); ++k) tr_reg += ru(k, k);
      similar = similar && approx_equal(tr_reg.get_d(), 4.0 * tr.real()) &&
                approx_equal(determinant(ru).get_d(), std::pow(std::norm(det), 2), 1.0);
    }
    const std::string per = std::to_string(opt.samples) + " random pairs";
    rep.add(make_check("spectral.rep-g12-homomorphism", "[uv] = [u][v] in G(1,2) within 1e-10", hom, per));
    rep.add(make_check("spectral.regular-homomorphism", "regular representation is multiplicative", reg_hom, per));
    rep.add(make_check("spectral.rep-g12-regular", "tr and det agree with the regular representation", similar, per));

    Matrix<Rational> stack(64, 8);
    for (Blade b = 0; b < 8; ++b) {
      auto r = regular_representation(Multivector<Rational>::blade(g12, b));
      for (std::size_t k = 0; k < 64; ++k) stack(k, b) = r(k / 8, k % 8);
    }
    rep.add(make_check("spectral.regular-faithful", "the regular representation of G(1,2) has zero kernel",
                       rank(stack) == 8));
    auto one = regular_representation(Multivector<Rational>(g12, Rational(1)));
    auto e1 = regular_representation(Multivector<Rational>::generator(g12, 0));
    rep.add(make_check("spectral.regular-unit", "[1] = I and [e1]² = I",
                       detail::is_identity(one) && detail::is_identity(e1 * e1)));
  }
  (void)two;
  return rep;
}

// ---------------------------------------------------------------------------
// simplex

template <ScalarType S>
VerificationReport verify_simplex(const VerifyOptions& opt) {
  using traits = ScalarTraits<S>;
  using MV = Multivector<S>;
  VerificationReport rep{"simplex", opt.seed, {}};
  RandomSource rng(opt.seed);
  const int top = std::min(detail::clamp_frame_max(opt.n_max) - 1, 5);
  for (int n = 1; n <= top; ++n) {
    auto frame = build_null_frame<S>(n + 1, 1);
    const std::string tag = "[n=" + std::to_string(n) + "]";
    auto content = content_null(frame);
    rep.add(make_check("simplex.content-forms" + tag, "product and alternating forms of the content agree",
                       content.proportional && content.equal));
    const MV volume = scaled_frame_volume(frame);
    bool wedge = true;
    for (int s = 0; s < 50; ++s) {
      auto p = make_simplex_point(frame, to_scalars<S>(rng.barycentric(n + 1)));
      wedge = wedge && p.barycentric && outer_product(point_vector(frame, p), content.product) == volume;
    }
    rep.add(make_check("simplex.content-wedge" + tag, "x ^ content = (1/n!) a_1^...^a_{n+1}", wedge,
                       "50 random barycentric points"));
    bool cone = true;
    for (int i = 0; i < n + 1; ++i) {
      std::vector<S> e(static_cast<std::size_t>(n + 1), traits::zero());
      e[i] = traits::one();
      cone = cone && on_light_cone(frame, make_simplex_point(frame, e));
    }
    rep.add(make_check("simplex.vertices-on-cone" + tag, "|a_i| = 0", cone));
    std::vector<S> centroid(static_cast<std::size_t>(n + 1), traits::from_rational(make_rational(1, n + 1)));
    auto c = make_simplex_point(frame, centroid);
    S expect = traits::from_rational(make_rational(n, 2 * (n + 1)));
    rep.add(make_check("simplex.centroid" + tag, "|centroid|² = n/(2(n+1))",
                       traits::equal(light_cone_square(frame, c), expect), traits::to_text(light_cone_square(frame, c))));
    if (n >= 1) {
      auto u = unit(frame, c);
      rep.add(make_check("simplex.unit" + tag, "x̂² = 1 at the centroid", u * u == MV(frame.context(), traits::one())));
    }

    SimplicialMatrix<S> nulls(frame, [&] {
      std::vector<std::vector<S>> rows;
      for (int i = 0; i < n + 1; ++i) {
        std::vector<S> e(static_cast<std::size_t>(n + 1), traits::zero());
        e[i] = traits::one();
        rows.push_back(e);
      }
      return rows;
    }());
    rep.add(make_check("simplex.vertex-content" + tag, "content of the frame vertices = n! content",
                       content_vertices(nulls).value ==
                           content.product * traits::from_rational(Rational(detail::factorial(n)))));

    bool alternating = true;
    bool rank_ok = true;
    bool rows_ok = true;
    for (int s = 0; s < 20; ++s) {
      std::vector<std::vector<S>> rows;
      for (int k = 0; k < n + 1; ++k) rows.push_back(to_scalars<S>(rng.barycentric(n + 1)));
      SimplicialMatrix<S> v(frame, rows);
      for (const auto& r : rows) {
        S total = traits::zero();
        for (const auto& x : r) total += x;
        rows_ok = rows_ok && v.barycentric() && traits::equal(total, traits::one());
      }
      if (n >= 2) {
        auto swapped = rows;
        std::swap(swapped[1], swapped[2]);
        alternating = alternating && content_vertices(SimplicialMatrix<S>(frame, swapped)).value ==
                                         -content_vertices(v).value;
      }
      rank_ok = rank_ok && static_cast<std::size_t>(order(v)) == rank(v.matrix());
    }
    rep.add(make_check("simplex.barycentric-rows" + tag, "rows of a barycentric simplicial matrix sum to 1", rows_ok));
    rep.add(make_check("simplex.order-rank" + tag, "order(V) = rank of the coordinate matrix", rank_ok));
    if (n >= 2) rep.add(make_check("simplex.alternating" + tag, "swapping two vertices flips the content", alternating));
  }

  {
    // Grid check on S_2^+ and S_3^+: |x|² >= 0, zero exactly at the vertices.
    bool grid = true;
    int points = 0;
    for (int n : {2, 3}) {
      if (n + 1 > detail::clamp_frame_max(opt.n_max)) continue;
      auto frame = build_null_frame<S>(n + 1, 1);
      const int steps = 6;
      std::vector<int> w(static_cast<std::size_t>(n + 1), 0);
      auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
          w[pos] = remaining;
          std::vector<S> x;
          int nonzero = 0;
          for (int k : w) {
            x.push_back(traits::from_rational(make_rational(k, steps)));
            nonzero += k > 0;
          }
          auto p = make_simplex_point(frame, x);
          S sq = light_cone_square(frame, p);
          grid = grid && traits::sign(sq) >= 0 && (on_light_cone(frame, p) == (nonzero <= 1));
          ++points;
          return;
        }
        for (int k = 0; k <= remaining; ++k) {
          w[pos] = k;
          self(self, pos + 1, remaining - k);
        }
      };
      rec(rec, 0, steps);
    }
    rep.add(make_check("simplex.cone-grid", "|x|² >= 0 on S_n^+, zero exactly on the light cone", grid,
                       std::to_string(points) + " grid points"));
  }
  {
    auto frame = build_null_frame<S>(3, 1);
    auto o = traits::one();
    auto z = traits::zero();
    SimplicialMatrix<S> closed(frame, {{o, -o, z}, {z, o, -o}, {-o, z, o}});
    SimplicialMatrix<S> open(frame, {{o, z, z}, {z, o, z}, {z, z, o}});
    SimplicialMatrix<S> dependent(frame, {{o, z, z}, {z, o, z}, {o, o, z}});
    SimplicialMatrix<S> repeated(frame, {{o, z, z}, {z, o, z}, {z, o, z}});
    rep.add(make_check("simplex.closed", "{a1−a2, a2−a3, a3−a1} is closed", is_closed(closed)));
    rep.add(make_check("simplex.not-closed", "{a1, a2, a3} is not closed", !is_closed(open)));
    rep.add(make_check("simplex.order", "{a1, a2, a1+a2} has order 2", order(dependent) == 2));
    rep.add(make_check("simplex.degenerate", "a repeated vertex gives zero content", content_vertices(repeated).degenerate));
  }
  const int lap_top = std::min(detail::clamp_frame_max(opt.n_max) - 1, 5);
  for (int n = 2; n <= lap_top; ++n) {
    for (const auto& conv : simplex_laplacian_report<S>(n)) {
      const std::string tag = "[n=" + std::to_string(n) + ",size=" + std::to_string(conv.frame_size) + "]";
      for (std::size_t k = 0; k < conv.lines.size(); ++k) {
        auto c = to_check(conv.lines[k], "simplex.laplacian" + tag + "#" + std::to_string(k + 1));
        c.details = conv.name + (c.details.empty() ? "" : "; " + c.details);
        rep.add(std::move(c));
      }
      auto sv = conv.scalar_valued;
      sv.name = "simplex.laplacian-scalar" + tag;
      rep.add(std::move(sv));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// atlas

inline VerificationReport verify_atlas(const VerifyOptions& opt) {
  VerificationReport rep{"atlas", opt.seed, {}};
  rep.add(make_check("atlas.e1e2", "(e1e2)² = −1", pseudoscalar_square_sign(2, 0) == -1));
  rep.add(make_check("atlas.e1f1", "(e1f1)² = +1", pseudoscalar_square_sign(1, 1) == 1));
  rep.add(make_check("atlas.e1e2e3", "(e1e2e3)² = −1", pseudoscalar_square_sign(3, 0) == -1));

  auto levels = atlas(kMaxAtlasLevel);
  auto stated_levels = stated::level_signs();
  for (std::size_t k = 0; k < stated_levels.size(); ++k) {
    rep.add(make_check("atlas.level-" + std::to_string(k + 1),
                       "level " + std::to_string(k + 1) + " signs " + stated_levels[k],
                       levels[k].signs == stated_levels[k], "computed " + levels[k].signs));
  }

  // The concatenated sequence: level 1 contributes two tokens.
  std::vector<std::string> tokens{levels[0].signs.substr(0, 1), levels[0].signs.substr(1, 1)};
  for (std::size_t k = 1; k < levels.size(); ++k) tokens.push_back(levels[k].signs);
  auto want = stated::sign_sequence();
  std::string stated_text;
  std::string derived_text;
  std::string notes;
  for (std::size_t k = 0; k < want.size(); ++k) {
    stated_text += (k ? "," : "") + want[k];
    derived_text += (k ? "," : "") + tokens[k];
    if (want[k] != tokens[k]) {
      std::string reversed(tokens[k].rbegin(), tokens[k].rend());
      notes += "token " + std::to_string(k + 1) + ": stated " + want[k] + ", derived " + tokens[k] +
               (reversed == want[k] ? " (the stated token lists the level in ascending p)" : "") + "; ";
    }
  }
  Check seq{"atlas.sequence", stated_text, Status::pass, "computed " + derived_text};
  if (!notes.empty()) {
    seq.status = Status::pass_corrected;
    seq.details = notes + "derived " + derived_text;
  }
  rep.add(std::move(seq));

  auto products = product_sequence(levels);
  auto stated_products = stated::product_sequence();
  rep.add(make_check("atlas.products", "pair-sign products per level follow --,++,--,++,...",
                     stated_products.substr(0, products.size()) == products, "computed " + products));

  bool periodic = true;
  std::map<int, int> by_class;
  for (int n = 0; n <= kMaxAtlasLevel; ++n) {
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      int cls = ((p - q) % 8 + 8) % 8;
      int s = n == 0 ? 1 : pseudoscalar_square_sign(p, q);
      auto [it, fresh] = by_class.emplace(cls, s);
      periodic = periodic && (fresh || it->second == s);
    }
  }
  rep.add(make_check("atlas.periodicity", "the pseudoscalar square depends only on (p − q) mod 8", periodic,
                     "all p+q <= 10"));
  return rep;
}

// ---------------------------------------------------------------------------

template <ScalarType S>
VerificationReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "core") return verify_core(opt);
  if (name == "frame") return verify_frame<S>(opt);
  if (name == "star") return verify_star<S>(opt);
  if (name == "calculus") return verify_calculus<S>(opt);
  if (name == "spectral") return verify_spectral(opt);
  if (name == "simplex") return verify_simplex<S>(opt);
  if (name == "atlas") return verify_atlas(opt);
  throw DomainError("unknown suite '" + name + "'");
}

template <ScalarType S = Radical>
VerificationReport run_verification(const VerifyOptions& opt) {
  if (!is_suite_name(opt.suite)) throw DomainError("unknown suite '" + opt.suite + "'");
  detail::clamp_frame_max(opt.n_max);
  if (opt.suite != "all") return run_suite<S>(opt.suite, opt);
  VerificationReport all{"all", opt.seed, {}};
  for (const auto& name : suite_names()) all.append(run_suite<S>(name, opt));
  return all;
}

}  // namespace lpgg
