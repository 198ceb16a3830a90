#pragma once

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpgg/lpgg.hpp"

namespace lpgg::cli {

/// Bad flag values found after parsing; exit code 2 like parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Backend { exact, approx };

inline Backend backend_from_env() {
  const char* v = std::getenv("LPGG_BACKEND");
  if (v == nullptr || std::string(v).empty() || std::string(v) == "exact") return Backend::exact;
  if (std::string(v) == "approx") return Backend::approx;
  throw UsageError("LPGG_BACKEND must be 'exact' or 'approx', got '" + std::string(v) + "'");
}

inline std::string backend_name(Backend b) { return b == Backend::exact ? "exact" : "approx"; }

inline int parse_sign(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw UsageError("--sign must be + or -");
}

// ---------------------------------------------------------------------------
// mult-table

struct MultTableArgs {
  int size = 3;
  std::string sign = "+";
  int i = 1;
  int j = 2;
  std::string format = "text";
};

/// Names a grid product as one of 0, +-a_i, +-a_j, +-a_ia_j, +-a_ja_i.
template <ScalarType S>
std::string grid_label(const std::array<Multivector<S>, 4>& e, const Multivector<S>& v) {
  static const char* names[] = {"a_i", "a_j", "a_ia_j", "a_ja_i"};
  if (v.is_zero()) return "0";
  for (int k = 0; k < 4; ++k) {
    if (v == e[k]) return names[k];
    if (v == -e[k]) return std::string("-") + names[k];
  }
  return to_text(v);
}

template <ScalarType S>
int mult_table_output(const MultTableArgs& a, std::ostream& out) {
  const int sign = parse_sign(a.sign);
  if (a.i < 1 || a.j < 1 || a.i > a.size || a.j > a.size || a.i == a.j) {
    throw UsageError("--i and --j must be distinct indices in 1.." + std::to_string(a.size));
  }
  auto frame = build_null_frame<S>(a.size, sign);
  auto e = pair_elements(frame, a.i - 1, a.j - 1);
  auto grid = multiplication_grid(frame, a.i - 1, a.j - 1);
  auto report = verify_multiplication_table(frame);
  static const char* names[] = {"a_i", "a_j", "a_ia_j", "a_ja_i"};

  if (a.format == "json") {
    Json g = Json::array();
    for (const auto& row : grid) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(grid_label(e, v));
      g.push_back(std::move(r));
    }
    Json elements = Json::array();
    for (const auto& v : e) elements.push_back(to_text(v));
    Json doc = {{"n_plus_1", a.size},
                {"sign", a.sign},
                {"pair", {a.i, a.j}},
                {"labels", {"a_i", "a_j", "a_ia_j", "a_ja_i"}},
                {"elements", std::move(elements)},
                {"grid", std::move(g)},
                {"pairs_checked", report.pairs_checked},
                {"entries_checked", report.entries_checked},
                {"violations", report.violations}};
    out << doc.dump(2) << '\n';
  } else {
    out << "G(" << frame.context().p() << "," << frame.context().q() << "), n+1 = " << a.size << ", (i,j) = (" << a.i
        << "," << a.j << ")\n";
    const int w = 9;
    auto pad = [&](const std::string& s) { return s + std::string(s.size() < w ? w - s.size() : 1, ' '); };
    out << pad("");
    for (const char* n : names) out << pad(n);
    out << '\n';
    for (int r = 0; r < 4; ++r) {
      out << pad(names[r]);
      for (int c = 0; c < 4; ++c) out << pad(grid_label(e, grid[r][c]));
      out << '\n';
    }
    out << report.pairs_checked << " pairs, " << report.entries_checked << " entries, " << report.violations.size()
        << " violations\n";
    for (const auto& v : report.violations) out << "  " << v << '\n';
  }
  return report.ok() ? 0 : 1;
}

inline int cmd_mult_table(const MultTableArgs& a, Backend backend, std::ostream& out) {
  return backend == Backend::exact ? mult_table_output<Radical>(a, out) : mult_table_output<double>(a, out);
}

// ---------------------------------------------------------------------------
// frame

struct FrameArgs {
  int size = 3;
  std::string sign = "+";
  std::string format = "json";
};

template <ScalarType S>
int frame_output(const FrameArgs& a, std::ostream& out) {
  auto frame = build_null_frame<S>(a.size, parse_sign(a.sign));
  std::vector<std::string> basis;
  for (int j = 0; j < frame.size(); ++j) basis.push_back(frame.standard_name(j));
  std::vector<std::string> vectors;
  for (const auto& v : frame.vectors()) vectors.push_back(to_text(v));
  std::vector<std::string> reciprocal;
  for (const auto& v : reciprocal_frame(frame)) reciprocal.push_back(to_text(v));
  const bool inverse_ok = frame.T() * frame.T_inv() == Matrix<S>::identity(frame.size());

  if (a.format == "csv") {
    out << "# T (rows: null vectors a_i; columns: " ;
    for (std::size_t k = 0; k < basis.size(); ++k) out << (k ? " " : "") << basis[k];
    out << ")\n";
    write_matrix_csv(out, frame.T());
    out << "# T^-1\n";
    write_matrix_csv(out, frame.T_inv());
    return inverse_ok ? 0 : 1;
  }
  Json doc = {{"n_plus_1", frame.size()},
              {"sign", a.sign},
              {"algebra", "G(" + std::to_string(frame.context().p()) + "," + std::to_string(frame.context().q()) + ")"},
              {"standard_basis", basis},
              {"T", matrix_text_json(frame.T())},
              {"T_inv", matrix_text_json(frame.T_inv())},
              {"null_vectors", vectors},
              {"reciprocal_frame", reciprocal},
              {"T_times_T_inv_is_identity", inverse_ok}};
  out << doc.dump(2) << '\n';
  return inverse_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  VerifyOptions options;
  std::string format = "text";
};

inline int cmd_verify(const VerifyArgs& a, Backend backend, std::ostream& out) {
  if (!is_suite_name(a.options.suite)) throw UsageError("unknown suite '" + a.options.suite + "'");
  if (a.options.n_max < 2 || a.options.n_max > 8) throw UsageError("--n-max must lie in 2..8");
  if (a.options.samples < 1) throw UsageError("--samples must be positive");
  VerificationReport report = backend == Backend::exact ? run_verification<Radical>(a.options)
                                                        : run_verification<double>(a.options);
  report.backend = backend_name(backend);
  if (a.format == "json") {
    out << report_json(report).dump(2) << '\n';
  } else {
    write_report_text(out, report);
  }
  return report.exit_code();
}

// ---------------------------------------------------------------------------
// spectral

/// {"g12": 1, "g31": "-3/2"} or a 3x3 array of rows (diagonal ignored).
inline Matrix<Rational> parse_g(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("--g is not valid JSON: ") + e.what());
  }
  Matrix<Rational> g(3, 3);
  if (j.is_array()) {
    auto rows = parse_json_rows(j);
    if (rows.size() != 3) throw UsageError("--g array must have 3 rows");
    for (int r = 0; r < 3; ++r) {
      if (rows[r].size() != 3) throw UsageError("--g rows must have 3 entries");
      for (int c = 0; c < 3; ++c) g(r, c) = rows[r][c];
    }
    return g;
  }
  if (!j.is_object()) throw UsageError("--g must be a JSON object such as {\"g12\": 1}");
  for (const auto& [key, value] : j.items()) {
    if (key.size() != 3 || key[0] != 'g' || key[1] < '1' || key[1] > '3' || key[2] < '1' || key[2] > '3' ||
        key[1] == key[2]) {
      throw UsageError("--g keys are g12, g13, g21, g23, g31, g32; got '" + key + "'");
    }
    g(key[1] - '1', key[2] - '1') = detail::json_rational(value);
  }
  return g;
}

template <class S>
Json root_json(const S& r) {
  if constexpr (std::is_same_v<S, Complex>) {
    return {{"re", r.real()}, {"im", r.imag()}};
  } else if constexpr (std::is_same_v<S, Radical>) {
    return r.to_double();
  } else {
    return r;
  }
}

template <ScalarType S>
Json spectral_json(const Matrix<Rational>& g, const std::string& backend) {
  using traits = ScalarTraits<S>;
  auto frame = build_null_frame<S>(3, 1);
  Matrix<S> gs(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) gs(r, c) = traits::from_rational(g(r, c));
  BivectorOperator<S> op(frame, gs);
  auto sd = spectral_decompose(op);
  const Multivector<S> one(frame.context(), traits::one());
  const bool ok = sd.p1 + sd.p2 == one && sd.p1 * sd.p2 == Multivector<S>(frame.context()) && sd.p1 * sd.p1 == sd.p1 &&
                  sd.p2 * sd.p2 == sd.p2 && sd.p1 * sd.r_minus + sd.p2 * sd.r_plus == op.element();
  return {{"backend", backend},
          {"g", matrix_text_json(gs)},
          {"trace", traits::to_text(op.trace())},
          {"element", to_text(op.element())},
          {"discriminant", traits::to_text(sd.discriminant)},
          {"stated_discriminant", traits::to_text(sd.stated_discriminant)},
          {"roots", {root_json(sd.r_minus), root_json(sd.r_plus)}},
          {"roots_text", {traits::to_text(sd.r_minus), traits::to_text(sd.r_plus)}},
          {"p1", to_text(sd.p1)},
          {"p2", to_text(sd.p2)},
          {"decomposition_holds", ok}};
}

inline int cmd_spectral(const std::string& g_text, Backend backend, std::ostream& out) {
  auto g = parse_g(g_text);
  // The sign of the discriminant decides whether real roots exist.
  auto frame = build_null_frame<Rational>(3, 1);
  Rational d = BivectorOperator<Rational>(frame, g).discriminant();
  Json doc;
  if (d < 0) {
    doc = spectral_json<Complex>(g, "complex");
  } else if (backend == Backend::exact) {
    doc = spectral_json<Radical>(g, "exact");
  } else {
    doc = spectral_json<double>(g, "approx");
  }
  out << doc.dump(2) << '\n';
  return doc["decomposition_holds"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// simplex

struct SimplexArgs {
  int n = 2;
  std::string point;
  std::string vertices;
  bool unit = false;
};

inline std::vector<std::vector<Rational>> parse_vertex_rows(std::string text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '[') {
    for (char& c : text)
      if (c == ';') c = '\n';
  }
  return parse_rows(text);
}

template <ScalarType S>
Json simplex_point_json(const NullFrame<S>& frame, const std::vector<Rational>& coords, bool want_unit) {
  using traits = ScalarTraits<S>;
  auto p = make_simplex_point(frame, to_scalars<S>(coords));
  std::vector<std::string> text;
  for (const auto& c : p.coordinates) text.push_back(traits::to_text(c));
  const S sq = light_cone_square(frame, p);
  Json doc = {{"n", frame.n()},
              {"point", text},
              {"barycentric", p.barycentric},
              {"vector", to_text(point_vector(frame, p))},
              {"square", traits::to_text(sq)},
              {"square_value", root_json(sq)},
              {"on_light_cone", on_light_cone(frame, p)}};
  const double sq_value = traits::to_double(sq);
  doc["norm_value"] = std::sqrt(std::max(sq_value, 0.0));
  if (frame.n() <= 6) {
    doc["content_wedge"] = to_text(content_wedge(frame, p));
    doc["content_dot"] = to_text(content_dot(frame, p));
  }
  // Exact norms exist only when the square root fits a radical; otherwise
  // the unit vector is computed in the approximate backend.
  try {
    doc["norm"] = traits::to_text(light_cone_norm(frame, p));
    if (want_unit) doc["unit"] = to_text(unit(frame, p));
  } catch (const InexactOperationError&) {
    doc["norm"] = nullptr;
    if (want_unit) {
      auto approx = build_null_frame<double>(frame.size(), frame.sign());
      doc["unit"] = to_text(unit(approx, make_simplex_point(approx, to_scalars<double>(coords))));
    }
  }
  return doc;
}

template <ScalarType S>
Json simplex_vertices_json(const NullFrame<S>& frame, const std::vector<std::vector<Rational>>& rows) {
  using traits = ScalarTraits<S>;
  std::vector<std::vector<S>> srows;
  Json text = Json::array();
  for (const auto& r : rows) {
    srows.push_back(to_scalars<S>(r));
    Json row = Json::array();
    for (const auto& c : srows.back()) row.push_back(traits::to_text(c));
    text.push_back(std::move(row));
  }
  SimplicialMatrix<S> v(frame, srows);
  auto content = content_vertices(v);
  return {{"n", frame.n()},
          {"vertices", std::move(text)},
          {"barycentric", v.barycentric()},
          {"closed", is_closed(v)},
          {"order", order(v)},
          {"content", to_text(content.value)},
          {"degenerate", content.degenerate}};
}

template <ScalarType S>
Json simplex_json(const SimplexArgs& a, const std::string& backend) {
  auto frame = build_null_frame<S>(a.n + 1, 1);
  Json doc = {{"backend", backend}};
  if (!a.point.empty()) {
    auto rows = parse_rows(a.point);
    if (rows.size() != 1) throw UsageError("--point takes one comma-separated row");
    doc["point"] = simplex_point_json(frame, rows.front(), a.unit);
  }
  if (!a.vertices.empty()) doc["vertices"] = simplex_vertices_json(frame, parse_vertex_rows(a.vertices));
  return doc;
}

inline int cmd_simplex(const SimplexArgs& a, Backend backend, std::ostream& out) {
  if (a.point.empty() && a.vertices.empty()) throw UsageError("simplex needs --point or --vertices");
  Json doc = backend == Backend::exact ? simplex_json<Radical>(a, "exact") : simplex_json<double>(a, "approx");
  out << doc.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// classify

inline int cmd_classify(int max_level, const std::string& format, std::ostream& out) {
  auto levels = atlas(max_level);
  if (format == "csv") {
    write_atlas_csv(out, levels);
  } else if (format == "text") {
    write_atlas_triangle(out, levels);
    out << "products " << product_sequence(levels) << '\n';
  } else {
    Json ls = Json::array();
    for (const auto& l : levels) {
      Json rows = Json::array();
      for (const auto& r : l.rows) {
        rows.push_back({{"p", r.p},
                        {"q", r.q},
                        {"pseudoscalar", r.pseudoscalar},
                        {"sign", r.sign},
                        {"product_of_signs", r.product_of_signs}});
      }
      ls.push_back({{"level", l.level}, {"signs", l.signs}, {"rows", std::move(rows)}});
    }
    Json doc = {{"max", max_level}, {"levels", std::move(ls)}, {"product_sequence", product_sequence(levels)}};
    out << doc.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// mul

inline int cmd_mul(int p, int q, const std::string& lhs, const std::string& rhs, Backend backend, std::ostream& out) {
  AlgebraContext ctx(p, q);
  if (backend == Backend::exact) {
    out << to_text(parse_multivector<Radical>(ctx, lhs) * parse_multivector<Radical>(ctx, rhs)) << '\n';
  } else {
    out << to_text(parse_multivector<double>(ctx, lhs) * parse_multivector<double>(ctx, rhs)) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

/// Runs the command line `args` (without the program name). Exit codes: 0
/// success (including pass-corrected reports), 1 failed checks or domain
/// errors, 2 usage errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlated null-vector geometric algebra toolkit", "lpgg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lpgg 0.1.0");

  MultTableArgs mt;
  auto* mult = app.add_subcommand("mult-table", "Products of a null pair and a check of every pair");
  mult->add_option("--n", mt.size, "frame size n+1")->check(CLI::Range(2, 8));
  mult->add_option("--sign", mt.sign, "+ for G(1,n), - for G(n,1)")->check(CLI::IsMember({"+", "-"}));
  mult->add_option("--i", mt.i, "first index of the displayed pair");
  mult->add_option("--j", mt.j, "second index of the displayed pair");
  mult->add_option("--format", mt.format)->check(CLI::IsMember({"text", "json"}));

  FrameArgs fa;
  auto* frame = app.add_subcommand("frame", "Transition matrices, null vectors and reciprocal frame");
  frame->add_option("--n", fa.size, "frame size n+1")->check(CLI::Range(2, kMaxDimension));
  frame->add_option("--sign", fa.sign)->check(CLI::IsMember({"+", "-"}));
  frame->add_option("--format", fa.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", va.options.suite, "all, core, frame, star, calculus, spectral, simplex or atlas");
  verify->add_option("--n-max", va.options.n_max, "largest frame size n+1 (2..8)");
  verify->add_option("--seed", va.options.seed);
  verify->add_option("--samples", va.options.samples, "random samples per property");
  verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

  std::string g_text;
  auto* spectral = app.add_subcommand("spectral", "Spectral decomposition of sum g_ij a_i a_j in G(1,2)");
  spectral->add_option("--g", g_text, "JSON object of g_ij, e.g. {\"g12\": 1}")->required();

  SimplexArgs sa;
  auto* simplex = app.add_subcommand("simplex", "Barycentric points and simplices on the null frame");
  simplex->add_option("--n", sa.n, "simplex dimension n")->check(CLI::Range(1, 7));
  simplex->add_option("--point", sa.point, "barycentric coordinates, comma separated");
  simplex->add_option("--vertices", sa.vertices, "rows separated by ';', or a JSON array of rows");
  simplex->add_flag("--unit", sa.unit, "also print the unit vector (fails on the light cone)");

  int max_level = 6;
  std::string classify_format = "json";
  auto* classify = app.add_subcommand("classify", "Pseudoscalar square signs of G(p,q)");
  classify->add_option("--max", max_level, "largest p+q")->check(CLI::Range(1, kMaxAtlasLevel));
  classify->add_option("--format", classify_format)->check(CLI::IsMember({"json", "csv", "text"}));

  int mp = 1;
  int mq = 1;
  std::string lhs;
  std::string rhs;
  auto* mul = app.add_subcommand("mul", "Geometric product of two multivectors in G(p,q)");
  mul->add_option("--p", mp)->check(CLI::Range(0, kMaxDimension));
  mul->add_option("--q", mq)->check(CLI::Range(0, kMaxDimension));
  mul->add_option("lhs", lhs)->required();
  mul->add_option("rhs", rhs)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lpgg: " << e.what() << '\n';
    return 2;
  }

  try {
    const Backend backend = backend_from_env();
    if (*mult) return cmd_mult_table(mt, backend, out);
    if (*frame) return backend == Backend::exact ? frame_output<Radical>(fa, out) : frame_output<double>(fa, out);
    if (*verify) return cmd_verify(va, backend, out);
    if (*spectral) return cmd_spectral(g_text, backend, out);
    if (*simplex) return cmd_simplex(sa, backend, out);
    if (*classify) return cmd_classify(max_level, classify_format, out);
    if (*mul) return cmd_mul(mp, mq, lhs, rhs, backend, out);
  } catch (const UsageError& e) {
    err << "lpgg: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "lpgg: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "lpgg: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace lpgg::cli
