#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpgg/matrix.hpp"
#include "lpgg/report.hpp"

namespace lpgg {

/// Linear combination sum_k c_k T_k compared against a target, all given as
/// sparse coefficient maps over a common key space.
template <class S, class Key>
class CoefficientFit {
 public:
  using traits = ScalarTraits<S>;
  using Vector = std::map<Key, S>;

  CoefficientFit(Vector target, std::vector<Vector> terms) : target_(std::move(target)), terms_(std::move(terms)) {
    for (const auto& [k, v] : target_) index_.try_emplace(k, index_.size());
    for (const auto& t : terms_)
      for (const auto& [k, v] : t) index_.try_emplace(k, index_.size());
  }

  bool holds(const std::vector<S>& c) const {
    Vector residual = target_;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (traits::is_zero(c[k])) continue;
      for (const auto& [key, v] : terms_[k]) residual[key] -= c[k] * v;
    }
    double scale = 0.0;
    if constexpr (!traits::exact) {
      for (const auto& [key, v] : target_) scale = std::max(scale, traits::magnitude(v));
    }
    for (const auto& [key, v] : residual) {
      if (!traits::equal(v, traits::zero(), scale)) return false;
    }
    return true;
  }

  /// Coefficients that make the combination equal the target while
  /// changing as few of the stated ones as possible. Subsets of changed
  /// coefficients are tried by size, then in index order; a subset is only
  /// used when its columns are independent, so the answer is unique for it.
  std::optional<std::vector<S>> minimal_correction(const std::vector<S>& stated) const {
    if (holds(stated)) return stated;
    const std::size_t k = terms_.size();
    for (std::size_t size = 1; size <= k; ++size) {
      std::vector<bool> pick(k, false);
      std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
      do {
        std::vector<std::size_t> free;
        for (std::size_t t = 0; t < k; ++t)
          if (pick[t]) free.push_back(t);
        Matrix<S> a(index_.size(), free.size());
        std::vector<S> b(index_.size(), traits::zero());
        for (const auto& [key, v] : target_) b[index_.at(key)] += v;
        for (std::size_t t = 0; t < k; ++t) {
          if (pick[t]) continue;
          for (const auto& [key, v] : terms_[t]) b[index_.at(key)] -= stated[t] * v;
        }
        for (std::size_t f = 0; f < free.size(); ++f)
          for (const auto& [key, v] : terms_[free[f]]) a(index_.at(key), f) = v;
        if (rank(a) == free.size()) {
          if (auto x = solve_consistent(a, b)) {
            std::vector<S> c = stated;
            for (std::size_t f = 0; f < free.size(); ++f) c[free[f]] = (*x)[f];
            if (holds(c)) return c;
          }
        }
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return std::nullopt;
  }

 private:
  Vector target_;
  std::vector<Vector> terms_;
  std::map<Key, std::size_t> index_;
};

template <class S>
struct FitOutcome {
  IdentityLine line;
  std::optional<std::vector<S>> coefficients;
};

/// Compares target against sum_k stated_k T_k: pass when the stated
/// coefficients work, pass-corrected otherwise, fail when no coefficients
/// over these terms work. The corrected coefficients are `preferred` when
/// given and valid (useful when the terms are dependent), else the minimal
/// correction.
template <class S, class Key>
FitOutcome<S> fit_identity(std::string identity, std::map<Key, S> target, std::vector<std::map<Key, S>> terms,
                           const std::vector<Rational>& stated, const std::vector<Rational>& preferred = {}) {
  using traits = ScalarTraits<S>;
  FitOutcome<S> out;
  IdentityLine& line = out.line;
  line.identity = std::move(identity);
  std::vector<S> stated_s;
  for (const auto& r : stated) {
    stated_s.push_back(traits::from_rational(r));
    line.paper_coefficients.push_back(r.get_str());
  }
  CoefficientFit<S, Key> fit(std::move(target), std::move(terms));
  if (!fit.holds(stated_s) && !preferred.empty()) {
    std::vector<S> p;
    for (const auto& r : preferred) p.push_back(traits::from_rational(r));
    if (fit.holds(p)) out.coefficients = std::move(p);
  }
  if (!out.coefficients) out.coefficients = fit.minimal_correction(stated_s);
  if (!out.coefficients) {
    line.status = Status::fail;
    line.details = "no coefficients over the stated terms satisfy the identity";
    return out;
  }
  bool same = true;
  for (std::size_t k = 0; k < stated_s.size(); ++k) {
    line.derived_coefficients.push_back(traits::to_text((*out.coefficients)[k]));
    if (!traits::equal((*out.coefficients)[k], stated_s[k])) same = false;
  }
  line.status = same ? Status::pass : Status::pass_corrected;
  return out;
}

}  // namespace lpgg
