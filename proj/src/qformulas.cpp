#include "affine_heaps/qformulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "affine_heaps/error.hpp"

namespace affheaps {

namespace {

Rational sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

int binom2(int n) { return n * (n - 1) / 2; }

// (q^step; q^step)_n
TruncatedSeries q_factorial(int n, const Truncation& t, int step = 1) {
  return pochhammer(1, Exponent{0, 0, step}, n, t, step);
}

// Adds term(n) for n = start, start+1, ... while degree_step * n stays within the
// bound of v. Each term carries v^(degree_step * n), which the guard re-checks.
template <class Term>
TruncatedSeries partial_sum(const Truncation& t, Var v, int degree_step, int start, Term term) {
  TruncatedSeries sum(t);
  int last_min = -1;
  for (int n = start; degree_step * n <= t[v]; ++n) {
    TruncatedSeries s = term(n);
    if (!s.is_zero()) {
      int lo = s.terms().begin()->first[v];
      for (const auto& kv : s.terms()) lo = std::min(lo, kv.first[v]);
      if (lo < last_min) throw std::logic_error("partial sum: term degrees not monotone");
      last_min = lo;
    }
    sum = sum + s;
  }
  return sum;
}

void assert_counting(const TruncatedSeries& s, const char* what) {
  if (!s.has_nonnegative_integer_coefficients())
    throw std::logic_error(std::string(what) + ": coefficients are not nonnegative integers");
}

}  // namespace

TruncatedSeries series_J(const Truncation& t) {
  return partial_sum(t, Var::X, 1, 0, [&](int n) {
    auto lead = TruncatedSeries::monomial(t, {n, 0, binom2(n)}, sign(n));
    return lead * recip(q_factorial(n, t)) * recip(pochhammer(1, {1, 0, 1}, n, t));
  });
}

TruncatedSeries series_h(const Truncation& t) {
  return partial_sum(t, Var::X, 1, 0, [&](int n) {
    auto lead = TruncatedSeries::monomial(t, {n, 0, binom2(n)}, sign(n));
    return lead * pochhammer(1, {1, 0, n}, std::nullopt, t) * recip(q_factorial(n, t));
  });
}

TruncatedSeries series_j(const Truncation& t) {
  return partial_sum(t, Var::X, 1, 0, [&](int n) {
    auto lead = TruncatedSeries::monomial(t, {n, 0, binom2(n)}, sign(n));
    return lead * pochhammer(1, {1, 0, n + 1}, std::nullopt, t) * recip(q_factorial(n, t));
  });
}

TruncatedSeries series_cal_J(const Truncation& t) {
  return partial_sum(t, Var::X, 1, 0, [&](int n) {
    auto lead = TruncatedSeries::monomial(t, {n, 0, binom2(n)}, sign((n + 1) / 2));
    return lead * recip(q_factorial(n / 2, t, 2));
  });
}

TruncatedSeries series_frak_h(const Truncation& t) {
  return partial_sum(t, Var::X, 2, 0, [&](int n) {
    auto lead = TruncatedSeries::monomial(t, {2 * n, 0, binom2(2 * n)}, sign(n));
    return lead * recip(q_factorial(n, t, 2));
  });
}

TruncatedSeries series_N(const Truncation& t) {
  return partial_sum(t, Var::Y, 1, 0, [&](int n) {
    auto lead = TruncatedSeries::monomial(t, {0, n, binom2(n + 1)}, sign(n));
    return lead * recip(q_factorial(n, t)) * recip(pochhammer(1, {1, 0, 1}, n, t));
  });
}

TruncatedSeries series_Nhat(const Truncation& t) {
  return partial_sum(t, Var::Y, 1, 1, [&](int n) {
    auto lead = TruncatedSeries::monomial(t, {0, n, binom2(n + 1)}, sign(n));
    return lead * recip(q_factorial(n - 1, t)) * recip(pochhammer(1, {1, 0, 1}, n, t));
  });
}

TruncatedSeries cyclic_correction(const Truncation& t) {
  TruncatedSeries::Terms terms;
  for (int n = 1; n <= t.x; ++n)
    for (int k = 1; n * k <= t.q; ++k) terms[Exponent{n, 0, n * k}] += 1;
  return TruncatedSeries(t, std::move(terms));
}

TruncatedSeries theorem_S(const Truncation& t) {
  TruncatedSeries J = series_J(t);
  TruncatedSeries one_minus_xq(t, {{Exponent{}, Rational(1)}, {Exponent{1, 0, 1}, Rational(-1)}});
  TruncatedSeries s = recip(one_minus_xq) * substitute_scale(J, Var::X, 1) * recip(J);
  assert_counting(s, "theorem_S");
  return s;
}

TruncatedSeries theorem_S_tilde(const Truncation& t) {
  TruncatedSeries s = log_derivative(series_J, Var::X, t) - cyclic_correction(t);
  assert_counting(s, "theorem_S_tilde");
  return s;
}

std::pair<TruncatedSeries, TruncatedSeries> theorem_involutions(const Truncation& t) {
  TruncatedSeries cj = series_cal_J(t);
  TruncatedSeries s = substitute_scale(cj, Var::X, 1, -1) * recip(cj);
  TruncatedSeries st = log_derivative(series_cal_J, Var::X, t);
  assert_counting(s, "theorem_involutions (finite)");
  assert_counting(st, "theorem_involutions (affine)");
  return {s, st};
}

TruncatedSeries walk_series_O(const Truncation& t) {
  return log_derivative(series_h, Var::X, t);
}
TruncatedSeries walk_series_Ostar(const Truncation& t) {
  return log_derivative(series_j, Var::X, t);
}
TruncatedSeries walk_series_Obar(const Truncation& t) {
  return log_derivative(series_frak_h, Var::X, t);
}
TruncatedSeries walk_series_Obarstar(const Truncation& t) {
  return log_derivative(series_cal_J, Var::X, t);
}

TruncatedSeries ppp_series(const Truncation& t) {
  return log_derivative(series_N, Var::Y, t);
}

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = {
      "J", "calJ", "h", "j", "frakh", "N", "Nhat", "S", "Stilde",
      "invS", "invStilde", "O", "Ostar", "Obar", "Obarstar", "PPP"};
  return names;
}

TruncatedSeries named_series(std::string_view name, const Truncation& t) {
  if (name == "J") return series_J(t);
  if (name == "calJ") return series_cal_J(t);
  if (name == "h") return series_h(t);
  if (name == "j") return series_j(t);
  if (name == "frakh") return series_frak_h(t);
  if (name == "N") return series_N(t);
  if (name == "Nhat") return series_Nhat(t);
  if (name == "S") return theorem_S(t);
  if (name == "Stilde") return theorem_S_tilde(t);
  if (name == "invS") return theorem_involutions(t).first;
  if (name == "invStilde") return theorem_involutions(t).second;
  if (name == "O") return walk_series_O(t);
  if (name == "Ostar") return walk_series_Ostar(t);
  if (name == "Obar") return walk_series_Obar(t);
  if (name == "Obarstar") return walk_series_Obarstar(t);
  if (name == "PPP") return ppp_series(t);
  throw Error(ErrorKind::InvalidArgument, "unknown series name '" + std::string(name) + "'");
}

}  // namespace affheaps
