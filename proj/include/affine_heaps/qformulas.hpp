#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affine_heaps/series.hpp"

namespace affheaps {

// Defining q-series. Bounds in unused variables are ignored.
TruncatedSeries series_J(const Truncation& t);
TruncatedSeries series_h(const Truncation& t);
TruncatedSeries series_j(const Truncation& t);
TruncatedSeries series_cal_J(const Truncation& t);
TruncatedSeries series_frak_h(const Truncation& t);
TruncatedSeries series_N(const Truncation& t);
TruncatedSeries series_Nhat(const Truncation& t);

// -v * d/dv f / f, with f built one degree higher in v so the result is exact at t.
template <class Builder>
TruncatedSeries log_derivative(Builder&& build, Var v, const Truncation& t) {
  Truncation up = t;
  up[v] += 1;
  TruncatedSeries f = build(up);
  Exponent shift;
  shift[v] = 1;
  TruncatedSeries num = derivative(f, v).shifted(shift).truncated(t);
  return -(num * recip(f.truncated(t)));
}

// Sum over n >= 1 of x^n q^n / (1 - q^n), expanded termwise.
TruncatedSeries cyclic_correction(const Truncation& t);

// [x^{n-1} q^l] counts 321-avoiding permutations of S_n by length.
TruncatedSeries theorem_S(const Truncation& t);
// [x^n q^l] counts 321-avoiding affine permutations of rank n by length.
TruncatedSeries theorem_S_tilde(const Truncation& t);
// (involution analogue of S, involution analogue of S_tilde), same indexing.
std::pair<TruncatedSeries, TruncatedSeries> theorem_involutions(const Truncation& t);

TruncatedSeries walk_series_O(const Truncation& t);
TruncatedSeries walk_series_Ostar(const Truncation& t);
TruncatedSeries walk_series_Obar(const Truncation& t);
TruncatedSeries walk_series_Obarstar(const Truncation& t);

// PPP generating function in closed form: -y d/dy N / N.
TruncatedSeries ppp_series(const Truncation& t);

const std::vector<std::string>& series_names();
// Throws Error(InvalidArgument) for an unknown name.
TruncatedSeries named_series(std::string_view name, const Truncation& t);

}  // namespace affheaps
