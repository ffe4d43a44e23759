#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace affheaps {

using Rational = mpq_class;

enum class Var { X, Y, Q };

struct Exponent {
  int x = 0;
  int y = 0;
  int q = 0;

  int& operator[](Var v);
  int operator[](Var v) const;
  int total() const { return x + y + q; }

  friend Exponent operator+(Exponent a, const Exponent& b) {
    a.x += b.x;
    a.y += b.y;
    a.q += b.q;
    return a;
  }
  friend Exponent operator-(Exponent a, const Exponent& b) {
    a.x -= b.x;
    a.y -= b.y;
    a.q -= b.q;
    return a;
  }
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

// Per-variable truncation. A bound of -1 keeps nothing in that variable.
struct Truncation {
  int x = 0;
  int y = 0;
  int q = 0;

  int& operator[](Var v);
  int operator[](Var v) const;
  bool contains(const Exponent& e) const {
    return e.x >= 0 && e.y >= 0 && e.q >= 0 && e.x <= x && e.y <= y && e.q <= q;
  }
  bool fits(const Exponent& e) const { return e.x <= x && e.y <= y && e.q <= q; }
  static Truncation meet(const Truncation& a, const Truncation& b);
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

class TruncatedSeries {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit TruncatedSeries(Truncation t = {});
  TruncatedSeries(Truncation t, Terms terms);

  static TruncatedSeries zero(Truncation t) { return TruncatedSeries(t); }
  static TruncatedSeries one(Truncation t);
  static TruncatedSeries monomial(Truncation t, Exponent e, const Rational& c = 1);

  const Truncation& trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const { return coefficient({}); }

  // Same coefficients restricted to a smaller box.
  TruncatedSeries truncated(const Truncation& t) const;
  TruncatedSeries scaled(const Rational& c) const;
  // Multiply by x^a y^b q^d; bounds are raised by the same amounts.
  TruncatedSeries shifted(const Exponent& e) const;
  // Coefficient of x^a as a series in (y, q).
  TruncatedSeries x_slice(int a) const;

  bool has_nonnegative_integer_coefficients() const;

  // Coefficient maps compared; truncation bounds are not part of equality.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Truncation trunc_;
  Terms terms_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries recip(const TruncatedSeries& a);
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries derivative(const TruncatedSeries& a, Var v);

// var -> factor * var * q^k for var in {x, y}.
TruncatedSeries substitute_scale(const TruncatedSeries& a, Var v, int k,
                                 const Rational& factor = 1);
// y -> x * q^k.
TruncatedSeries substitute_y_as_x(const TruncatedSeries& a, int k);

// (c * x^a y^b q^d ; q^step)_n, with n = nullopt meaning the infinite product.
TruncatedSeries pochhammer(const Rational& c, const Exponent& m, std::optional<int> n,
                           const Truncation& t, int step = 1);

// Compare on the common box; true iff all retained coefficients agree.
bool agree(const TruncatedSeries& a, const TruncatedSeries& b);

std::string to_string(const TruncatedSeries& s);
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace affheaps
