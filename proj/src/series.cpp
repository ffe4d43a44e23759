#include "affine_heaps/series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "affine_heaps/error.hpp"

namespace affheaps {

int& Exponent::operator[](Var v) {
  return v == Var::X ? x : (v == Var::Y ? y : q);
}
int Exponent::operator[](Var v) const {
  return v == Var::X ? x : (v == Var::Y ? y : q);
}
int& Truncation::operator[](Var v) {
  return v == Var::X ? x : (v == Var::Y ? y : q);
}
int Truncation::operator[](Var v) const {
  return v == Var::X ? x : (v == Var::Y ? y : q);
}

Truncation Truncation::meet(const Truncation& a, const Truncation& b) {
  return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.q, b.q)};
}

namespace {

// Dense accumulator over the box [0,X]x[0,Y]x[0,Q].
class Box {
 public:
  explicit Box(const Truncation& t)
      : t_(t),
        nx_(std::max(t.x + 1, 0)),
        ny_(std::max(t.y + 1, 0)),
        nq_(std::max(t.q + 1, 0)),
        cells_(static_cast<std::size_t>(nx_) * ny_ * nq_) {}

  bool empty() const { return cells_.empty(); }
  Rational& at(const Exponent& e) {
    return cells_[(static_cast<std::size_t>(e.x) * ny_ + e.y) * nq_ + e.q];
  }

  // All exponents of the box in increasing total degree.
  std::vector<Exponent> by_total_degree() const {
    std::vector<Exponent> out;
    out.reserve(cells_.size());
    for (int x = 0; x < nx_; ++x)
      for (int y = 0; y < ny_; ++y)
        for (int q = 0; q < nq_; ++q) out.push_back({x, y, q});
    std::stable_sort(out.begin(), out.end(),
                     [](const Exponent& a, const Exponent& b) { return a.total() < b.total(); });
    return out;
  }

  TruncatedSeries::Terms collect() const {
    TruncatedSeries::Terms terms;
    for (int x = 0; x < nx_; ++x)
      for (int y = 0; y < ny_; ++y)
        for (int q = 0; q < nq_; ++q) {
          const Rational& c = cells_[(static_cast<std::size_t>(x) * ny_ + y) * nq_ + q];
          if (c != 0) terms.emplace_hint(terms.end(), Exponent{x, y, q}, c);
        }
    return terms;
  }

 private:
  Truncation t_;
  int nx_, ny_, nq_;
  std::vector<Rational> cells_;
};

}  // namespace

TruncatedSeries::TruncatedSeries(Truncation t) : trunc_(t) {}

TruncatedSeries::TruncatedSeries(Truncation t, Terms terms) : trunc_(t) {
  for (auto& [e, c] : terms) {
    if (e.x < 0 || e.y < 0 || e.q < 0)
      throw Error(ErrorKind::NegativeExponent, "negative exponent in series term");
    if (c != 0 && t.fits(e)) terms_.emplace_hint(terms_.end(), e, std::move(c));
  }
}

TruncatedSeries TruncatedSeries::one(Truncation t) { return monomial(t, {}, 1); }

TruncatedSeries TruncatedSeries::monomial(Truncation t, Exponent e, const Rational& c) {
  Terms terms;
  terms.emplace(e, c);
  return TruncatedSeries(t, std::move(terms));
}

Rational TruncatedSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::truncated(const Truncation& t) const {
  Truncation m = Truncation::meet(trunc_, t);
  Terms terms;
  for (const auto& [e, c] : terms_)
    if (m.fits(e)) terms.emplace_hint(terms.end(), e, c);
  return TruncatedSeries(m, std::move(terms));
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  Terms terms;
  if (c != 0)
    for (const auto& [e, v] : terms_) terms.emplace_hint(terms.end(), e, v * c);
  return TruncatedSeries(trunc_, std::move(terms));
}

TruncatedSeries TruncatedSeries::shifted(const Exponent& s) const {
  Truncation t{trunc_.x + s.x, trunc_.y + s.y, trunc_.q + s.q};
  Terms terms;
  for (const auto& [e, c] : terms_) terms.emplace(e + s, c);
  return TruncatedSeries(t, std::move(terms));
}

TruncatedSeries TruncatedSeries::x_slice(int a) const {
  Truncation t{0, trunc_.y, trunc_.q};
  if (a > trunc_.x) t.x = -1;
  Terms terms;
  for (const auto& [e, c] : terms_)
    if (e.x == a) terms.emplace(Exponent{0, e.y, e.q}, c);
  return TruncatedSeries(t, std::move(terms));
}

bool TruncatedSeries::has_nonnegative_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return kv.second.get_den() == 1 && kv.second > 0;
  });
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  Truncation t = Truncation::meet(a.trunc(), b.trunc());
  TruncatedSeries::Terms terms;
  for (const auto& [e, c] : a.terms())
    if (t.fits(e)) terms.emplace_hint(terms.end(), e, c);
  for (const auto& [e, c] : b.terms())
    if (t.fits(e)) terms[e] += c;
  return TruncatedSeries(t, std::move(terms));
}

TruncatedSeries operator-(const TruncatedSeries& a) { return a.scaled(-1); }

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  Truncation t = Truncation::meet(a.trunc(), b.trunc());
  Box box(t);
  if (box.empty()) return TruncatedSeries(t);
  for (const auto& [ea, ca] : a.terms()) {
    if (!t.fits(ea)) continue;
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e = ea + eb;
      if (t.fits(e)) box.at(e) += ca * cb;
    }
  }
  return TruncatedSeries(t, box.collect());
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries recip(const TruncatedSeries& a) {
  if (Box(a.trunc()).empty()) return TruncatedSeries(a.trunc());
  if (a.constant_term() != 1)
    throw Error(ErrorKind::NonUnitConstantTerm,
                "constant term is " + a.constant_term().get_str() + ", expected 1");
  const Truncation& t = a.trunc();
  Box box(t);
  if (box.empty()) return TruncatedSeries(t);
  std::vector<std::pair<Exponent, Rational>> nonconst;
  for (const auto& [e, c] : a.terms())
    if (e != Exponent{}) nonconst.emplace_back(e, c);
  for (const Exponent& e : box.by_total_degree()) {
    if (e == Exponent{}) {
      box.at(e) = 1;
      continue;
    }
    Rational s = 0;
    for (const auto& [ea, ca] : nonconst) {
      if (ea.x > e.x || ea.y > e.y || ea.q > e.q) continue;
      s += ca * box.at(e - ea);
    }
    box.at(e) = -s;
  }
  return TruncatedSeries(t, box.collect());
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * recip(b);
}

TruncatedSeries derivative(const TruncatedSeries& a, Var v) {
  Truncation t = a.trunc();
  t[v] = std::max(t[v] - 1, -1);
  TruncatedSeries::Terms terms;
  for (const auto& [e, c] : a.terms()) {
    if (e[v] == 0) continue;
    Exponent d = e;
    d[v] -= 1;
    terms.emplace(d, c * e[v]);
  }
  return TruncatedSeries(t, std::move(terms));
}

TruncatedSeries substitute_scale(const TruncatedSeries& a, Var v, int k, const Rational& factor) {
  if (v == Var::Q) throw Error(ErrorKind::InvalidArgument, "cannot rescale q by a power of q");
  Truncation t = a.trunc();
  if (k < 0) t.q = std::max(t.q + k * std::max(t[v], 0), -1);
  TruncatedSeries::Terms terms;
  for (const auto& [e, c] : a.terms()) {
    Exponent d = e;
    d.q += k * e[v];
    if (d.q < 0)
      throw Error(ErrorKind::NegativeExponent, "substitution produces a negative power of q");
    Rational coeff = c;
    if (factor != 1) {
      mpq_class p = 1;
      for (int i = 0; i < e[v]; ++i) p *= factor;
      coeff *= p;
    }
    if (t.fits(d)) terms.emplace(d, coeff);
  }
  return TruncatedSeries(t, std::move(terms));
}

TruncatedSeries substitute_y_as_x(const TruncatedSeries& a, int k) {
  const Truncation& s = a.trunc();
  Truncation t{std::min(s.x, s.y), s.y, s.q};
  if (k < 0) t.q = std::max(s.q + k * std::max(t.x, 0), -1);
  TruncatedSeries::Terms terms;
  for (const auto& [e, c] : a.terms()) {
    Exponent d{e.x + e.y, 0, e.q + k * e.y};
    if (d.q < 0)
      throw Error(ErrorKind::NegativeExponent, "substitution produces a negative power of q");
    if (t.fits(d)) terms[d] += c;
  }
  return TruncatedSeries(t, std::move(terms));
}

TruncatedSeries pochhammer(const Rational& c, const Exponent& m, std::optional<int> n,
                           const Truncation& t, int step) {
  if (n && *n < 0) throw Error(ErrorKind::InvalidArgument, "negative Pochhammer length");
  if (step <= 0) throw Error(ErrorKind::InvalidArgument, "Pochhammer step must be positive");
  if (!n && m.x == 0 && m.y == 0 && m.q == 0)
    throw Error(ErrorKind::DivergentInfiniteProduct, "infinite product of a constant factor");
  TruncatedSeries result = TruncatedSeries::one(t);
  for (int k = 0; !n || k < *n; ++k) {
    Exponent e{m.x, m.y, m.q + k * step};
    if (!t.fits(e)) {
      // Factors only move further out of the box from here on.
      break;
    }
    TruncatedSeries factor(t, {{Exponent{}, Rational(1)}, {e, Rational(-c)}});
    result = result * factor;
  }
  return result;
}

bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
  Truncation t = Truncation::meet(a.trunc(), b.trunc());
  return a.truncated(t) == b.truncated(t);
}

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = e.x || e.y || e.q;
    if (mag != 1 || !has_var) out << mag.get_str() << (has_var ? "*" : "");
    const char* sep = "";
    auto var = [&](const char* name, int p) {
      if (p == 0) return;
      out << sep << name;
      if (p > 1) out << "^" << p;
      sep = "*";
    };
    var("x", e.x);
    var("y", e.y);
    var("q", e.q);
  }
  return out.str();
}

nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) {
    nlohmann::json term;
    term["x"] = e.x;
    term["y"] = e.y;
    term["q"] = e.q;
    // Numerators stay exact even past 64 bits.
    if (c.get_num().fits_slong_p()) {
      term["num"] = c.get_num().get_si();
    } else {
      term["num"] = c.get_num().get_str();
    }
    if (c.get_den().fits_slong_p()) {
      term["den"] = c.get_den().get_si();
    } else {
      term["den"] = c.get_den().get_str();
    }
    terms.push_back(std::move(term));
  }
  const Truncation& t = s.trunc();
  return {{"trunc", {t.x, t.y, t.q}}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  try {
    const auto& tr = j.at("trunc");
    Truncation t{tr.at(0).get<int>(), tr.at(1).get<int>(), tr.at(2).get<int>()};
    TruncatedSeries::Terms terms;
    auto big = [](const nlohmann::json& v) {
      return v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>());
    };
    for (const auto& term : j.at("terms")) {
      Exponent e{term.at("x").get<int>(), term.at("y").get<int>(), term.at("q").get<int>()};
      Rational c(big(term.at("num")), big(term.at("den")));
      c.canonicalize();
      terms[e] += c;
    }
    return TruncatedSeries(t, std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad series JSON: ") + ex.what());
  }
}

}  // namespace affheaps
