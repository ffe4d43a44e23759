#include <doctest.h>

#include <random>

#include "affine_heaps/error.hpp"
#include "affine_heaps/series.hpp"

using namespace affheaps;

namespace {

TruncatedSeries poly(Truncation t, std::initializer_list<std::pair<Exponent, long>> terms) {
  TruncatedSeries::Terms m;
  for (auto& [e, c] : terms) m[e] += c;
  return TruncatedSeries(t, m);
}

TruncatedSeries random_series(std::mt19937& rng, Truncation t, bool unit) {
  TruncatedSeries::Terms m;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int x = 0; x <= t.x; ++x)
    for (int y = 0; y <= t.y; ++y)
      for (int q = 0; q <= t.q; ++q)
        if (rng() % 3 == 0) m[Exponent{x, y, q}] = coef(rng);
  if (unit) m[Exponent{}] = 1;
  return TruncatedSeries(t, m);
}

}  // namespace

TEST_CASE("add") {
  Truncation t{3, 0, 3};
  auto one = TruncatedSeries::one(t);
  CHECK((one + (-one)).is_zero());
  CHECK((one + (-one)).terms().empty());
  auto s = poly(t, {{{1, 0, 0}, 1}, {{1, 0, 1}, 1}});
  CHECK(s.terms().size() == 2);
  CHECK(s.coefficient({1, 0, 0}) == 1);
  CHECK(s.coefficient({1, 0, 1}) == 1);
  auto x = TruncatedSeries::monomial(t, {1, 0, 0});
  CHECK((one - x) + x == one);
}

TEST_CASE("mul") {
  Truncation t{3, 0, 3};
  auto x = TruncatedSeries::monomial(t, {1, 0, 0});
  auto xq = TruncatedSeries::monomial(t, {1, 0, 1});
  auto one = TruncatedSeries::one(t);
  CHECK((one - x) * (one - xq) ==
        poly(t, {{{0, 0, 0}, 1}, {{1, 0, 0}, -1}, {{1, 0, 1}, -1}, {{2, 0, 1}, 1}}));
  Truncation t1{1, 0, 3};
  auto x1 = TruncatedSeries::monomial(t1, {1, 0, 0});
  CHECK((x1 * x1).is_zero());
  Truncation tq{0, 0, 2};
  auto a = poly(tq, {{{0, 0, 0}, 1}, {{0, 0, 1}, 1}, {{0, 0, 2}, 1}});
  auto b = poly(tq, {{{0, 0, 0}, 1}, {{0, 0, 1}, 1}});
  CHECK(a * b == poly(tq, {{{0, 0, 0}, 1}, {{0, 0, 1}, 2}, {{0, 0, 2}, 2}}));
}

TEST_CASE("recip") {
  Truncation t{2, 0, 3};
  auto one = TruncatedSeries::one(t);
  CHECK(recip(one) == one);
  Truncation tq{0, 0, 3};
  auto g = recip(TruncatedSeries::one(tq) - TruncatedSeries::monomial(tq, {0, 0, 1}));
  CHECK(g == poly(tq, {{{0, 0, 0}, 1}, {{0, 0, 1}, 1}, {{0, 0, 2}, 1}, {{0, 0, 3}, 1}}));
  auto a = one - TruncatedSeries::monomial(t, {1, 0, 0}) - TruncatedSeries::monomial(t, {1, 0, 1});
  CHECK(a * recip(a) == one);
  CHECK_THROWS_AS(recip(TruncatedSeries::monomial(t, {}, 2)), Error);
  try {
    recip(TruncatedSeries::zero(t));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitConstantTerm);
  }
}

TEST_CASE("derivative") {
  Truncation t{3, 1, 3};
  auto d = derivative(TruncatedSeries::monomial(t, {2, 0, 1}), Var::X);
  CHECK(d.coefficient({1, 0, 1}) == 2);
  CHECK(d.terms().size() == 1);
  CHECK(d.trunc().x == 2);
  CHECK(derivative(TruncatedSeries::one(t), Var::Y).is_zero());
  Truncation tq{0, 0, 3};
  auto g = recip(TruncatedSeries::one(tq) - TruncatedSeries::monomial(tq, {0, 0, 1}));
  auto dg = derivative(g, Var::Q);
  CHECK(dg == poly(dg.trunc(), {{{0, 0, 0}, 1}, {{0, 0, 1}, 2}, {{0, 0, 2}, 3}}));
}

TEST_CASE("substitute_scale") {
  Truncation t{3, 2, 6};
  auto x2 = TruncatedSeries::monomial(t, {2, 0, 0});
  CHECK(substitute_scale(x2, Var::X, 1).coefficient({2, 0, 2}) == 1);
  auto yq = TruncatedSeries::monomial(t, {0, 1, 1});
  auto r = substitute_y_as_x(yq, -1);
  CHECK(r.terms().size() == 1);
  CHECK(r.coefficient({1, 0, 0}) == 1);
  try {
    substitute_y_as_x(TruncatedSeries::monomial(t, {0, 1, 0}), -1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeExponent);
  }
  std::mt19937 rng(7);
  for (int k = 0; k < 10; ++k) {
    auto a = random_series(rng, Truncation{2, 1, 8}, false);
    auto up = substitute_scale(a, Var::X, 2);
    auto back = substitute_scale(up, Var::X, -2);
    CHECK(agree(back, a));
  }
}

TEST_CASE("pochhammer") {
  Truncation t{3, 0, 6};
  CHECK(pochhammer(1, {1, 0, 0}, 0, t) == TruncatedSeries::one(t));
  Truncation tq{0, 0, 6};
  CHECK(pochhammer(1, {0, 0, 1}, 2, tq) ==
        poly(tq, {{{0, 0, 0}, 1}, {{0, 0, 1}, -1}, {{0, 0, 2}, -1}, {{0, 0, 3}, 1}}));
  Truncation t13{1, 0, 3};
  CHECK(pochhammer(1, {1, 0, 1}, std::nullopt, t13) ==
        poly(t13, {{{0, 0, 0}, 1}, {{1, 0, 1}, -1}, {{1, 0, 2}, -1}, {{1, 0, 3}, -1}}));
  try {
    pochhammer(1, {0, 0, 0}, std::nullopt, t);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivergentInfiniteProduct);
  }
}

TEST_CASE("ring properties on random series") {
  std::mt19937 rng(11);
  Truncation t{2, 1, 5};
  for (int k = 0; k < 20; ++k) {
    auto a = random_series(rng, t, false), b = random_series(rng, t, false),
         c = random_series(rng, t, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    auto u = random_series(rng, t, true);
    CHECK(u * recip(u) == TruncatedSeries::one(t));
    auto lhs = derivative(a * b, Var::Q);
    auto rhs = a.truncated(lhs.trunc()) * derivative(b, Var::Q) + b.truncated(lhs.trunc()) * derivative(a, Var::Q);
    CHECK(agree(lhs, rhs));
  }
}

TEST_CASE("json round trip") {
  Truncation t{2, 1, 4};
  auto a = poly(t, {{{0, 0, 0}, 1}, {{1, 1, 2}, -7}});
  auto j = to_json(a);
  CHECK(j["trunc"] == nlohmann::json::array({2, 1, 4}));
  CHECK(series_from_json(j) == a);
  CHECK(series_from_json(j).trunc() == t);
}
