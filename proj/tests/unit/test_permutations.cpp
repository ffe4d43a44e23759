#include <doctest.h>

#include <random>
#include <set>

#include "affine_heaps/error.hpp"
#include "affine_heaps/oracle.hpp"
#include "affine_heaps/permutation.hpp"

using namespace affheaps;

namespace {

AffinePermutation W(int n, std::vector<std::int64_t> v) {
  return AffinePermutation::from_window(n, std::move(v));
}

// Triple scan over a fixed generous range.
bool naive_321_avoiding(const AffinePermutation& s) {
  const int n = s.size();
  for (std::int64_t i = 1 - 3 * n; i <= 4 * n; ++i)
    for (std::int64_t j = i + 1; j <= 4 * n; ++j) {
      if (s(i) <= s(j)) continue;
      for (std::int64_t k = j + 1; k <= 4 * n; ++k)
        if (s(j) > s(k)) return false;
    }
  return true;
}

// Pairs (i, j) with 1 <= i <= n, j > i over a range wide enough for small windows.
std::int64_t naive_inversions(const AffinePermutation& s, std::int64_t reach) {
  std::int64_t c = 0;
  for (std::int64_t i = 1; i <= s.size(); ++i)
    for (std::int64_t j = i + 1; j <= i + reach; ++j) c += s(i) > s(j);
  return c;
}

}  // namespace

TEST_CASE("from_window") {
  CHECK_NOTHROW(W(8, {-6, 13, -4, -1, 0, 14, 19, 1}));
  CHECK_NOTHROW(W(4, {6, -3, -1, 8}));
  try {
    W(3, {1, 1, 4});
    FAIL("expected NotBijective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBijective);
  }
  try {
    W(3, {1, 2, 6});
    FAIL("expected WrongSum");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongSum);
  }
  try {
    W(3, {1, 2});
    FAIL("expected WrongLength");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongLength);
  }
}

TEST_CASE("apply") {
  auto s = W(4, {6, -3, -1, 8});
  CHECK(apply(s, 5) == 10);
  CHECK(apply(s, -3) == 2);
  CHECK(apply(AffinePermutation::identity(3), -7) == -7);
  CHECK(apply(W(4, {0, 2, 3, 5}), 0) == 1);
}

TEST_CASE("group operations") {
  auto s = W(4, {6, -3, -1, 8});
  CHECK(compose(s, inverse(s)) == AffinePermutation::identity(4));
  CHECK(compose(inverse(s), s) == AffinePermutation::identity(4));
  CHECK(AffinePermutation::generator(4, 1).window() == std::vector<std::int64_t>{2, 1, 3, 4});
  CHECK(AffinePermutation::generator(4, 0).window() == std::vector<std::int64_t>{0, 2, 3, 5});
  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i < n; ++i) {
      auto g = AffinePermutation::generator(n, i);
      CHECK(compose(g, g) == AffinePermutation::identity(n));
      CHECK(is_involution(g));
      CHECK(reduced_word(g) == ReducedWord{{i}});
      CHECK(times_generator(AffinePermutation::identity(n), i) == g);
    }
  CHECK_THROWS_AS(compose(s, AffinePermutation::identity(3)), Error);
  auto a = W(4, {6, -3, -1, 8}), b = AffinePermutation::generator(4, 0), c = W(4, {2, 1, 4, 3});
  CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("inversion_number") {
  CHECK(inversion_number(AffinePermutation::identity(5)) == 0);
  CHECK(inversion_number(W(8, {-6, 13, -4, -1, 0, 14, 19, 1})) == 31);
  auto s = W(4, {6, -3, -1, 8});
  CHECK(inversion_number(s) == 9);
  CHECK(naive_inversions(s, 60) == 9);
  CHECK(naive_inversions(W(8, {-6, 13, -4, -1, 0, 14, 19, 1}), 200) == 31);
}

TEST_CASE("reduced_word") {
  CHECK(reduced_word(AffinePermutation::identity(3)).letters.empty());
  auto s = W(4, {6, -3, -1, 8});
  auto w = reduced_word(s);
  CHECK(w.length() == 9);
  CHECK(word_product(4, w) == s);
}

TEST_CASE("321 avoidance") {
  CHECK(is_321_avoiding(AffinePermutation::identity(4)));
  CHECK(is_321_avoiding(W(4, {6, -3, -1, 8})));
  CHECK_FALSE(is_321_avoiding(W(3, {3, 2, 1})));
  CHECK(is_321_avoiding(W(8, {-6, 13, -4, -1, 0, 14, 19, 1})));
}

TEST_CASE("involution and finite") {
  CHECK_FALSE(is_finite(W(8, {-6, 13, -4, -1, 0, 14, 19, 1})));
  CHECK(is_involution(W(3, {2, 1, 3})));
  CHECK(is_finite(W(3, {2, 1, 3})));
  CHECK_FALSE(is_involution(W(3, {2, 3, 1})));
}

TEST_CASE("n = 1") {
  auto e = AffinePermutation::identity(1);
  CHECK(inversion_number(e) == 0);
  CHECK(is_321_avoiding(e));
  CHECK(W(1, {1}) == e);
}

TEST_CASE("exhaustive properties on words") {
  // All products of up to 6 generators for n = 3, 4: the two 321 tests agree with the naive scan.
  for (int n = 3; n <= 4; ++n) {
    std::vector<AffinePermutation> frontier{AffinePermutation::identity(n)};
    std::set<AffinePermutation> seen(frontier.begin(), frontier.end());
    for (int step = 0; step < 6; ++step) {
      std::vector<AffinePermutation> next;
      for (const auto& s : frontier)
        for (int i = 0; i < n; ++i) {
          auto v = times_generator(s, i);
          if (seen.insert(v).second) next.push_back(v);
        }
      frontier = std::move(next);
    }
    for (const auto& s : seen) {
      const bool naive = naive_321_avoiding(s);
      CHECK(is_321_avoiding_by_pattern(s) == naive);
      CHECK(is_321_avoiding_by_alternation(s) == naive);
      CHECK(reduced_word(s).length() == static_cast<std::size_t>(inversion_number(s)));
      CHECK(inversion_number(inverse(s)) == inversion_number(s));
      CHECK(naive_inversions(s, 12 * n) == inversion_number(s));
    }
  }
}

TEST_CASE("Shi lengths over FC elements") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& s : fc_elements(n, n <= 4 ? 10 : 7)) {
      CHECK(word_product(n, reduced_word(s)) == s);
      CHECK(alternates(reduced_word(s), n));
    }
}

TEST_CASE("text and JSON") {
  auto s = W(4, {6, -3, -1, 8});
  CHECK(to_string(s) == "[6,-3,-1,8]");
  CHECK(parse_window("[6, -3, -1, 8]") == s);
  CHECK(permutation_from_json(to_json(s)) == s);
  CHECK(to_json(s)["n"] == 4);
  CHECK_THROWS_AS(parse_window("[1,2"), Error);
}
