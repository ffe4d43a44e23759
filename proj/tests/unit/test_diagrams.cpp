#include <doctest.h>

#include "affine_heaps/diagram.hpp"
#include "affine_heaps/error.hpp"
#include "affine_heaps/oracle.hpp"

using namespace affheaps;

namespace {

ErrorKind kind_of(int n, std::vector<int> cols, std::map<int, ChainType> types) {
  try {
    AlternatingDiagram::validate(n, std::move(cols), std::move(types));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("validate") {
  using enum ChainType;
  CHECK(kind_of(4, {1, 1, 1, 1}, {{0, R}, {1, R}, {2, R}, {3, R}}) == ErrorKind::ExcludedUniformR);
  CHECK(kind_of(4, {1, 1, 1, 1}, {{0, L}, {1, L}, {2, L}, {3, L}}) == ErrorKind::ExcludedUniformL);
  CHECK(kind_of(4, {0, 2, 1, 0}, {}) == ErrorKind::NotAlternating);
  CHECK(kind_of(4, {2, 1, 2, 1}, {{0, L}}) == ErrorKind::ChainTypeDomainMismatch);
  CHECK(kind_of(4, {1, 1, 0, 0}, {}) == ErrorKind::ChainTypeDomainMismatch);
  auto e = AlternatingDiagram::validate(4, {0, 0, 0, 0}, {});
  CHECK(e == AlternatingDiagram::empty(4));
  auto d = AlternatingDiagram::validate(4, {2, 1, 2, 1}, {});
  CHECK(d.chain_types().empty());
  CHECK(size(d) == 6);
  CHECK_NOTHROW(AlternatingDiagram::validate(4, {1, 1, 1, 1}, {{0, L}, {1, R}, {2, R}, {3, R}}));
}

TEST_CASE("delta") {
  CHECK(delta(AffinePermutation::identity(5)) == AlternatingDiagram::empty(5));
  auto big = AffinePermutation::from_window(8, {-6, 13, -4, -1, 0, 14, 19, 1});
  auto d = delta(big);
  CHECK(size(d) == 31);
  CHECK_FALSE(is_finite(d));
  CHECK(delta_inverse(d) == big);
  auto s = AffinePermutation::from_window(4, {6, -3, -1, 8});
  CHECK(size(delta(s)) == 9);
  CHECK(delta_inverse(delta(s)) == s);
  try {
    delta(AffinePermutation::from_window(3, {3, 2, 1}));
    FAIL("expected NotFullyCommutative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFullyCommutative);
  }
}

TEST_CASE("delta_inverse") {
  CHECK(delta_inverse(AlternatingDiagram::empty(3)) == AffinePermutation::identity(3));
  for (int n = 2; n <= 5; ++n)
    for (const auto& d : enumerate_diagrams(n, 8)) {
      auto s = delta_inverse(d);
      CHECK(delta(s) == d);
      CHECK(word_product(n, linear_extension(d, ExtensionOrder::ByColumn)) ==
            word_product(n, linear_extension(d, ExtensionOrder::ByLevel)));
      CHECK(inversion_number(s) == size(d));
      CHECK(is_finite(s) == is_finite(d));
      CHECK(is_involution(s) == is_self_dual(d));
    }
}

TEST_CASE("delta over FC elements") {
  for (int n = 2; n <= 5; ++n) {
    auto elems = fc_elements(n, 8);
    CHECK(elems.size() == enumerate_diagrams(n, 8).size());
    for (const auto& s : elems) CHECK(delta_inverse(delta(s)) == s);
  }
}

TEST_CASE("size, finite, self-dual") {
  auto e = AlternatingDiagram::empty(4);
  CHECK(size(e) == 0);
  CHECK(is_finite(e));
  CHECK(is_self_dual(e));
  auto sd = AlternatingDiagram::validate(8, {0, 1, 2, 3, 4, 3, 2, 1}, {});
  CHECK(size(sd) == 16);
  CHECK(is_self_dual(sd));
  CHECK(is_involution(delta_inverse(sd)));
  using enum ChainType;
  auto d = AlternatingDiagram::validate(3, {1, 1, 0}, {{0, L}});
  CHECK_FALSE(is_self_dual(d));
  CHECK(dual(d).chain_types().at(0) == R);
  CHECK(dual(dual(d)) == d);
}

TEST_CASE("JSON") {
  using enum ChainType;
  auto d = AlternatingDiagram::validate(3, {1, 1, 0}, {{0, L}});
  auto j = to_json(d);
  CHECK(j["types"]["0"] == "L");
  CHECK(diagram_from_json(j) == d);
}
