#include <doctest.h>

#include <set>

#include "affine_heaps/error.hpp"
#include "affine_heaps/oracle.hpp"
#include "affine_heaps/qformulas.hpp"

using namespace affheaps;

TEST_CASE("enumerate_fc_elements") {
  auto fin3 = enumerate_fc_elements(3, 6, PermClass::Finite);
  CHECK(fin3.rows == std::map<int, std::int64_t>{{0, 1}, {1, 2}, {2, 2}});
  CHECK(fin3.total() == 5);
  auto aff2 = enumerate_fc_elements(2, 9, PermClass::Affine);
  CHECK(aff2.rows.at(0) == 1);
  for (int l = 1; l <= 9; ++l) CHECK(aff2.rows.at(l) == 2);
  for (PermClass c : {PermClass::Affine, PermClass::Finite, PermClass::AffineInvolution,
                      PermClass::FiniteInvolution})
    CHECK(enumerate_fc_elements(4, 5, c).rows.at(0) == 1);
  CHECK_THROWS_AS(enumerate_fc_elements(1, 3, PermClass::Affine), Error);
  CHECK_THROWS_AS(enumerate_fc_elements(3, -1, PermClass::Affine), Error);
}

TEST_CASE("fc elements are distinct") {
  auto elems = fc_elements(4, 8);
  std::set<AffinePermutation> s(elems.begin(), elems.end());
  CHECK(s.size() == elems.size());
}

TEST_CASE("enumerate_diagrams") {
  for (int n = 2; n <= 5; ++n) {
    auto ds = enumerate_diagrams(n, 8);
    CHECK(std::find(ds.begin(), ds.end(), AlternatingDiagram::empty(n)) != ds.end());
    CHECK(std::set<AlternatingDiagram>(ds.begin(), ds.end()).size() == ds.size());
    std::map<int, std::int64_t> by_size;
    for (const auto& d : ds) ++by_size[size(d)];
    CHECK(by_size == enumerate_fc_elements(n, 8, PermClass::Affine).rows);
  }
  std::set<AlternatingDiagram> images;
  for (const auto& s : fc_elements(2, 2)) images.insert(delta(s));
  auto ds = enumerate_diagrams(2, 2);
  CHECK(images == std::set<AlternatingDiagram>(ds.begin(), ds.end()));
}

TEST_CASE("enumerate_walks") {
  CHECK(enumerate_walks(WalkGraph::G, 0, 4).size() == 5);
  std::vector<Walk> from0;
  for (const Walk& w : enumerate_walks(WalkGraph::G, 2, 6))
    if (w.start == 0) from0.push_back(w);
  const Step l{StepKind::Loop, Label::L}, u{StepKind::Up, Label::None},
      d{StepKind::Down, Label::None};
  std::set<Walk> expected{Walk{0, {l, l}}, Walk{0, {u, d}}};
  CHECK(std::set<Walk>(from0.begin(), from0.end()) == expected);

  Truncation t{4, 0, 7};
  auto o = walk_series_O(t), os = walk_series_Ostar(t);
  for (int len = 1; len <= t.x; ++len) {
    std::map<int, std::int64_t> go, gs;
    for (const Walk& w : enumerate_walks(WalkGraph::GPrime, len, t.q)) ++go[area(w)];
    for (const Walk& w : enumerate_walks(WalkGraph::G, len, t.q)) ++gs[area(w)];
    for (int a = 0; a <= t.q; ++a) {
      CHECK(o.coefficient({len, 0, a}) == (go.count(a) ? go[a] : 0));
      CHECK(os.coefficient({len, 0, a}) == (gs.count(a) ? gs[a] : 0));
    }
  }
}

TEST_CASE("enumerate_ppp") {
  const int max = 6;
  auto w1 = enumerate_ppp(1, max);
  CHECK(w1.size() == static_cast<std::size_t>(max * (max + 1) / 2));
  auto all = enumerate_ppp(5, 26);
  auto target = Ppp::validate(AltSequence::validate({{5, 7}, {7, 7}, {2, 4}, {1, 2}, {2, 6}}));
  CHECK(std::binary_search(all.begin(), all.end(), target));
  CHECK(std::set<Ppp>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("output formats") {
  auto t = enumerate_fc_elements(3, 2, PermClass::Finite);
  CHECK(to_csv(t) == "length,count\n0,1\n1,2\n2,2\n");
  auto j = to_json(t);
  CHECK(j["class"] == "finite");
  CHECK(j["rows"][1]["count"] == 2);
  CHECK(parse_perm_class("affine-involution") == PermClass::AffineInvolution);
  CHECK_THROWS_AS(parse_perm_class("bogus"), Error);
}
