#include <doctest.h>

#include "affine_heaps/error.hpp"
#include "affine_heaps/oracle.hpp"
#include "affine_heaps/ppp.hpp"
#include "affine_heaps/qformulas.hpp"

using namespace affheaps;

namespace {

Segment seg(int a, int b) { return {a, b, Label::None}; }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::InvalidArgument;
}

std::vector<Heap> small_heaps(int max_b, int max_pieces) {
  std::vector<Heap> out;
  for_each_heap<Segment>(segment_universe(max_b), Truncation{100, max_pieces, 1000},
                         [&](const Heap& h, const Exponent&) { out.push_back(h); });
  return out;
}

}  // namespace

TEST_CASE("AltSequence") {
  CHECK(kind_of([] { AltSequence::validate({{3, 2}}); }) == ErrorKind::InvalidSequence);
  CHECK(kind_of([] { AltSequence::validate({{1, 2}, {3, 4}}); }) == ErrorKind::InvalidSequence);
  CHECK(kind_of([] { AltSequence::validate({{0, 2}}); }) == ErrorKind::InvalidSequence);
  auto s = AltSequence::validate({{2, 5}, {5, 7}, {3, 7}, {1, 2}, {1, 1}});
  CHECK(s.width() == 5);
  CHECK_FALSE(s.wraps());
  CHECK(kind_of([&] { Ppp::validate(s); }) == ErrorKind::InvalidSequence);
  CHECK(kind_of([] { Ppp::validate(AltSequence{}); }) == ErrorKind::InvalidSequence);
}

TEST_CASE("f") {
  CHECK(f_to_heap(AltSequence{}).empty());
  CHECK(f_inverse(Heap{}) == AltSequence{});
  auto s = AltSequence::validate({{2, 5}, {5, 7}, {3, 7}, {1, 2}, {1, 1}});
  Heap h = f_to_heap(s);
  CHECK(h == Heap::from_pieces({seg(1, 1), seg(1, 2), seg(3, 7), seg(5, 7), seg(2, 5)}));
  CHECK(h.size() == 5);
  CHECK(f_inverse(h) == s);
  CHECK(minima(h).front() == seg(1, 1));
  auto p = AltSequence::validate({{5, 7}, {7, 7}, {2, 4}, {1, 2}, {2, 6}});
  Heap hp = f_to_heap(p);
  CHECK(f_inverse(hp) == p);
  CHECK(in_H_tilde(hp));
  CHECK(maxima(hp).back() == seg(5, 7));
}

TEST_CASE("f exhaustive") {
  for (const Heap& h : small_heaps(5, 4)) {
    AltSequence s = f_inverse(h);
    CHECK(f_to_heap(s) == h);
    CHECK(in_H_tilde(h) == (h.empty() || s.wraps()));
    CHECK(half_turn(f_to_heap(s)) == f_to_heap(half_turn(s)));
    CHECK(half_turn(half_turn(h)) == h);
  }
  CHECK(in_H_tilde(Heap{}));
  CHECK(in_H_tilde(Heap::from_pieces({seg(2, 4)})));
}

TEST_CASE("statistics") {
  CHECK(statistics(Ppp::validate(AltSequence::validate({{1, 1}}))) == PppStatistics{1, 0, 1});
  auto p = Ppp::validate(AltSequence::validate({{5, 7}, {7, 7}, {2, 4}, {1, 2}, {2, 6}}));
  CHECK(statistics(p) == PppStatistics{5, 9, 26});
  CHECK(ppp_weight(p) == Exponent{9, 5, 26});
  CHECK(segment_weight(f_to_heap(p.seq())) == ppp_weight(p));
  auto rect = Ppp::validate(AltSequence::validate({{3, 3}, {3, 3}, {3, 3}}));
  CHECK(statistics(rect) == PppStatistics{3, 0, 9});
  CHECK(is_rectangular(rect));
  CHECK_FALSE(is_rectangular(p));
}

TEST_CASE("marked PPP and diagrams") {
  auto cell = MarkedPpp::validate(Ppp::validate(AltSequence::validate({{1, 1}})), 1);
  auto d = marked_ppp_to_diagram(cell);
  CHECK(d.rank() == 1);
  CHECK(size(d) == 0);
  auto rect = Ppp::validate(AltSequence::validate({{2, 2}, {2, 2}}));
  CHECK(kind_of([&] { marked_ppp_to_diagram(MarkedPpp::validate(rect, 2)); }) ==
        ErrorKind::RectangularPpp);
  CHECK(kind_of([&] { MarkedPpp::validate(rect, 3); }) == ErrorKind::InvalidSequence);

  auto p = Ppp::validate(AltSequence::validate({{5, 7}, {7, 7}, {2, 4}, {1, 2}, {2, 6}}));
  for (int j = 5; j <= 7; ++j) {
    auto mp = MarkedPpp::validate(p, j);
    auto dd = marked_ppp_to_diagram(mp);
    CHECK(dd.rank() == 5 + 9);
    CHECK(size(dd) == 26 - 5);
    CHECK(diagram_to_marked_ppp(dd) == mp);
  }

  // Rank n diagrams of size s correspond to marked PPPs with width + height = n and area = s + width.
  for (int n = 1; n <= 5; ++n) {
    const int max_size = 7;
    std::set<MarkedPpp> images;
    for (const auto& dg : enumerate_diagrams(n, max_size)) {
      auto mp = diagram_to_marked_ppp(dg);
      auto st = statistics(mp.ppp);
      CHECK(st.width + st.height == n);
      CHECK(st.area - st.width == size(dg));
      CHECK(marked_ppp_to_diagram(mp) == dg);
      CHECK(images.insert(mp).second);
    }
    std::size_t expected = 0;
    for (const Ppp& q : enumerate_ppp(n, max_size + n)) {
      auto st = statistics(q);
      if (st.width + st.height != n || st.area - st.width > max_size) continue;
      if (is_rectangular(q) && st.height == 0 && q.seq().pairs().front().first >= 2) continue;
      expected += static_cast<std::size_t>(q.seq().pairs().front().second -
                                           q.seq().pairs().front().first + 1);
    }
    CHECK(images.size() == expected);
  }
}

TEST_CASE("classify_W, psi0, psi1") {
  CHECK(kind_of([] { classify_W(Heap::from_pieces({seg(1, 2), seg(4, 5)})); }) ==
        ErrorKind::TrivialHeap);
  CHECK(kind_of([] { classify_W(Heap{}); }) == ErrorKind::TrivialHeap);
  Heap tower = Heap::from_pieces({seg(1, 2), seg(1, 2)});
  CHECK_NOTHROW(classify_W(tower));

  Truncation t{5, 4, 9};
  int in_w = 0;
  for_each_heap<Segment>(segment_universe(t.q), t, [&](const Heap& f, const Exponent& w) {
    if (is_trivial(f)) return;
    WClass c = classify_W(f);
    if (c.type == WType::Type0) {
      ++in_w;
      Heap g = psi0(f);
      CHECK(classify_W(g).type == WType::Type1);
      CHECK(psi1(g) == f);
      CHECK(segment_weight(g) == w);
      CHECK(minima(g).size() == minima(f).size());
      CHECK(kind_of([&] { psi1(f); }) == ErrorKind::WrongType);
    } else if (c.type == WType::Type1) {
      ++in_w;
      Heap g = psi1(f);
      CHECK(classify_W(g).type == WType::Type0);
      CHECK(psi0(g) == f);
      CHECK(kind_of([&] { psi0(f); }) == ErrorKind::WrongType);
    }
  });
  CHECK(in_w > 0);
}

TEST_CASE("PPP series") {
  Truncation t{4, 4, 9};
  TruncatedSeries::Terms tally;
  for (const Ppp& p : enumerate_ppp(t.y, t.q)) {
    Exponent e = ppp_weight(p);
    if (t.contains(e)) tally[e] += 1;
  }
  CHECK(TruncatedSeries(t, tally) == ppp_series(t));
}

TEST_CASE("JSON") {
  auto mp = MarkedPpp::validate(Ppp::validate(AltSequence::validate({{1, 3}, {2, 2}})), 2);
  auto j = to_json(mp);
  CHECK(j["mark"] == 2);
  CHECK(j["pairs"][0][1] == 3);
  CHECK(marked_ppp_from_json(j) == mp);
  CHECK(ppp_from_json(to_json(mp.ppp)) == mp.ppp);
  CHECK(alt_sequence_from_json(to_json(mp.ppp.seq())) == mp.ppp.seq());
}
