#include <doctest.h>

#include <random>

#include "affine_heaps/cycles.hpp"
#include "affine_heaps/heap.hpp"
#include "affine_heaps/monodimer.hpp"
#include "affine_heaps/oracle.hpp"

using namespace affheaps;

namespace {

Segment seg(int a, int b, Label l = Label::None) { return {a, b, l}; }

Digraph example_graph() {
  Digraph g;
  for (const char* v : {"A", "B", "C", "D", "E", "F", "G"}) g.add_vertex(v);
  for (const char* e : {"AB", "BF", "FC", "CG", "GB", "FA", "BC", "CE", "ED", "DC"})
    g.add_edge(g.vertex(std::string(1, e[0])), g.vertex(std::string(1, e[1])));
  return g;
}

std::vector<std::string> letters(std::string_view s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

}  // namespace

TEST_CASE("compose") {
  Heap empty;
  Heap h = Heap::from_pieces({seg(1, 2), seg(2, 3), seg(5, 5)});
  CHECK(compose(h, empty) == h);
  CHECK(compose(empty, h) == h);
  auto disjoint = compose(Heap::from_pieces({seg(1, 2)}), Heap::from_pieces({seg(4, 5)}));
  CHECK(disjoint.layers().size() == 1);
  CHECK(disjoint.layers()[0].size() == 2);
  auto stacked = compose(Heap::from_pieces({seg(1, 2)}), Heap::from_pieces({seg(2, 3)}));
  CHECK(stacked.layers().size() == 2);

  std::mt19937 rng(7);
  auto random_heap = [&] {
    std::vector<Segment> ps;
    for (int k = rng() % 5; k > 0; --k) {
      int a = rng() % 6;
      ps.push_back(seg(a, a + static_cast<int>(rng() % 3)));
    }
    return Heap::from_pieces(ps);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Heap a = random_heap(), b = random_heap(), c = random_heap();
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("normal form is independent of linearization") {
  // [0,1] and [3,4] commute; both orders give the same heap.
  auto h1 = Heap::from_pieces({seg(0, 1), seg(3, 4), seg(1, 3)});
  auto h2 = Heap::from_pieces({seg(3, 4), seg(0, 1), seg(1, 3)});
  CHECK(h1 == h2);
  CHECK(Heap::from_layers(h1.layers()) == h1);
  CHECK_THROWS_AS(Heap::from_layers({{seg(0, 1)}, {seg(3, 4)}}), Error);
  CHECK_THROWS_AS(Heap::from_layers({{seg(0, 1), seg(1, 2)}}), Error);
}

TEST_CASE("extrema, trivial, pyramid") {
  Heap empty;
  CHECK(minima(empty).empty());
  CHECK(maxima(empty).empty());
  CHECK(is_trivial(empty));
  CHECK_FALSE(is_pyramid(empty));
  Heap one = Heap::from_pieces({seg(2, 3)});
  CHECK(is_trivial(one));
  CHECK(is_pyramid(one));
  // Two bottom pieces bridged by one on top.
  Heap p = Heap::from_pieces({seg(0, 1), seg(3, 4), seg(1, 3)});
  CHECK(is_pyramid(p));
  CHECK_FALSE(is_trivial(p));
  CHECK(minima(p) == std::vector<Segment>{seg(0, 1), seg(3, 4)});
  CHECK(maxima(p) == std::vector<Segment>{seg(1, 3)});
  Heap q = Heap::from_pieces({seg(0, 1), seg(1, 2), seg(5, 6)});
  CHECK(maxima(q) == std::vector<Segment>{seg(1, 2), seg(5, 6)});
  CHECK_FALSE(is_pyramid(q));
  CHECK(total_length(q) == 3);
  CHECK(right_end_sum(q) == 9);
  CHECK(remove_maximal(q, seg(5, 6)) == Heap::from_pieces({seg(0, 1), seg(1, 2)}));
  CHECK(remove_minima(q, {seg(0, 1)}) == Heap::from_pieces({seg(1, 2), seg(5, 6)}));
  CHECK_THROWS_AS(remove_maximal(q, seg(0, 1)), Error);
}

TEST_CASE("enumerate_heaps") {
  auto u = md_universe(1, WalkGraph::G);
  CHECK(enumerate_heaps(u, Truncation{0, 0, 0}).size() == 1);
  // By hand: empty; four single pieces; L0L0, L0L1, L0R1, L1L1, R1R1 and the two stackings of L1, R1.
  CHECK(enumerate_heaps(u, Truncation{2, 0, 2}).size() == 12);
  PieceUniverse<Segment> bad{{seg(0, 0, Label::L), Exponent{}}};
  CHECK_THROWS_AS(enumerate_heaps(bad, Truncation{1, 0, 1}), Error);

  // Every enumerated heap is in normal form, distinct, and has the reported weight.
  Truncation t{4, 0, 6};
  auto big = md_universe(4, WalkGraph::GPrime);
  std::set<Heap> seen;
  for_each_heap<Segment>(big, t, [&](const Heap& h, const Exponent& w) {
    CHECK(seen.insert(h).second);
    CHECK(Heap::from_layers(h.layers()) == h);
    CHECK(heap_weight(big, h) == w);
    CHECK(md_weight(h) == w);
  });
  // Trivial heaps versus the trivial-heap series of the monodimer model.
  TruncatedSeries::Terms terms;
  for_each_trivial_heap<Segment>(trivial_model_universe(TrivialModel::Md, 8), Truncation{6, 0, 6},
                                 [&](const Heap& h, const Exponent& w) {
                                   terms[w] += h.size() % 2 ? -1 : 1;
                                 });
  CHECK(TruncatedSeries(Truncation{6, 0, 6}, terms) ==
        signed_trivial_sum(TrivialModel::Md, Truncation{6, 0, 6}));
}

TEST_CASE("inversion lemma") {
  PieceUniverse<Segment> none;
  Truncation t{3, 0, 3};
  CHECK(inversion_lemma_lhs<Segment>(none, {}, t) == TruncatedSeries::one(t));
  CHECK(inversion_lemma_rhs<Segment>(none, {}, t) == TruncatedSeries::one(t));

  auto u = md_universe(5, WalkGraph::GPrime);
  Truncation tt{6, 0, 8};
  std::set<Segment> all;
  for (const auto& wp : u) all.insert(wp.piece);
  auto numerator = signed_trivial_series<Segment>(u, tt, [&](const Heap& h) {
    return h.empty() ? Rational(1) : Rational(0);
  });
  CHECK(numerator == TruncatedSeries::one(tt));
  CHECK(inversion_lemma_lhs(u, all, tt) == inversion_lemma_rhs(u, all, tt));
  std::set<Segment> m{seg(0, 0, Label::L), seg(0, 1)};
  CHECK(inversion_lemma_lhs(u, m, tt) == inversion_lemma_rhs(u, m, tt));
}

TEST_CASE("pyramid series") {
  PieceUniverse<Segment> none;
  Truncation t{3, 0, 3};
  CHECK(pyramid_series_lhs<Segment>(none, t).is_zero());
  CHECK(pyramid_series_rhs<Segment>(none, t).is_zero());
  PieceUniverse<Segment> small{{seg(0, 1), {1, 0, 1}}, {seg(1, 2), {1, 0, 2}}, {seg(3, 3), {1, 0, 3}}};
  Truncation ts{4, 0, 9};
  CHECK(pyramid_series_lhs(small, ts) == pyramid_series_rhs(small, ts));
  auto u = md_universe(5, WalkGraph::G);
  Truncation tt{6, 0, 8};
  CHECK(pyramid_series_lhs(u, tt) == pyramid_series_rhs(u, tt));
}

TEST_CASE("heaps of cycles") {
  Digraph g = example_graph();
  auto cyc = [&](std::string_view s) { return make_cycle(g, path_from_names(g, letters(s)).edges); };

  Path single{g.vertex("C"), {}};
  auto [eta0, h0] = psi_cycles(g, single);
  CHECK(eta0 == single);
  CHECK(h0.empty());
  CHECK(psi_cycles_inverse(g, single, CycleHeap()) == single);

  Path sa = path_from_names(g, letters("ABCE"));
  auto [eta1, h1] = psi_cycles(g, sa);
  CHECK(eta1 == sa);
  CHECK(h1.empty());

  Path w = path_from_names(g, letters("ABFCGBFABCEDCE"));
  auto [eta, heap] = psi_cycles(g, w);
  CHECK(eta == path_from_names(g, letters("ABCE")));
  CHECK(heap == CycleHeap::from_pieces({cyc("BFCGB"), cyc("ABFA"), cyc("CEDC")}));
  CHECK(psi_cycles_inverse(g, eta, heap) == w);

  Path bad{g.vertex("A"), {g.find_edge(g.vertex("A"), g.vertex("B")), g.find_edge(g.vertex("C"), g.vertex("E"))}};
  CHECK_THROWS_AS(psi_cycles(g, bad), Error);
  CHECK_THROWS_AS(g.find_edge(g.vertex("A"), g.vertex("C")), Error);

  // A maximal cycle away from eta violates the condition.
  try {
    psi_cycles_inverse(g, path_from_names(g, letters("AB")), CycleHeap::from_pieces({cyc("CEDC")}));
    FAIL("expected ConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConditionViolated);
  }
}

TEST_CASE("heaps of cycles on the walk graph") {
  for (WalkGraph wg : {WalkGraph::G, WalkGraph::GPrime}) {
    Digraph g = walk_digraph(9, wg);
    for (int len = 0; len <= 7; ++len)
      for (const Walk& w : enumerate_walks(wg, len, 8)) {
        Path p = walk_to_path(g, w);
        auto [eta, h] = psi_cycles(g, p);
        CHECK(psi_cycles_inverse(g, eta, h) == p);
        CHECK(path_weight(g, p) == path_weight(g, eta) + cycle_heap_weight(g, h));
        CHECK(eta.edges.empty());
        if (len > 0) {
          REQUIRE(is_pyramid(h));
          const std::vector<int> top = maxima(h).front().vertices;
          CHECK(std::binary_search(top.begin(), top.end(), p.start));
        }
      }
  }
}
