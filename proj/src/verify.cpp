#include "affine_heaps/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "affine_heaps/cycles.hpp"
#include "affine_heaps/error.hpp"
#include "affine_heaps/monodimer.hpp"
#include "affine_heaps/oracle.hpp"
#include "affine_heaps/ppp.hpp"
#include "affine_heaps/qformulas.hpp"

namespace affheaps {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.informational || c.passed; });
}

namespace {

std::string exponent_text(const Exponent& e) {
  return "x^" + std::to_string(e.x) + " y^" + std::to_string(e.y) + " q^" + std::to_string(e.q);
}

CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return CheckResult{std::move(name), ok, ok ? std::string{} : std::move(detail), false};
}

CheckResult info(CheckResult c) {
  c.informational = true;
  return c;
}

// Runs tasks 0..count-1 on up to `jobs` threads; results stay in index order.
template <class T>
std::vector<T> parallel_map(int jobs, int count, const std::function<T(int)>& fn) {
  std::vector<T> out(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) out[static_cast<std::size_t>(i)] = fn(i);
  };
  const int threads = std::clamp(jobs, 1, std::max(count, 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::int64_t row(const CountTable& t, int len) {
  auto it = t.rows.find(len);
  return it == t.rows.end() ? 0 : it->second;
}

std::int64_t catalan(int n) {
  std::int64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// ---- criteria 1 and 2 ----

SuiteReport theorem_suite(const std::string& id, const VerifyOptions& o, bool involutions) {
  SuiteReport r{id, {}};
  Truncation t{o.n_max, 0, o.len_max};
  TruncatedSeries affine_gf, finite_gf;
  if (involutions) {
    std::tie(finite_gf, affine_gf) = theorem_involutions(t);
  } else {
    affine_gf = theorem_S_tilde(t);
    finite_gf = theorem_S(t);
  }
  const PermClass ac = involutions ? PermClass::AffineInvolution : PermClass::Affine;
  const PermClass fc = involutions ? PermClass::FiniteInvolution : PermClass::Finite;
  const int count = std::max(0, o.n_max - 1);
  auto tables = parallel_map<std::map<PermClass, CountTable>>(
      o.jobs, count, [&](int k) { return enumerate_fc_all(k + 2, o.len_max); });
  for (int k = 0; k < count; ++k) {
    const int n = k + 2;
    std::string bad_a, bad_f;
    for (int len = 0; len <= o.len_max; ++len) {
      Rational ga = affine_gf.coefficient({n, 0, len});
      Rational gf = finite_gf.coefficient({n - 1, 0, len});
      std::int64_t ca = row(tables[k].at(ac), len), cf = row(tables[k].at(fc), len);
      if (bad_a.empty() && ga != Rational(static_cast<long>(ca)))
        bad_a = "length " + std::to_string(len) + ": oracle " + std::to_string(ca) +
                ", series " + ga.get_str();
      if (bad_f.empty() && gf != Rational(static_cast<long>(cf)))
        bad_f = "length " + std::to_string(len) + ": oracle " + std::to_string(cf) +
                ", series " + gf.get_str();
    }
    r.checks.push_back(check("affine n=" + std::to_string(n), bad_a.empty(), bad_a));
    r.checks.push_back(check("finite n=" + std::to_string(n), bad_f.empty(), bad_f));
  }
  return r;
}

// ---- criterion 3 ----

SuiteReport catalan_suite(const VerifyOptions& o) {
  SuiteReport r{"catalan", {}};
  const int count = std::max(0, o.n_max - 1);
  auto totals = parallel_map<std::int64_t>(o.jobs, count, [&](int k) {
    const int n = k + 2;
    return enumerate_fc_elements(n, n * (n - 1) / 2, PermClass::Finite).total();
  });
  for (int k = 0; k < count; ++k) {
    const int n = k + 2;
    r.checks.push_back(check("finite total n=" + std::to_string(n) + " is Catalan(n)",
                             totals[k] == catalan(n),
                             "got " + std::to_string(totals[k]) + ", Catalan(" + std::to_string(n) +
                                 ") = " + std::to_string(catalan(n))));
  }
  // The listed sequence 1, 2, 5, 14, 42 for n = 2..6 is Catalan(n-1).
  bool listed = count >= 5;
  const std::int64_t expected[] = {1, 2, 5, 14, 42};
  for (int k = 0; k < std::min(count, 5); ++k) listed = listed && totals[k] == expected[k];
  std::ostringstream os;
  os << "totals n=2..:";
  for (auto v : totals) os << ' ' << v;
  r.checks.push_back(info(check("listed values 1,2,5,14,42 at n=2..6", listed, os.str())));
  return r;
}

// ---- criterion 4 ----

SuiteReport inversion_suite(const VerifyOptions& o) {
  SuiteReport r{"inversion-lemma", {}};
  auto md = md_universe(5, WalkGraph::GPrime);
  Truncation tm{7, 0, 10};
  std::vector<std::pair<std::string, std::set<Segment>>> ms = {
      {"{L0}", {{0, 0, Label::L}}},
      {"{[0,1]}", {{0, 1, Label::None}}},
      {"{[2,3], R3}", {{2, 3, Label::None}, {3, 3, Label::R}}},
      {"{L0, R0, L1}", {{0, 0, Label::L}, {0, 0, Label::R}, {1, 1, Label::L}}},
  };
  for (const auto& [name, m] : ms)
    r.checks.push_back(compare_series("monomer-dimer, maxima in " + name,
                                      inversion_lemma_lhs<Segment>(md, m, tm),
                                      inversion_lemma_rhs<Segment>(md, m, tm)));
  r.checks.push_back(compare_series("monomer-dimer pyramids", pyramid_series_lhs<Segment>(md, tm),
                                    pyramid_series_rhs<Segment>(md, tm)));

  std::mt19937_64 rng(o.seed);
  auto all = segment_universe(6);
  Truncation ts{4, 4, 10};
  for (int k = 0; k < 3; ++k) {
    PieceUniverse<Segment> u;
    std::set<Segment> m;
    for (const auto& wp : all)
      if (rng() % 2) u.push_back(wp);
    if (u.empty()) u.push_back(all.front());
    for (const auto& wp : u)
      if (rng() % 3 == 0) m.insert(wp.piece);
    if (m.empty()) m.insert(u.front().piece);
    std::string tag = "random universe " + std::to_string(k + 1) + " (" + std::to_string(u.size()) +
                      " pieces)";
    r.checks.push_back(compare_series(tag + ", maxima in M", inversion_lemma_lhs<Segment>(u, m, ts),
                                      inversion_lemma_rhs<Segment>(u, m, ts)));
    r.checks.push_back(compare_series(tag + ", pyramids", pyramid_series_lhs<Segment>(u, ts),
                                      pyramid_series_rhs<Segment>(u, ts)));
  }
  return r;
}

// ---- criterion 5 ----

SuiteReport trivial_suite(const VerifyOptions&) {
  SuiteReport r{"trivial-series", {}};
  Truncation t{12, 0, 12};
  r.checks.push_back(compare_series("monomers and dimers vs h", signed_trivial_sum(TrivialModel::Md, t),
                                    series_h(t)));
  r.checks.push_back(compare_series("no R monomer at 0 vs j",
                                    signed_trivial_sum(TrivialModel::MdStar, t), series_j(t)));
  r.checks.push_back(compare_series("dimers only vs frakh",
                                    signed_trivial_sum(TrivialModel::DimersOnly, t), series_frak_h(t)));
  r.checks.push_back(compare_series("dimers and L at 0 vs calJ",
                                    signed_trivial_sum(TrivialModel::LAtZeroOnly, t), series_cal_J(t)));
  r.checks.push_back(compare_series("LR-avoiding words vs h", signed_word_sum(t), series_h(t)));
  r.checks.push_back(
      compare_series("distinct-part partition pairs vs h", signed_partition_pair_sum(t), series_h(t)));

  // Involution I: sign-reversing, weight-preserving, fixed points carry the whole sum.
  Truncation t8{8, 0, 8};
  TruncatedSeries::Terms fixed;
  std::string bad;
  auto u = md_universe(9, WalkGraph::GPrime);
  for (auto& wp : u) wp.weight.y = 0;
  for_each_trivial_heap<Segment>(u, t8, [&](const Heap& h, const Exponent& w) {
    try {
      Heap g = involution_I(h);
      if (bad.empty() && (md_weight(g) != md_weight(h) || g.size() == h.size() || involution_I(g) != h))
        bad = to_string(h);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoActiveSite) throw;
      fixed[w] += h.size() % 2 ? -1 : 1;
    }
  });
  r.checks.push_back(check("involution I is a sign-reversing weight-preserving involution",
                           bad.empty(), "fails at " + bad));
  r.checks.push_back(compare_series("fixed points of I vs h", TruncatedSeries(t8, fixed), series_h(t8)));
  return r;
}

// ---- criterion 6 ----

void round_trip_examples(SuiteReport& r) {
  {
    auto s = AffinePermutation::from_window(8, {-6, 13, -4, -1, 0, 14, 19, 1});
    auto d = delta(s);
    bool ok = size(d) == 31 && inversion_number(s) == 31 && delta_inverse(d) == s &&
              area(phi(d)) == 31 && md_weight(upsilon(d).pyramid).q == 31 &&
              upsilon_inverse(upsilon(d)) == d;
    r.checks.push_back(check("31-element diagram instance", ok, to_string(s)));
  }
  {
    auto d = AlternatingDiagram::validate(12, {0, 1, 2, 3, 2, 1, 2, 1, 2, 1, 1, 1},
                                          {{9, ChainType::L}, {10, ChainType::R}});
    auto p = upsilon(d);
    Exponent w = md_weight(p.pyramid);
    bool ok = w.x == 12 && w.q == 17 && is_pyramid(p.pyramid) && upsilon_inverse(p) == d &&
              delta(delta_inverse(d)) == d;
    r.checks.push_back(check("rank-12 size-17 walk instance has weight x^12 q^17", ok,
                             exponent_text(w)));
  }
  {
    auto s = AltSequence::validate({{5, 7}, {7, 7}, {2, 4}, {1, 2}, {2, 6}});
    auto p = Ppp::validate(s);
    auto st = statistics(p);
    Heap h = f_to_heap(s);
    bool ok = st == PppStatistics{5, 9, 26} && f_inverse(h) == s && in_H_tilde(h) &&
              segment_weight(h) == ppp_weight(p);
    r.checks.push_back(check("width 5, height 9, area 26 PPP", ok,
                             std::to_string(st.width) + "," + std::to_string(st.height) + "," +
                                 std::to_string(st.area)));
    auto s2 = AltSequence::validate({{2, 5}, {5, 7}, {3, 7}, {1, 2}, {1, 1}});
    r.checks.push_back(check("five-segment heap instance", f_inverse(f_to_heap(s2)) == s2));
  }
  {
    Digraph g;
    for (const char* v : {"A", "B", "C", "D", "E", "F", "G"}) g.add_vertex(v);
    auto edge = [&](const char* a, const char* b) { g.add_edge(g.vertex(a), g.vertex(b)); };
    edge("A", "B"); edge("B", "F"); edge("F", "C"); edge("C", "G"); edge("G", "B");
    edge("F", "A"); edge("B", "C"); edge("C", "E"); edge("E", "D"); edge("D", "C");
    auto names = [](std::string_view s) {
      std::vector<std::string> out;
      for (char c : s) out.emplace_back(1, c);
      return out;
    };
    auto cyc = [&](std::string_view s) { return make_cycle(g, path_from_names(g, names(s)).edges); };
    Path w = path_from_names(g, names("ABFCGBFABCEDCE"));
    auto [eta, heap] = psi_cycles(g, w);
    CycleHeap expected = CycleHeap::from_pieces({cyc("BFCGB"), cyc("ABFA"), cyc("CEDC")});
    bool ok = eta == path_from_names(g, names("ABCE")) && heap == expected &&
              psi_cycles_inverse(g, eta, heap) == w;
    r.checks.push_back(check("heap of cycles instance ABFCGBFABCEDCE", ok));
  }
}

SuiteReport round_trip_suite(const VerifyOptions& o) {
  SuiteReport r{"bijection-round-trips", {}};
  const int n_top = 5, s_top = 8;

  // Delta on the oracle elements, with the statistics chain.
  auto per_n = parallel_map<std::string>(o.jobs, n_top - 1, [&](int k) -> std::string {
    const int n = k + 2;
    std::map<int, std::int64_t> by_len;
    for (const AffinePermutation& s : fc_elements(n, s_top)) {
      const int len = static_cast<int>(inversion_number(s));
      ++by_len[len];
      AlternatingDiagram d = delta(s);
      if (delta_inverse(d) != s) return "Delta fails at " + to_string(s);
      MarkedPyramid p = upsilon(d);
      if (size(d) != len || area(phi(d)) != len || md_weight(p.pyramid).q != len ||
          md_weight(p.pyramid).x != n)
        return "statistics differ at " + to_string(s);
    }
    std::map<int, std::int64_t> diag;
    for (const auto& d : enumerate_diagrams(n, s_top)) ++diag[size(d)];
    if (diag != by_len) return "diagram counts differ from permutation counts at n=" + std::to_string(n);
    return {};
  });
  for (int k = 0; k < n_top - 1; ++k)
    r.checks.push_back(check("Delta, n=" + std::to_string(k + 2), per_n[k].empty(), per_n[k]));

  // Diagram side: phi, Upsilon, marked PPPs.
  std::string bad_phi, bad_ups, bad_ppp;
  std::map<std::pair<int, int>, std::int64_t> diagram_counts, ppp_counts;
  for (int n = 1; n <= n_top; ++n)
    for (const auto& d : enumerate_diagrams(n, s_top)) {
      ++diagram_counts[{n, size(d)}];
      Walk w = phi(d);
      if (bad_phi.empty() && (phi_inverse(w) != d || is_exceptional(w) || area(w) != size(d) ||
                              is_finite(d) != (w.start == 0)))
        bad_phi = to_json(d).dump();
      MarkedPyramid p = upsilon(d);
      if (bad_ups.empty() && (upsilon_inverse(p) != d || !is_pyramid(p.pyramid) || in_col(p)))
        bad_ups = to_json(d).dump();
      MarkedPpp mp = diagram_to_marked_ppp(d);
      auto st = statistics(mp.ppp);
      if (bad_ppp.empty() && (marked_ppp_to_diagram(mp) != d || st.width + st.height != n ||
                              st.area - st.width != size(d)))
        bad_ppp = to_json(d).dump();
    }
  for (int n = 1; n <= n_top; ++n)
    for (const Ppp& p : enumerate_ppp(n, s_top + n)) {
      auto st = statistics(p);
      if (st.width + st.height != n || st.area - st.width > s_top) continue;
      if (is_rectangular(p) && p.seq().pairs().front().first >= 2) continue;
      auto [a, b] = p.seq().pairs().front();
      for (int j = a; j <= b; ++j) {
        MarkedPpp mp = MarkedPpp::validate(p, j);
        ++ppp_counts[{n, st.area - st.width}];
        if (bad_ppp.empty() && diagram_to_marked_ppp(marked_ppp_to_diagram(mp)) != mp)
          bad_ppp = to_json(mp).dump();
      }
    }
  r.checks.push_back(check("phi on diagrams n<=5, size<=8", bad_phi.empty(), bad_phi));
  r.checks.push_back(check("Upsilon on diagrams n<=5, size<=8", bad_ups.empty(), bad_ups));
  r.checks.push_back(check("marked PPP <-> diagram both ways", bad_ppp.empty(), bad_ppp));
  r.checks.push_back(check("marked PPP counts equal diagram counts", ppp_counts == diagram_counts));

  // Walk side.
  std::string bad_walk, bad_psi;
  for (int len = 1; len <= n_top; ++len)
    for (const Walk& w : enumerate_walks(WalkGraph::G, len, s_top)) {
      if (bad_walk.empty()) {
        if (is_exceptional(w)) {
          try {
            phi_inverse(w);
            bad_walk = "exceptional accepted: " + to_string(w);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::ExceptionalWalk) bad_walk = to_string(w);
          }
        } else if (phi(phi_inverse(w)) != w) {
          bad_walk = to_string(w);
        }
      }
    }
  for (WalkGraph g : {WalkGraph::G, WalkGraph::GPrime})
    for (int len = 0; len <= s_top && bad_psi.empty(); ++len)
      for (const Walk& w : enumerate_walks(g, len, s_top)) {
        MarkedPyramid p = psi_walk(w, g);
        Exponent mw = md_weight(p.pyramid);
        if (psi_walk_inverse(p, g) != w || mw.x != len || mw.q != area(w) ||
            (len > 0 && !is_pyramid(p.pyramid))) {
          bad_psi = to_string(w);
          break;
        }
      }
  r.checks.push_back(check("phi inverse on closed walks, length<=5, area<=8", bad_walk.empty(), bad_walk));
  r.checks.push_back(check("psi on closed walks of G and G', length<=8, area<=8", bad_psi.empty(), bad_psi));

  // f on heaps with at most four segments.
  std::string bad_f;
  std::int64_t heaps = 0;
  for_each_heap<Segment>(segment_universe(5), Truncation{20, 4, 100},
                         [&](const Heap& h, const Exponent&) {
                           ++heaps;
                           if (!bad_f.empty()) return;
                           AltSequence s = f_inverse(h);
                           if (f_to_heap(s) != h || f_inverse(f_to_heap(s)) != s ||
                               (h.empty() ? !in_H_tilde(h) : in_H_tilde(h) != s.wraps()) ||
                               half_turn(h) != f_to_heap(half_turn(s)))
                             bad_f = to_string(h);
                         });
  r.checks.push_back(check("f on " + std::to_string(heaps) + " heaps (<=4 segments, b<=5)",
                           bad_f.empty(), bad_f));
  round_trip_examples(r);
  return r;
}

// ---- criterion 7 ----

SuiteReport ppp_suite(const VerifyOptions&) {
  SuiteReport r{"ppp-series", {}};
  Truncation t{5, 5, 12};
  TruncatedSeries::Terms all, semi, semi_rows, marked;
  for_each_heap<Segment>(segment_universe(t.q), t, [&](const Heap& h, const Exponent& e) {
    if (h.empty()) return;
    if (in_H_tilde(h)) {
      all[e] += 1;
      Segment top = maxima(h).back();
      marked[e] += top.b - top.a + 1;
    }
    if (is_pyramid(h) && maxima(h).front().a == 1) {
      semi[e] += 1;
      Exponent rows = e;
      rows.x += 1;
      if (t.fits(rows)) semi_rows[rows] += 1;
    }
  });
  auto n_builder = [](const Truncation& u) { return series_N(u); };
  TruncatedSeries ly = log_derivative(n_builder, Var::Y, t);
  TruncatedSeries lx = log_derivative(n_builder, Var::X, t);
  TruncatedSeries ratio = series_Nhat(t) * recip(series_N(t));
  TruncatedSeries minus_x_ratio = -(ratio.shifted({1, 0, 0}).truncated(t));

  r.checks.push_back(compare_series("PPP sum over H-tilde vs -y dN/dy / N", TruncatedSeries(t, all), ly));
  r.checks.push_back(
      compare_series("semi-pyramid sum vs -x Nhat/N", TruncatedSeries(t, semi), minus_x_ratio));
  r.checks.push_back(compare_series("marked sum vs -x dN/dx / N", TruncatedSeries(t, marked), lx));
  r.checks.push_back(info(compare_series("semi-pyramid sum vs -Nhat/N", TruncatedSeries(t, semi), -ratio)));
  r.checks.push_back(info(compare_series("semi-pyramid sum with x counting rows vs -x Nhat/N",
                                         TruncatedSeries(t, semi_rows), minus_x_ratio)));
  r.checks.push_back(info(compare_series("marked sum vs -(x d/dx + y d/dy) N / N",
                                         TruncatedSeries(t, marked), lx + ly)));
  std::int64_t oracle = 0;
  TruncatedSeries::Terms tally;
  for (const Ppp& p : enumerate_ppp(t.y, t.q)) {
    Exponent w = ppp_weight(p);
    if (!t.fits(w)) continue;
    ++oracle;
    tally[w] += 1;
  }
  r.checks.push_back(compare_series("PPP oracle tally (" + std::to_string(oracle) + ") vs PPP series",
                                    TruncatedSeries(t, tally), ppp_series(t)));
  return r;
}

// ---- criterion 8 ----

SuiteReport cancellation_suite(const VerifyOptions&) {
  SuiteReport r{"cancellation", {}};
  Truncation t{6, 4, 10};
  TruncatedSeries::Terms signed_sum;
  std::set<Heap> w0, w1, images0, images1;
  std::string bad;
  for_each_heap<Segment>(segment_universe(t.q), t, [&](const Heap& h, const Exponent& e) {
    if (is_trivial(h)) return;
    WClass c = classify_W(h);
    if (c.type == WType::NotInW) return;
    signed_sum[e] += c.u1.size() % 2 ? -1 : 1;
    if (c.type == WType::Type0) {
      w0.insert(h);
      Heap g = psi0(h);
      images0.insert(g);
      WClass cg = classify_W(g);
      if (bad.empty() && (cg.type != WType::Type1 || psi1(g) != h || segment_weight(g) != e ||
                          minima(g).size() != minima(h).size()))
        bad = "psi0 at " + to_string(h);
    } else {
      w1.insert(h);
      Heap g = psi1(h);
      images1.insert(g);
      if (bad.empty() && (classify_W(g).type != WType::Type0 || psi0(g) != h))
        bad = "psi1 at " + to_string(h);
    }
  });
  r.checks.push_back(compare_series("signed sum over W", TruncatedSeries(t, signed_sum),
                                    TruncatedSeries::zero(t)));
  r.checks.push_back(check("psi0 and psi1 are inverse, type-flipping, weight-preserving", bad.empty(), bad));
  r.checks.push_back(check("psi0(W0) = W1 and psi1(W1) = W0 (" + std::to_string(w0.size()) + " pairs)",
                           images0 == w1 && images1 == w0,
                           std::to_string(w0.size()) + " vs " + std::to_string(w1.size())));
  return r;
}

// ---- criterion 9 ----

SuiteReport identities_suite(const VerifyOptions&) {
  SuiteReport r{"identities", {}};
  Truncation t{12, 0, 12};
  TruncatedSeries h = series_h(t);
  r.checks.push_back(compare_series("j(x) = h(x) + x h(xq)", series_j(t),
                                    h + substitute_scale(h, Var::X, 1).shifted({1, 0, 0}).truncated(t)));
  r.checks.push_back(compare_series("J (xq;q)_inf = j", series_J(t) * pochhammer(1, {1, 0, 1}, std::nullopt, t),
                                    series_j(t)));
  Truncation wide{t.x, t.x, t.q + t.x};
  r.checks.push_back(compare_series("N(x, x/q, q) = J(x)",
                                    substitute_y_as_x(series_N(wide), -1).truncated(t), series_J(t)));
  TruncatedSeries jxq = substitute_scale(series_J(t), Var::X, 1);
  TruncatedSeries rhs = -(jxq * recip(TruncatedSeries::one(t) - TruncatedSeries::monomial(t, {1, 0, 1})))
                             .shifted({1, 0, 0})
                             .truncated(t);
  r.checks.push_back(compare_series("Nhat(x, x/q, q) = -x J(xq)/(1-xq)",
                                    substitute_y_as_x(series_Nhat(wide), -1).truncated(t), rhs));
  TruncatedSeries fh = series_frak_h(t);
  r.checks.push_back(compare_series("calJ(x) = frakh(x) - x frakh(xq)", series_cal_J(t),
                                    fh - substitute_scale(fh, Var::X, 1).shifted({1, 0, 0}).truncated(t)));
  return r;
}

// ---- criterion 10 ----

SuiteReport walk_suite(const VerifyOptions& o) {
  SuiteReport r{"walk-series", {}};
  Truncation t{10, 0, 12};
  struct Tally {
    TruncatedSeries::Terms o, ostar, obar, obarstar;
  };
  auto tallies = parallel_map<Tally>(o.jobs, t.x, [&](int k) {
    const int len = k + 1;
    Tally tl;
    for (const Walk& w : enumerate_walks(WalkGraph::GPrime, len, t.q)) {
      Exponent e{len, 0, area(w)};
      tl.o[e] += 1;
      bool has_r0 = false, loop_pos = false, any_loop = false;
      int v = w.start;
      for (const Step& s : w.steps) {
        if (s.kind == StepKind::Loop) {
          any_loop = true;
          if (v == 0 && s.label == Label::R) has_r0 = true;
          if (v > 0) loop_pos = true;
        }
        if (s.kind == StepKind::Up) ++v;
        if (s.kind == StepKind::Down) --v;
      }
      if (has_r0) continue;
      tl.ostar[e] += 1;
      if (!any_loop) tl.obar[e] += 1;
      if (!loop_pos) tl.obarstar[e] += 1;
    }
    return tl;
  });
  Tally sum;
  for (const Tally& tl : tallies) {
    for (auto& [e, c] : tl.o) sum.o[e] += c;
    for (auto& [e, c] : tl.ostar) sum.ostar[e] += c;
    for (auto& [e, c] : tl.obar) sum.obar[e] += c;
    for (auto& [e, c] : tl.obarstar) sum.obarstar[e] += c;
  }
  // Length-zero walks exist at every vertex; the comparison starts at length 1.
  auto positive = [&](const TruncatedSeries& s) {
    TruncatedSeries::Terms out;
    for (const auto& [e, c] : s.terms())
      if (e.x > 0) out[e] = c;
    return TruncatedSeries(t, std::move(out));
  };
  r.checks.push_back(compare_series("closed walks on G' vs -x h'/h", TruncatedSeries(t, sum.o),
                                    positive(walk_series_O(t))));
  r.checks.push_back(compare_series("closed walks on G vs -x j'/j", TruncatedSeries(t, sum.ostar),
                                    positive(walk_series_Ostar(t))));
  r.checks.push_back(compare_series("loopless closed walks vs -x frakh'/frakh",
                                    TruncatedSeries(t, sum.obar), positive(walk_series_Obar(t))));
  r.checks.push_back(compare_series("closed walks with loops only at 0 vs -x calJ'/calJ",
                                    TruncatedSeries(t, sum.obarstar), positive(walk_series_Obarstar(t))));
  return r;
}

}  // namespace

CheckResult compare_series(std::string name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  Truncation m = Truncation::meet(lhs.trunc(), rhs.trunc());
  TruncatedSeries diff = lhs.truncated(m) - rhs.truncated(m);
  if (diff.is_zero()) return check(std::move(name), true);
  const auto& [e, c] = *diff.terms().begin();
  return check(std::move(name), false,
               "first difference at " + exponent_text(e) + ": " + lhs.coefficient(e).get_str() +
                   " vs " + rhs.coefficient(e).get_str());
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "thm-main",     "thm-involutions",   "catalan",    "inversion-lemma", "trivial-series",
      "bijection-round-trips", "ppp-series", "cancellation", "identities", "walk-series"};
  return ids;
}

SuiteReport run_suite(std::string_view id, const VerifyOptions& o) {
  if (o.n_max < 2) throw Error(ErrorKind::InvalidArgument, "n-max must be at least 2");
  if (o.len_max < 0) throw Error(ErrorKind::InvalidArgument, "len-max must be nonnegative");
  if (id == "thm-main") return theorem_suite("thm-main", o, false);
  if (id == "thm-involutions") return theorem_suite("thm-involutions", o, true);
  if (id == "catalan") return catalan_suite(o);
  if (id == "inversion-lemma") return inversion_suite(o);
  if (id == "trivial-series") return trivial_suite(o);
  if (id == "bijection-round-trips") return round_trip_suite(o);
  if (id == "ppp-series") return ppp_suite(o);
  if (id == "cancellation") return cancellation_suite(o);
  if (id == "identities") return identities_suite(o);
  if (id == "walk-series") return walk_suite(o);
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(id) + "'");
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream os;
  for (const CheckResult& c : r.checks) {
    os << "  " << (c.passed ? "ok  " : (c.informational ? "note" : "FAIL")) << ' ' << c.name;
    if (c.informational) os << " [informational]";
    if (!c.passed && !c.detail.empty()) os << " -- " << c.detail;
    os << '\n';
  }
  os << (r.passed() ? "PASS " : "FAIL ") << r.suite << '\n';
  return os.str();
}

}  // namespace affheaps
