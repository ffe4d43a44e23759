#include "affine_heaps/ppp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "affine_heaps/error.hpp"

namespace affheaps {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

std::string pair_text(const std::pair<int, int>& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

AltSequence AltSequence::validate(std::vector<std::pair<int, int>> pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (a < 1 || a > b)
      throw Error(ErrorKind::InvalidSequence, "pair " + pair_text(pairs[i]) + " needs 1 <= a <= b");
    if (i > 0 && a > pairs[i - 1].second)
      throw Error(ErrorKind::InvalidSequence,
                  "pair " + std::to_string(i + 1) + " starts above the previous top");
  }
  return AltSequence(std::move(pairs));
}

Ppp Ppp::validate(AltSequence seq) {
  if (seq.width() == 0) throw Error(ErrorKind::InvalidSequence, "a PPP has at least one column");
  if (!seq.wraps()) throw Error(ErrorKind::InvalidSequence, "wrap condition a_1 <= b_m fails");
  return Ppp(std::move(seq));
}

MarkedPpp MarkedPpp::validate(Ppp p, int j) {
  auto [a, b] = p.seq().pairs().front();
  if (j < a || j > b) throw Error(ErrorKind::InvalidSequence, "mark must satisfy a_1 <= j <= b_1");
  return MarkedPpp{std::move(p), j};
}

Heap f_to_heap(const AltSequence& s) {
  std::vector<Segment> pieces;
  for (auto it = s.pairs().rbegin(); it != s.pairs().rend(); ++it)
    pieces.push_back({it->first, it->second, Label::None});
  return Heap::from_pieces(pieces);
}

AltSequence f_inverse(const Heap& h) {
  std::vector<std::pair<int, int>> peeled;
  Heap rest = h;
  while (!rest.empty()) {
    Segment left = rest.layers().front().front();
    peeled.emplace_back(left.a, left.b);
    rest = remove_minima(rest, {left});
  }
  std::reverse(peeled.begin(), peeled.end());
  return AltSequence::validate(std::move(peeled));
}

bool in_H_tilde(const Heap& h) {
  if (h.empty()) return true;
  Segment top = maxima(h).back();
  Segment bottom = h.layers().front().front();
  return top.a <= bottom.b;
}

PppStatistics statistics(const Ppp& p) {
  PppStatistics st;
  st.width = p.seq().width();
  for (auto [a, b] : p.seq().pairs()) {
    st.height += b - a;
    st.area += b;
  }
  return st;
}

Exponent ppp_weight(const Ppp& p) {
  PppStatistics st = statistics(p);
  return {st.height, st.width, st.area};
}

Exponent segment_weight(const Segment& s) { return {s.b - s.a, 1, s.b}; }

Exponent segment_weight(const Heap& h) {
  Exponent w;
  for (const Segment& s : h.pieces()) w = w + segment_weight(s);
  return w;
}

PieceUniverse<Segment> segment_universe(int max_b) {
  PieceUniverse<Segment> u;
  for (int a = 1; a <= max_b; ++a)
    for (int b = a; b <= max_b; ++b) {
      Segment s{a, b, Label::None};
      u.push_back({s, segment_weight(s)});
    }
  return u;
}

AltSequence half_turn(const AltSequence& s) {
  if (s.width() == 0) return s;
  int lo = s.pairs().front().first, hi = s.pairs().front().second;
  for (auto [a, b] : s.pairs()) {
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
  std::vector<std::pair<int, int>> out;
  for (auto it = s.pairs().rbegin(); it != s.pairs().rend(); ++it)
    out.emplace_back(lo + hi - it->second, lo + hi - it->first);
  return AltSequence::validate(std::move(out));
}

Heap half_turn(const Heap& h) {
  if (h.empty()) return h;
  std::vector<Segment> pieces = h.pieces();
  int lo = pieces.front().a, hi = pieces.front().b;
  for (const Segment& s : pieces) {
    lo = std::min(lo, s.a);
    hi = std::max(hi, s.b);
  }
  std::reverse(pieces.begin(), pieces.end());
  for (Segment& s : pieces) s = {lo + hi - s.b, lo + hi - s.a, s.label};
  return Heap::from_pieces(pieces);
}

bool is_rectangular(const Ppp& p) {
  const auto& pr = p.seq().pairs();
  int m = pr.front().first;
  return std::all_of(pr.begin(), pr.end(), [&](const auto& q) { return q.first == m && q.second == m; });
}

AlternatingDiagram marked_ppp_to_diagram(const MarkedPpp& mp) {
  const auto& pr = mp.ppp.seq().pairs();
  if (is_rectangular(mp.ppp) && pr.front().first >= 2)
    throw Error(ErrorKind::RectangularPpp, "rectangular PPPs map to excluded diagrams");
  const int m = static_cast<int>(pr.size());
  int n = m;
  for (auto [a, b] : pr) n += b - a;
  // Rows of column x (1-based) before bottom-cell removal: lo..hi.
  std::vector<int> lo(static_cast<std::size_t>(m) + 1), hi(static_cast<std::size_t>(m) + 1);
  for (int x = 1; x <= m; ++x) {
    auto [a, b] = pr[x - 1];
    lo[x] = x == 1 ? 0 : hi[x - 1] - a + 1;
    hi[x] = lo[x] + b - 1;
  }
  std::vector<int> cols(static_cast<std::size_t>(n), 0);
  std::set<int> upper, lower;
  for (int x = 1; x <= m; ++x) {
    for (int y = lo[x] + 1; y <= hi[x]; ++y) ++cols[floor_mod(x + y - mp.j, n)];
    upper.insert(floor_mod(hi[x] + x - mp.j, n));
    lower.insert(floor_mod(lo[x] + x + 1 - mp.j, n));
  }
  std::map<int, ChainType> types;
  for (int i = 0; i < n; ++i) {
    const int nxt = (i + 1) % n;
    if (cols[i] != cols[nxt] || cols[i] == 0) continue;
    bool u = upper.count(i) > 0, l = lower.count(nxt) > 0;
    if (u != l) throw std::logic_error("inconsistent boundary events in PPP rotation");
    types.emplace(i, u ? ChainType::L : ChainType::R);
  }
  return AlternatingDiagram::validate(n, std::move(cols), std::move(types));
}

MarkedPpp diagram_to_marked_ppp(const AlternatingDiagram& d) {
  const int n = d.rank();
  const auto& cols = d.col_sizes();
  std::vector<int> u, l;
  for (int k = 0; k < n; ++k) {
    const int c = cols[k], c2 = cols[(k + 1) % n];
    bool up_event, low_event;
    if (c2 == c + 1) {
      up_event = false;
      low_event = true;
    } else if (c2 == c - 1) {
      up_event = true;
      low_event = false;
    } else if (c == 0) {
      up_event = low_event = true;
    } else {
      up_event = low_event = d.chain_types().at(k) == ChainType::L;
    }
    if (up_event) u.push_back(k);
    if (low_event) l.push_back(k + 1);
  }
  const int m = static_cast<int>(u.size());
  if (m == 0 || static_cast<int>(l.size()) != m)
    throw std::logic_error("unbalanced boundary events in diagram rotation");
  auto U = [&](int x) { return u[floor_mod(x, m)] + n * floor_div(x, m); };
  auto L = [&](int x) {
    int y = x - cols[0];
    return l[floor_mod(y, m)] + n * floor_div(y, m);
  };
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < m; ++x) pairs.emplace_back(U(x - 1) - L(x) + 3, U(x) - L(x) + 2);
  return MarkedPpp::validate(Ppp::validate(AltSequence::validate(std::move(pairs))), 2 - L(0));
}

namespace {

struct Occurrence {
  Segment seg;
  std::size_t layer;
};

std::vector<Occurrence> maximal_occurrences(const Heap& h) {
  std::vector<Occurrence> out;
  const auto& layers = h.layers();
  for (std::size_t k = 0; k < layers.size(); ++k)
    for (const Segment& p : layers[k]) {
      bool covered = false;
      for (std::size_t m = k + 1; m < layers.size() && !covered; ++m)
        covered = std::any_of(layers[m].begin(), layers[m].end(),
                              [&](const Segment& r) { return concurrent(p, r); });
      if (!covered) out.push_back({p, k});
    }
  return out;
}

Heap single(const Segment& s) { return Heap::from_pieces({s}); }

}  // namespace

WClass classify_W(const Heap& f) {
  if (is_trivial(f)) throw Error(ErrorKind::TrivialHeap, "classification needs a nontrivial heap");
  const std::vector<Segment> mins = minima(f);
  std::vector<Occurrence> maxs = maximal_occurrences(f);

  WClass w;
  std::optional<Segment> sf;
  for (const Occurrence& o : maxs)
    if (o.layer > 0 && (!sf || o.seg.a > sf->a)) sf = o.seg;
  if (!sf) return w;

  std::vector<Segment> u1;
  for (const Segment& s : mins)
    if (s.b < sf->a) u1.push_back(s);
  std::vector<Segment> x_f = u1;
  for (const Occurrence& o : maxs)
    if (o.seg.a > sf->b) u1.push_back(o.seg);
  std::sort(u1.begin(), u1.end());

  Heap f_prime = remove_minima(f, mins);
  std::optional<Segment> s0;
  if (!in_H_tilde(f_prime)) {
    for (const Segment& s : mins)
      if (in_H_tilde(compose(single(s), f_prime))) {
        s0 = s;
        break;
      }
  }
  std::vector<Segment> u2 = mins;
  if (s0) u2.erase(std::find(u2.begin(), u2.end(), *s0));

  w.u1 = u1;
  w.u2 = u2;
  if (u1 != u2 || !in_H_tilde(remove_minima(f, u1))) return w;

  const std::vector<Segment> fmins = minima(f_prime);
  if (s0) {
    w.type = WType::Type0;
    w.s = s0;
    for (const Segment& s : fmins)
      if (concurrent(s, *s0)) {
        w.s_prime = s;
        break;
      }
    if (!w.s_prime) throw std::logic_error("type 0 heap without a partner minimum");
  } else {
    w.type = WType::Type1;
    if (x_f.empty() || fmins.size() != 1)
      throw std::logic_error("type 1 heap without the expected special pieces");
    w.s = *std::max_element(x_f.begin(), x_f.end(),
                            [](const Segment& p, const Segment& r) { return p.a < r.a; });
    w.s_prime = fmins.front();
  }
  return w;
}

namespace {

Heap exchange(const Heap& f, const WClass& w) {
  std::vector<Segment> mins = minima(f);
  Heap f_prime = remove_minima(f, mins);
  std::vector<Segment> a_part = mins;
  a_part.erase(std::find(a_part.begin(), a_part.end(), *w.s));
  Heap b_part = remove_minima(f_prime, {*w.s_prime});
  Heap out = Heap::from_pieces(a_part);
  out = out.push({w.s->a, w.s_prime->b, Label::None});
  out = out.push({w.s_prime->a, w.s->b, Label::None});
  return compose(out, b_part);
}

}  // namespace

Heap psi0(const Heap& f) {
  WClass w = classify_W(f);
  if (w.type != WType::Type0) throw Error(ErrorKind::WrongType, "heap is not of type 0 in W");
  return exchange(f, w);
}

Heap psi1(const Heap& f) {
  WClass w = classify_W(f);
  if (w.type != WType::Type1) throw Error(ErrorKind::WrongType, "heap is not of type 1 in W");
  return exchange(f, w);
}

nlohmann::json to_json(const AltSequence& s) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : s.pairs()) pairs.push_back({a, b});
  return {{"pairs", std::move(pairs)}};
}

AltSequence alt_sequence_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::ParseError, "pairs are [a, b]");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return AltSequence::validate(std::move(pairs));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad sequence JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const Ppp& p) { return to_json(p.seq()); }

Ppp ppp_from_json(const nlohmann::json& j) { return Ppp::validate(alt_sequence_from_json(j)); }

nlohmann::json to_json(const MarkedPpp& p) {
  nlohmann::json j = to_json(p.ppp);
  j["mark"] = p.j;
  return j;
}

MarkedPpp marked_ppp_from_json(const nlohmann::json& j) {
  try {
    return MarkedPpp::validate(ppp_from_json(j), j.at("mark").get<int>());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad marked PPP JSON: ") + ex.what());
  }
}

}  // namespace affheaps
