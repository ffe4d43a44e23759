#include "affine_heaps/monodimer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "affine_heaps/error.hpp"

namespace affheaps {

int end_vertex(const Walk& w) {
  int v = w.start;
  for (const Step& s : w.steps) {
    if (s.kind == StepKind::Up) ++v;
    if (s.kind == StepKind::Down) --v;
  }
  return v;
}

int area(const Walk& w) {
  int v = w.start, a = 0;
  for (const Step& s : w.steps) {
    a += v;
    if (s.kind == StepKind::Up) ++v;
    if (s.kind == StepKind::Down) --v;
  }
  return a;
}

bool is_closed(const Walk& w) { return end_vertex(w) == w.start; }

void validate_walk(const Walk& w, WalkGraph g) {
  if (w.start < 0) throw Error(ErrorKind::InvalidWalk, "negative start vertex");
  int v = w.start;
  for (const Step& s : w.steps) {
    switch (s.kind) {
      case StepKind::Loop:
        if (s.label == Label::None) throw Error(ErrorKind::InvalidWalk, "loop without a label");
        if (v == 0 && s.label == Label::R && g == WalkGraph::G)
          throw Error(ErrorKind::InvalidWalk, "no R loop at vertex 0");
        break;
      case StepKind::Up:
        if (s.label != Label::None) throw Error(ErrorKind::InvalidWalk, "labeled up step");
        ++v;
        break;
      case StepKind::Down:
        if (s.label != Label::None) throw Error(ErrorKind::InvalidWalk, "labeled down step");
        if (v == 0) throw Error(ErrorKind::InvalidWalk, "down step below vertex 0");
        --v;
        break;
    }
  }
}

bool is_exceptional(const Walk& w) {
  if (w.start <= 0 || w.steps.empty()) return false;
  const Step& first = w.steps.front();
  if (first.kind != StepKind::Loop) return false;
  return std::all_of(w.steps.begin(), w.steps.end(), [&](const Step& s) { return s == first; });
}

Walk phi(const AlternatingDiagram& d) {
  const int n = d.rank();
  const auto& cols = d.col_sizes();
  Walk w{cols[0], {}};
  for (int i = 0; i < n; ++i) {
    const int c = cols[i], nxt = cols[(i + 1) % n];
    if (nxt == c + 1) {
      w.steps.push_back({StepKind::Up, Label::None});
    } else if (nxt == c - 1) {
      w.steps.push_back({StepKind::Down, Label::None});
    } else if (c == 0) {
      w.steps.push_back({StepKind::Loop, Label::L});
    } else {
      ChainType t = d.chain_types().at(i);
      w.steps.push_back({StepKind::Loop, t == ChainType::L ? Label::L : Label::R});
    }
  }
  return w;
}

AlternatingDiagram phi_inverse(const Walk& w) {
  validate_walk(w, WalkGraph::G);
  if (!is_closed(w)) throw Error(ErrorKind::InvalidWalk, "walk is not closed");
  if (w.steps.empty()) throw Error(ErrorKind::InvalidArgument, "a diagram needs rank at least 1");
  if (is_exceptional(w))
    throw Error(ErrorKind::ExceptionalWalk, "identical loops at one positive vertex");
  const int n = static_cast<int>(w.steps.size());
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::map<int, ChainType> types;
  int v = w.start;
  for (int i = 0; i < n; ++i) {
    cols[i] = v;
    const Step& s = w.steps[i];
    if (s.kind == StepKind::Up) ++v;
    if (s.kind == StepKind::Down) --v;
    if (s.kind == StepKind::Loop && v > 0)
      types.emplace(i, s.label == Label::L ? ChainType::L : ChainType::R);
  }
  return AlternatingDiagram::validate(n, std::move(cols), std::move(types));
}

Exponent md_weight(const Segment& s) {
  if (s.a == s.b) return {1, 0, s.a};
  if (s.b != s.a + 1) throw Error(ErrorKind::InvalidArgument, "not a monomer or dimer");
  return {2, 0, s.a + s.b};
}

Exponent md_weight(const Heap& h) {
  Exponent w;
  for (const Segment& s : h.pieces()) w = w + md_weight(s);
  return w;
}

PieceUniverse<Segment> md_universe(int max_abscissa, WalkGraph g) {
  PieceUniverse<Segment> u;
  for (int i = 0; i <= max_abscissa; ++i) {
    Segment l{i, i, Label::L};
    u.push_back({l, md_weight(l)});
    if (i > 0 || g == WalkGraph::GPrime) {
      Segment r{i, i, Label::R};
      u.push_back({r, md_weight(r)});
    }
    if (i < max_abscissa) {
      Segment d{i, i + 1, Label::None};
      u.push_back({d, md_weight(d)});
    }
  }
  return u;
}

bool in_col(const MarkedPyramid& p) {
  auto pieces = p.pyramid.pieces();
  if (pieces.empty()) return false;
  const Segment& f = pieces.front();
  if (f.a != f.b || f.a <= 0) return false;
  return std::all_of(pieces.begin(), pieces.end(), [&](const Segment& s) { return s == f; });
}

Digraph walk_digraph(int max_vertex, WalkGraph g) {
  Digraph d;
  for (int i = 0; i <= max_vertex; ++i) d.add_vertex(std::to_string(i));
  for (int i = 0; i <= max_vertex; ++i) {
    Exponent w{1, 0, i};
    d.add_edge(i, i, "L", w);
    if (i > 0 || g == WalkGraph::GPrime) d.add_edge(i, i, "R", w);
    if (i < max_vertex) d.add_edge(i, i + 1, "U", w);
    if (i > 0) d.add_edge(i, i - 1, "D", w);
  }
  return d;
}

Path walk_to_path(const Digraph& g, const Walk& w) {
  Path p{w.start, {}};
  int v = w.start;
  for (const Step& s : w.steps) {
    switch (s.kind) {
      case StepKind::Loop:
        p.edges.push_back(g.find_edge(v, v, s.label == Label::L ? "L" : "R"));
        break;
      case StepKind::Up:
        p.edges.push_back(g.find_edge(v, v + 1, "U"));
        ++v;
        break;
      case StepKind::Down:
        p.edges.push_back(g.find_edge(v, v - 1, "D"));
        --v;
        break;
    }
  }
  return p;
}

Walk path_to_walk(const Digraph& g, const Path& p) {
  Walk w{p.start, {}};
  for (int id : p.edges) {
    const Edge& e = g.edge(id);
    if (e.label == "U") {
      w.steps.push_back({StepKind::Up, Label::None});
    } else if (e.label == "D") {
      w.steps.push_back({StepKind::Down, Label::None});
    } else {
      w.steps.push_back({StepKind::Loop, e.label == "L" ? Label::L : Label::R});
    }
  }
  return w;
}

Segment cycle_to_piece(const Digraph& g, const Cycle& c) {
  if (c.edges.size() == 1) {
    const Edge& e = g.edge(c.edges[0]);
    return {e.from, e.from, e.label == "L" ? Label::L : Label::R};
  }
  if (c.edges.size() == 2) return {c.vertices[0], c.vertices[1], Label::None};
  throw std::logic_error("walk graph cycles have length one or two");
}

namespace {

Cycle piece_to_cycle(const Digraph& g, const Segment& s) {
  if (s.a == s.b) {
    if (s.label == Label::None) throw Error(ErrorKind::InvalidArgument, "monomer without label");
    return make_cycle(g, {g.find_edge(s.a, s.a, s.label == Label::L ? "L" : "R")});
  }
  if (s.b != s.a + 1 || s.label != Label::None)
    throw Error(ErrorKind::InvalidArgument, "not a monomer or dimer");
  return make_cycle(g, {g.find_edge(s.a, s.b, "U"), g.find_edge(s.b, s.a, "D")});
}

int max_vertex(const Walk& w) {
  int v = w.start, m = w.start;
  for (const Step& s : w.steps) {
    if (s.kind == StepKind::Up) ++v;
    if (s.kind == StepKind::Down) --v;
    m = std::max(m, v);
  }
  return m;
}

}  // namespace

MarkedPyramid psi_walk(const Walk& w, WalkGraph gv) {
  validate_walk(w, gv);
  if (!is_closed(w)) throw Error(ErrorKind::InvalidWalk, "walk is not closed");
  Digraph g = walk_digraph(max_vertex(w) + 1, gv);
  auto [eta, cycles] = psi_cycles(g, walk_to_path(g, w));
  std::vector<Segment> pieces;
  for (const Cycle& c : cycles.pieces()) pieces.push_back(cycle_to_piece(g, c));
  return MarkedPyramid{Heap::from_pieces(pieces), eta.start};
}

Walk psi_walk_inverse(const MarkedPyramid& p, WalkGraph gv) {
  int top = p.mark;
  for (const Segment& s : p.pyramid.pieces()) {
    if (s.a < 0) throw Error(ErrorKind::InvalidArgument, "negative abscissa");
    top = std::max(top, s.b);
  }
  if (p.mark < 0) throw Error(ErrorKind::InvalidArgument, "negative mark");
  Digraph g = walk_digraph(top + 1, gv);
  std::vector<Cycle> cycles;
  for (const Segment& s : p.pyramid.pieces()) cycles.push_back(piece_to_cycle(g, s));
  Path path = psi_cycles_inverse(g, Path{p.mark, {}}, CycleHeap::from_pieces(cycles));
  return path_to_walk(g, path);
}

MarkedPyramid upsilon(const AlternatingDiagram& d) { return psi_walk(phi(d), WalkGraph::G); }

AlternatingDiagram upsilon_inverse(const MarkedPyramid& p) {
  return phi_inverse(psi_walk_inverse(p, WalkGraph::G));
}

PieceUniverse<Segment> trivial_model_universe(TrivialModel m, int max_abscissa) {
  switch (m) {
    case TrivialModel::Md: return md_universe(max_abscissa, WalkGraph::GPrime);
    case TrivialModel::MdStar: return md_universe(max_abscissa, WalkGraph::G);
    case TrivialModel::DimersOnly:
    case TrivialModel::LAtZeroOnly: {
      PieceUniverse<Segment> u;
      if (m == TrivialModel::LAtZeroOnly) {
        Segment l{0, 0, Label::L};
        u.push_back({l, md_weight(l)});
      }
      for (int i = 0; i < max_abscissa; ++i) {
        Segment d{i, i + 1, Label::None};
        u.push_back({d, md_weight(d)});
      }
      return u;
    }
  }
  return {};
}

TruncatedSeries signed_trivial_sum(TrivialModel m, const Truncation& t) {
  auto u = trivial_model_universe(m, std::max(t.q, 0) + 1);
  for (auto& wp : u) wp.weight.y = 0;
  return signed_trivial_series<Segment>(u, t, [](const Heap&) { return Rational(1); });
}

Heap involution_I(const Heap& trivial) {
  if (!is_trivial(trivial)) throw Error(ErrorKind::InvalidArgument, "heap is not trivial");
  std::vector<Segment> pieces = trivial.pieces();
  auto has = [&](const Segment& s) {
    return std::find(pieces.begin(), pieces.end(), s) != pieces.end();
  };
  int lo = 0, hi = -1;
  for (const Segment& s : pieces) hi = std::max(hi, s.b);
  for (int i = lo; i < hi; ++i) {
    Segment dimer{i, i + 1, Label::None};
    Segment left{i, i, Label::L};
    Segment right{i + 1, i + 1, Label::R};
    if (has(dimer)) {
      pieces.erase(std::find(pieces.begin(), pieces.end(), dimer));
      pieces.push_back(left);
      pieces.push_back(right);
      return Heap::from_pieces(pieces);
    }
    if (has(left) && has(right)) {
      pieces.erase(std::find(pieces.begin(), pieces.end(), left));
      pieces.erase(std::find(pieces.begin(), pieces.end(), right));
      pieces.push_back(dimer);
      return Heap::from_pieces(pieces);
    }
  }
  throw Error(ErrorKind::NoActiveSite, "no dimer and no L monomer followed by an R monomer");
}

namespace {

void check_letters(std::string_view w, std::string_view allowed) {
  for (char c : w)
    if (allowed.find(c) == std::string_view::npos)
      throw Error(ErrorKind::InvalidArgument, "unexpected letter '" + std::string(1, c) + "'");
}

std::string strip_zeros(std::string w) {
  while (!w.empty() && w.back() == '0') w.pop_back();
  return w;
}

// Lengths of the letter runs between consecutive zeros.
std::vector<int> runs(std::string_view w) {
  std::vector<int> out{0};
  for (char c : w) {
    if (c == '0') {
      out.push_back(0);
    } else {
      ++out.back();
    }
  }
  return out;
}

}  // namespace

std::pair<std::string, std::string> projection_Pr(std::string_view w) {
  check_letters(w, "0LR");
  if (w.find("LR") != std::string_view::npos)
    throw Error(ErrorKind::ForbiddenFactor, "word contains the factor LR");
  std::string r, l;
  for (char c : w) {
    if (c != 'L') r += c;
    if (c != 'R') l += c;
  }
  return {strip_zeros(r), strip_zeros(l)};
}

std::string projection_Pr_inverse(std::string_view r_word, std::string_view l_word) {
  check_letters(r_word, "0R");
  check_letters(l_word, "0L");
  std::vector<int> rr = runs(r_word), ll = runs(l_word);
  std::size_t blocks = std::max(rr.size(), ll.size());
  rr.resize(blocks, 0);
  ll.resize(blocks, 0);
  std::string w;
  for (std::size_t i = 0; i < blocks; ++i) {
    if (i) w += '0';
    w.append(static_cast<std::size_t>(rr[i]), 'R');
    w.append(static_cast<std::size_t>(ll[i]), 'L');
  }
  return strip_zeros(w);
}

TruncatedSeries signed_word_sum(const Truncation& t) {
  TruncatedSeries::Terms terms;
  // Letters at positions 0..Q; the previous letter decides whether R may follow.
  std::function<void(int, char, int, int)> go = [&](int pos, char prev, int k, int sum) {
    if (pos > t.q) {
      terms[Exponent{k, 0, sum}] += (k % 2) ? -1 : 1;
      return;
    }
    go(pos + 1, '0', k, sum);
    if (k + 1 <= t.x && sum + pos <= t.q) {
      go(pos + 1, 'L', k + 1, sum + pos);
      if (prev != 'L') go(pos + 1, 'R', k + 1, sum + pos);
    }
  };
  go(0, '0', 0, 0);
  return TruncatedSeries(t, std::move(terms));
}

TruncatedSeries signed_partition_pair_sum(const Truncation& t) {
  // Sets of distinct nonnegative parts, tallied by (length, sum).
  std::map<std::pair<int, int>, long> sets;
  std::function<void(int, int, int)> go = [&](int next, int len, int sum) {
    ++sets[{len, sum}];
    for (int p = next; sum + p <= t.q && len + 1 <= t.x; ++p) go(p + 1, len + 1, sum + p);
  };
  go(0, 0, 0);
  TruncatedSeries::Terms terms;
  for (const auto& [a, ca] : sets)
    for (const auto& [b, cb] : sets) {
      int k = a.first + b.first;
      int d = a.second + b.second + a.first * b.first;
      if (k > t.x || d > t.q) continue;
      terms[Exponent{k, 0, d}] += Rational((k % 2) ? -ca * cb : ca * cb);
    }
  return TruncatedSeries(t, std::move(terms));
}

namespace {

const char* kind_name(StepKind k) {
  switch (k) {
    case StepKind::Up: return "up";
    case StepKind::Down: return "down";
    case StepKind::Loop: return "loop";
  }
  return "loop";
}

}  // namespace

nlohmann::json to_json(const Walk& w) {
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& s : w.steps) {
    nlohmann::json label = nullptr;
    if (s.label != Label::None) label = std::string(1, label_char(s.label));
    steps.push_back({{"kind", kind_name(s.kind)}, {"label", label}});
  }
  return {{"start", w.start}, {"steps", std::move(steps)}};
}

Walk walk_from_json(const nlohmann::json& j) {
  try {
    Walk w{j.at("start").get<int>(), {}};
    for (const auto& s : j.at("steps")) {
      Step st;
      std::string kind = s.at("kind").get<std::string>();
      if (kind == "up") {
        st.kind = StepKind::Up;
      } else if (kind == "down") {
        st.kind = StepKind::Down;
      } else if (kind == "loop") {
        st.kind = StepKind::Loop;
      } else {
        throw Error(ErrorKind::ParseError, "step kind must be up, down or loop");
      }
      if (s.contains("label") && !s.at("label").is_null()) {
        std::string l = s.at("label").get<std::string>();
        if (l != "L" && l != "R") throw Error(ErrorKind::ParseError, "label must be L, R or null");
        st.label = l == "L" ? Label::L : Label::R;
      }
      w.steps.push_back(st);
    }
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad walk JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const MarkedPyramid& p) {
  nlohmann::json j = to_json(p.pyramid);
  j["mark"] = p.mark;
  return j;
}

MarkedPyramid marked_pyramid_from_json(const nlohmann::json& j) {
  try {
    return MarkedPyramid{heap_from_json(j), j.at("mark").get<int>()};
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad marked pyramid JSON: ") + ex.what());
  }
}

std::string to_string(const Walk& w) {
  std::string out = std::to_string(w.start);
  int v = w.start;
  for (const Step& s : w.steps) {
    if (s.kind == StepKind::Up) ++v;
    if (s.kind == StepKind::Down) --v;
    out += s.kind == StepKind::Loop ? std::string(" ") + label_char(s.label) + " " : " - ";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace affheaps
