#include "affine_heaps/cycles.hpp"

#include <algorithm>
#include <set>

#include "affine_heaps/error.hpp"

namespace affheaps {

int Digraph::add_vertex(std::string name) {
  names_.push_back(std::move(name));
  return vertex_count() - 1;
}

int Digraph::add_edge(int from, int to, std::string label, Exponent weight) {
  if (from < 0 || to < 0 || from >= vertex_count() || to >= vertex_count())
    throw Error(ErrorKind::InvalidArgument, "edge endpoint is not a vertex");
  edges_.push_back({from, to, std::move(label), weight});
  return edge_count() - 1;
}

int Digraph::vertex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorKind::InvalidWalk, "unknown vertex " + name);
  return static_cast<int>(it - names_.begin());
}

int Digraph::find_edge(int from, int to, const std::string& label) const {
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    if (e.from == from && e.to == to && (label.empty() || e.label == label)) return i;
  }
  throw Error(ErrorKind::InvalidWalk, "no edge " + std::to_string(from) + " -> " +
                                          std::to_string(to) +
                                          (label.empty() ? "" : " labeled " + label));
}

bool concurrent(const Cycle& a, const Cycle& b) {
  auto i = a.vertices.begin();
  auto j = b.vertices.begin();
  while (i != a.vertices.end() && j != b.vertices.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

Cycle make_cycle(const Digraph& g, std::vector<int> edges) {
  if (edges.empty()) throw Error(ErrorKind::InvalidArgument, "empty cycle");
  std::size_t best = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (g.edge(edges[i]).to != g.edge(edges[(i + 1) % edges.size()]).from)
      throw Error(ErrorKind::InvalidWalk, "cycle edges do not chain");
    if (g.edge(edges[i]).from < g.edge(edges[best]).from) best = i;
  }
  std::rotate(edges.begin(), edges.begin() + static_cast<long>(best), edges.end());
  Cycle c;
  c.edges = std::move(edges);
  for (int e : c.edges) c.vertices.push_back(g.edge(e).from);
  std::sort(c.vertices.begin(), c.vertices.end());
  if (std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end())
    throw Error(ErrorKind::InvalidArgument, "cycle is not elementary");
  return c;
}

std::vector<int> path_vertices(const Digraph& g, const Path& p) {
  std::vector<int> vs{p.start};
  for (int e : p.edges) {
    if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::InvalidWalk, "unknown edge id");
    if (g.edge(e).from != vs.back()) throw Error(ErrorKind::InvalidWalk, "edges do not chain");
    vs.push_back(g.edge(e).to);
  }
  return vs;
}

Path path_from_names(const Digraph& g, const std::vector<std::string>& names) {
  if (names.empty()) throw Error(ErrorKind::InvalidWalk, "empty vertex sequence");
  Path p{g.vertex(names.front()), {}};
  for (std::size_t i = 1; i < names.size(); ++i)
    p.edges.push_back(g.find_edge(g.vertex(names[i - 1]), g.vertex(names[i])));
  return p;
}

Exponent path_weight(const Digraph& g, const Path& p) {
  Exponent w;
  for (int e : p.edges) w = w + g.edge(e).weight;
  return w;
}

Exponent cycle_heap_weight(const Digraph& g, const CycleHeap& h) {
  Exponent w;
  for (const Cycle& c : h.pieces())
    for (int e : c.edges) w = w + g.edge(e).weight;
  return w;
}

std::pair<Path, CycleHeap> psi_cycles(const Digraph& g, const Path& p) {
  if (p.start < 0 || p.start >= g.vertex_count())
    throw Error(ErrorKind::InvalidWalk, "start is not a vertex");
  path_vertices(g, p);
  std::vector<int> eta_vertices{p.start};
  std::vector<int> eta_edges;
  std::vector<Cycle> stacked;
  for (int e : p.edges) {
    const int v = g.edge(e).to;
    auto hit = std::find(eta_vertices.begin(), eta_vertices.end(), v);
    if (hit == eta_vertices.end()) {
      eta_vertices.push_back(v);
      eta_edges.push_back(e);
      continue;
    }
    const auto k = static_cast<std::size_t>(hit - eta_vertices.begin());
    std::vector<int> cyc(eta_edges.begin() + static_cast<long>(k), eta_edges.end());
    cyc.push_back(e);
    eta_edges.resize(k);
    eta_vertices.resize(k + 1);
    stacked.push_back(make_cycle(g, std::move(cyc)));
  }
  return {Path{p.start, std::move(eta_edges)}, CycleHeap::from_pieces(stacked)};
}

Path psi_cycles_inverse(const Digraph& g, const Path& eta, const CycleHeap& h) {
  std::vector<int> eta_vertices = path_vertices(g, eta);
  {
    auto sorted = eta_vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::ConditionViolated, "path is not self-avoiding");
  }
  std::set<int> on_eta(eta_vertices.begin(), eta_vertices.end());
  for (const Cycle& c : maxima(h)) {
    bool meets = std::any_of(c.vertices.begin(), c.vertices.end(),
                             [&](int v) { return on_eta.count(v) > 0; });
    if (!meets) throw Error(ErrorKind::ConditionViolated, "a maximal cycle misses the path");
  }

  std::vector<int> eta_edges = eta.edges;
  CycleHeap heap = h;
  std::vector<int> consumed;  // original path edges, last one first
  while (!heap.empty() || !eta_edges.empty()) {
    const int v = eta_vertices.back();
    std::set<int> on_path(eta_vertices.begin(), eta_vertices.end());
    const Cycle* closing = nullptr;
    auto top = maxima(heap);
    for (const Cycle& c : top) {
      if (!std::binary_search(c.vertices.begin(), c.vertices.end(), v)) continue;
      bool only_v = std::all_of(c.vertices.begin(), c.vertices.end(),
                                [&](int u) { return u == v || !on_path.count(u); });
      if (only_v) closing = &c;
    }
    if (closing) {
      // Undo the creation of this cycle: walk it from v, the arc back into v was consumed last.
      const Cycle c = *closing;
      heap = remove_maximal(heap, c);
      std::size_t at = 0;
      while (g.edge(c.edges[at]).from != v) ++at;
      const std::size_t len = c.edges.size();
      for (std::size_t s = 0; s + 1 < len; ++s) {
        int e = c.edges[(at + s) % len];
        eta_edges.push_back(e);
        eta_vertices.push_back(g.edge(e).to);
      }
      consumed.push_back(c.edges[(at + len - 1) % len]);
      continue;
    }
    if (eta_edges.empty())
      throw Error(ErrorKind::ConditionViolated, "cycles cannot be reinserted into the path");
    consumed.push_back(eta_edges.back());
    eta_edges.pop_back();
    eta_vertices.pop_back();
  }
  std::reverse(consumed.begin(), consumed.end());
  return Path{eta_vertices.front(), std::move(consumed)};
}

std::string cycle_name(const Digraph& g, const Cycle& c) {
  std::string out = "(";
  for (int e : c.edges) out += g.name(g.edge(e).from);
  return out + ")";
}

}  // namespace affheaps
