#pragma once

#include <string>
#include <utility>
#include <vector>

#include "affine_heaps/heap.hpp"
#include "affine_heaps/series.hpp"

namespace affheaps {

struct Edge {
  int from = 0;
  int to = 0;
  std::string label;
  Exponent weight;
};

class Digraph {
 public:
  int add_vertex(std::string name);
  int add_edge(int from, int to, std::string label = {}, Exponent weight = {});

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(v); }
  int vertex(const std::string& name) const;
  const Edge& edge(int id) const { return edges_.at(id); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  // First edge from -> to carrying the label; throws InvalidWalk if absent.
  int find_edge(int from, int to, const std::string& label = {}) const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

struct Path {
  int start = 0;
  std::vector<int> edges;
  friend bool operator==(const Path&, const Path&) = default;
};

// Elementary cycle, rotated so that its first edge leaves the smallest vertex.
struct Cycle {
  std::vector<int> edges;
  std::vector<int> vertices;  // sorted
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

bool concurrent(const Cycle& a, const Cycle& b);
using CycleHeap = BasicHeap<Cycle>;

Cycle make_cycle(const Digraph& g, std::vector<int> edges);
std::vector<int> path_vertices(const Digraph& g, const Path& p);
// Path from a vertex-name sequence, taking the first matching edge at each step.
Path path_from_names(const Digraph& g, const std::vector<std::string>& names);
Exponent path_weight(const Digraph& g, const Path& p);
Exponent cycle_heap_weight(const Digraph& g, const CycleHeap& h);

// Throws InvalidWalk if consecutive edges do not chain.
std::pair<Path, CycleHeap> psi_cycles(const Digraph& g, const Path& p);
// Throws ConditionViolated if a maximal cycle misses eta or eta is not self-avoiding.
Path psi_cycles_inverse(const Digraph& g, const Path& eta, const CycleHeap& h);

std::string cycle_name(const Digraph& g, const Cycle& c);

}  // namespace affheaps
