#include "affine_heaps/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "affine_heaps/error.hpp"

namespace affheaps {

AlternatingDiagram AlternatingDiagram::validate(int n, std::vector<int> cols,
                                                std::map<int, ChainType> types) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
  if (static_cast<int>(cols.size()) != n)
    throw Error(ErrorKind::WrongLength, "expected " + std::to_string(n) + " column sizes");
  for (int c : cols)
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative column size");
  std::set<int> domain;
  for (int i = 0; i < n; ++i) {
    int a = cols[i], b = cols[(i + 1) % n];
    if (std::abs(a - b) > 1)
      throw Error(ErrorKind::NotAlternating, "columns " + std::to_string(i) + " and " +
                                                 std::to_string((i + 1) % n) +
                                                 " differ by more than one");
    if (a == b && a > 0) domain.insert(i);
  }
  std::set<int> given;
  for (const auto& kv : types) given.insert(kv.first);
  if (given != domain)
    throw Error(ErrorKind::ChainTypeDomainMismatch,
                "chain types must be given exactly where adjacent columns are equal and nonempty");
  if (static_cast<int>(domain.size()) == n) {
    bool all_r = std::all_of(types.begin(), types.end(),
                             [](const auto& kv) { return kv.second == ChainType::R; });
    bool all_l = std::all_of(types.begin(), types.end(),
                             [](const auto& kv) { return kv.second == ChainType::L; });
    if (all_r) throw Error(ErrorKind::ExcludedUniformR, "equal columns with every chain of type R");
    if (all_l) throw Error(ErrorKind::ExcludedUniformL, "equal columns with every chain of type L");
  }
  return AlternatingDiagram(std::move(cols), std::move(types));
}

AlternatingDiagram AlternatingDiagram::empty(int n) {
  return validate(n, std::vector<int>(static_cast<std::size_t>(n), 0), {});
}

int size(const AlternatingDiagram& d) {
  return std::accumulate(d.col_sizes().begin(), d.col_sizes().end(), 0);
}

bool is_finite(const AlternatingDiagram& d) { return d.col_sizes()[0] == 0; }

AlternatingDiagram dual(const AlternatingDiagram& d) {
  std::map<int, ChainType> flipped;
  for (const auto& [i, t] : d.chain_types())
    flipped.emplace(i, t == ChainType::L ? ChainType::R : ChainType::L);
  return AlternatingDiagram::validate(d.rank(), d.col_sizes(), std::move(flipped));
}

bool is_self_dual(const AlternatingDiagram& d) { return dual(d) == d; }

AlternatingDiagram delta(const AffinePermutation& s) {
  const int n = s.size();
  ReducedWord w = reduced_word(s);
  if (!alternates(w, n))
    throw Error(ErrorKind::NotFullyCommutative, to_string(s) + " is not 321-avoiding");
  std::vector<int> cols(static_cast<std::size_t>(n), 0);
  for (int letter : w.letters) ++cols[letter];
  std::map<int, ChainType> types;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (cols[i] != cols[j] || cols[i] == 0) continue;
    auto first = std::find_if(w.letters.begin(), w.letters.end(),
                              [&](int l) { return l == i || l == j; });
    types.emplace(i, *first == i ? ChainType::R : ChainType::L);
  }
  return AlternatingDiagram::validate(n, std::move(cols), std::move(types));
}

namespace {

struct Poset {
  std::vector<std::pair<int, int>> elements;  // (column, occurrence from the bottom)
  std::vector<std::vector<int>> up;           // covering relations
  std::vector<int> indegree;
};

Poset build_poset(const AlternatingDiagram& d) {
  const int n = d.rank();
  const auto& cols = d.col_sizes();
  Poset p;
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + cols[i];
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < cols[i]; ++t) p.elements.emplace_back(i, t);
  p.up.resize(p.elements.size());
  p.indegree.assign(p.elements.size(), 0);
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < n && n >= 2; ++i) {
    const int j = (i + 1) % n;
    const int ci = cols[i], cj = cols[j];
    if (ci == 0 || cj == 0) continue;
    bool start_i;
    if (ci != cj) {
      start_i = ci > cj;
    } else {
      start_i = d.chain_types().at(i) == ChainType::R;
    }
    std::vector<int> chain;
    int ti = 0, tj = 0;
    bool take_i = start_i;
    while (ti < ci || tj < cj) {
      if (take_i) {
        chain.push_back(offset[i] + ti++);
      } else {
        chain.push_back(offset[j] + tj++);
      }
      take_i = !take_i;
    }
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) edges.emplace(chain[k], chain[k + 1]);
  }
  for (const auto& [a, b] : edges) {
    p.up[a].push_back(b);
    ++p.indegree[b];
  }
  return p;
}

}  // namespace

ReducedWord linear_extension(const AlternatingDiagram& d, ExtensionOrder order) {
  Poset p = build_poset(d);
  const std::size_t m = p.elements.size();
  std::vector<int> indeg = p.indegree;
  std::set<std::pair<int, int>> ready;  // (column, element index)
  for (std::size_t e = 0; e < m; ++e)
    if (indeg[e] == 0) ready.emplace(p.elements[e].first, static_cast<int>(e));
  std::vector<int> topo;
  std::vector<int> level(m, 0);
  while (!ready.empty()) {
    auto [col, e] = *ready.begin();
    ready.erase(ready.begin());
    topo.push_back(e);
    for (int f : p.up[e]) {
      level[f] = std::max(level[f], level[e] + 1);
      if (--indeg[f] == 0) ready.emplace(p.elements[f].first, f);
    }
  }
  if (topo.size() != m) throw std::logic_error("diagram relations contain a cycle");
  if (order == ExtensionOrder::ByLevel) {
    std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) {
      return std::tie(level[a], p.elements[a]) < std::tie(level[b], p.elements[b]);
    });
  }
  ReducedWord w;
  for (int e : topo) w.letters.push_back(p.elements[e].first);
  return w;
}

AffinePermutation delta_inverse(const AlternatingDiagram& d) {
  if (d.rank() == 1) return AffinePermutation::identity(1);
  return word_product(d.rank(), linear_extension(d, ExtensionOrder::ByColumn));
}

char chain_type_char(ChainType t) { return t == ChainType::L ? 'L' : 'R'; }

nlohmann::json to_json(const AlternatingDiagram& d) {
  nlohmann::json types = nlohmann::json::object();
  for (const auto& [i, t] : d.chain_types()) types[std::to_string(i)] = std::string(1, chain_type_char(t));
  return {{"n", d.rank()}, {"cols", d.col_sizes()}, {"types", types}};
}

AlternatingDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    std::map<int, ChainType> types;
    if (j.contains("types")) {
      for (const auto& [key, value] : j.at("types").items()) {
        std::string v = value.get<std::string>();
        if (v != "L" && v != "R") throw Error(ErrorKind::ParseError, "chain type must be L or R");
        types.emplace(std::stoi(key), v == "L" ? ChainType::L : ChainType::R);
      }
    }
    return AlternatingDiagram::validate(j.at("n").get<int>(), j.at("cols").get<std::vector<int>>(),
                                        std::move(types));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad diagram JSON: ") + ex.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "chain type keys must be integers");
  }
}

}  // namespace affheaps
