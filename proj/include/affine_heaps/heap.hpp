#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine_heaps/error.hpp"
#include "affine_heaps/series.hpp"

namespace affheaps {

enum class Label : std::uint8_t { None, L, R };

// Integer segment [a, b]; monomers are segments with a == b and a label.
struct Segment {
  int a = 0;
  int b = 0;
  Label label = Label::None;

  int length() const { return b - a; }
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

inline bool concurrent(const Segment& p, const Segment& r) { return p.a <= r.b && r.a <= p.b; }

// Heap of pieces in Cartier-Foata form: layer k+1 pieces each touch some piece of
// layer k, and every layer is sorted. P needs operator<=> and a free function
// concurrent(P, P).
template <class P>
class BasicHeap {
 public:
  using Piece = P;
  using Layer = std::vector<P>;

  BasicHeap() = default;

  // Stack the pieces bottom to top.
  static BasicHeap from_pieces(const std::vector<P>& pieces) {
    BasicHeap h;
    for (const P& p : pieces) h.place(p);
    return h;
  }

  // Throws InvalidArgument unless the layers are already in normal form.
  static BasicHeap from_layers(std::vector<Layer> layers) {
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());
    for (std::size_t k = 0; k < layers.size(); ++k) {
      const Layer& layer = layers[k];
      if (layer.empty()) throw Error(ErrorKind::InvalidArgument, "empty heap layer");
      for (std::size_t i = 0; i < layer.size(); ++i)
        for (std::size_t j = i + 1; j < layer.size(); ++j)
          if (concurrent(layer[i], layer[j]))
            throw Error(ErrorKind::InvalidArgument, "concurrent pieces share a layer");
      if (k == 0) continue;
      for (const P& p : layer) {
        bool supported = std::any_of(layers[k - 1].begin(), layers[k - 1].end(),
                                     [&](const P& r) { return concurrent(p, r); });
        if (!supported) throw Error(ErrorKind::InvalidArgument, "layers are not in normal form");
      }
    }
    BasicHeap h;
    h.layers_ = std::move(layers);
    return h;
  }

  // Layers known to be in normal form and sorted.
  static BasicHeap from_normal_layers(std::vector<Layer> layers) {
    BasicHeap h;
    h.layers_ = std::move(layers);
    return h;
  }

  BasicHeap push(const P& p) const {
    BasicHeap h = *this;
    h.place(p);
    return h;
  }

  const std::vector<Layer>& layers() const { return layers_; }
  bool empty() const { return layers_.empty(); }
  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& l : layers_) s += l.size();
    return s;
  }
  // Bottom-to-top linearization.
  std::vector<P> pieces() const {
    std::vector<P> out;
    for (const auto& l : layers_) out.insert(out.end(), l.begin(), l.end());
    return out;
  }

  friend auto operator<=>(const BasicHeap&, const BasicHeap&) = default;
  friend bool operator==(const BasicHeap&, const BasicHeap&) = default;

 private:
  void place(const P& p) {
    std::size_t level = 0;
    for (std::size_t k = layers_.size(); k-- > 0;) {
      if (std::any_of(layers_[k].begin(), layers_[k].end(),
                      [&](const P& r) { return concurrent(p, r); })) {
        level = k + 1;
        break;
      }
    }
    if (level == layers_.size()) layers_.emplace_back();
    Layer& layer = layers_[level];
    layer.insert(std::lower_bound(layer.begin(), layer.end(), p), p);
  }

  std::vector<Layer> layers_;
};

using Heap = BasicHeap<Segment>;

template <class P>
BasicHeap<P> compose(const BasicHeap<P>& bottom, const BasicHeap<P>& top) {
  std::vector<P> all = bottom.pieces();
  std::vector<P> upper = top.pieces();
  all.insert(all.end(), upper.begin(), upper.end());
  return BasicHeap<P>::from_pieces(all);
}

template <class P>
std::vector<P> minima(const BasicHeap<P>& h) {
  return h.empty() ? std::vector<P>{} : h.layers().front();
}

template <class P>
std::vector<P> maxima(const BasicHeap<P>& h) {
  std::vector<P> out;
  const auto& layers = h.layers();
  for (std::size_t k = 0; k < layers.size(); ++k) {
    for (const P& p : layers[k]) {
      bool covered = false;
      for (std::size_t m = k + 1; m < layers.size() && !covered; ++m)
        covered = std::any_of(layers[m].begin(), layers[m].end(),
                              [&](const P& r) { return concurrent(p, r); });
      if (!covered) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class P>
bool is_trivial(const BasicHeap<P>& h) {
  return h.layers().size() <= 1;
}

template <class P>
bool is_pyramid(const BasicHeap<P>& h) {
  return maxima(h).size() == 1;
}

// Removes the given minimal pieces (each must lie in the bottom layer).
template <class P>
BasicHeap<P> remove_minima(const BasicHeap<P>& h, const std::vector<P>& drop) {
  if (h.empty()) {
    if (!drop.empty()) throw Error(ErrorKind::InvalidArgument, "piece is not minimal");
    return h;
  }
  std::vector<P> bottom = h.layers().front();
  for (const P& p : drop) {
    auto it = std::find(bottom.begin(), bottom.end(), p);
    if (it == bottom.end()) throw Error(ErrorKind::InvalidArgument, "piece is not minimal");
    bottom.erase(it);
  }
  std::vector<P> rest = bottom;
  for (std::size_t k = 1; k < h.layers().size(); ++k)
    rest.insert(rest.end(), h.layers()[k].begin(), h.layers()[k].end());
  return BasicHeap<P>::from_pieces(rest);
}

// Removes one maximal occurrence of p.
template <class P>
BasicHeap<P> remove_maximal(const BasicHeap<P>& h, const P& p) {
  auto mx = maxima(h);
  if (std::find(mx.begin(), mx.end(), p) == mx.end())
    throw Error(ErrorKind::InvalidArgument, "piece is not maximal");
  std::vector<typename BasicHeap<P>::Layer> layers = h.layers();
  for (std::size_t k = layers.size(); k-- > 0;) {
    auto it = std::find(layers[k].begin(), layers[k].end(), p);
    if (it != layers[k].end()) {
      layers[k].erase(it);
      break;
    }
  }
  std::vector<P> rest;
  for (const auto& l : layers) rest.insert(rest.end(), l.begin(), l.end());
  return BasicHeap<P>::from_pieces(rest);
}

template <class P>
struct WeightedPiece {
  P piece;
  Exponent weight;
};

template <class P>
using PieceUniverse = std::vector<WeightedPiece<P>>;

namespace detail {

template <class P>
class HeapWalker {
 public:
  using Visit = std::function<void(const BasicHeap<P>&, const Exponent&)>;

  HeapWalker(PieceUniverse<P> universe, const Truncation& t, std::size_t max_layers)
      : universe_(std::move(universe)), t_(t), max_layers_(max_layers) {
    for (const auto& wp : universe_)
      if (wp.weight.x <= 0 && wp.weight.y <= 0 && wp.weight.q <= 0)
        throw Error(ErrorKind::InfiniteEnumeration, "a piece has weight of degree zero");
    std::sort(universe_.begin(), universe_.end(),
              [](const auto& l, const auto& r) { return l.piece < r.piece; });
  }

  void run(const Visit& visit) {
    visit_ = &visit;
    layers_.clear();
    (*visit_)(BasicHeap<P>(), Exponent{});
    if (max_layers_ > 0) extend(Exponent{});
  }

 private:
  // Enumerate the nonempty next layers on top of layers_.
  void extend(const Exponent& w) {
    std::vector<std::size_t> chosen;
    choose(0, chosen, w);
  }

  void choose(std::size_t from, std::vector<std::size_t>& chosen, const Exponent& w) {
    for (std::size_t k = from; k < universe_.size(); ++k) {
      const auto& wp = universe_[k];
      Exponent nw = w + wp.weight;
      if (!t_.fits(nw)) continue;
      bool clash = false;
      for (std::size_t c : chosen)
        if (concurrent(universe_[c].piece, wp.piece)) {
          clash = true;
          break;
        }
      if (clash) continue;
      if (!layers_.empty()) {
        const auto& below = layers_.back();
        if (!std::any_of(below.begin(), below.end(),
                         [&](const P& r) { return concurrent(wp.piece, r); }))
          continue;
      }
      chosen.push_back(k);
      emit(chosen, nw);
      choose(k + 1, chosen, nw);
      chosen.pop_back();
    }
  }

  void emit(const std::vector<std::size_t>& chosen, const Exponent& w) {
    typename BasicHeap<P>::Layer layer;
    for (std::size_t c : chosen) layer.push_back(universe_[c].piece);
    layers_.push_back(std::move(layer));
    (*visit_)(BasicHeap<P>::from_normal_layers(layers_), w);
    if (layers_.size() < max_layers_) extend(w);
    layers_.pop_back();
  }

  PieceUniverse<P> universe_;
  Truncation t_;
  std::size_t max_layers_;
  const Visit* visit_ = nullptr;
  std::vector<typename BasicHeap<P>::Layer> layers_;
};

}  // namespace detail

// Every heap (each once, in normal form) whose weight fits in t, including the empty heap.
template <class P>
void for_each_heap(const PieceUniverse<P>& universe, const Truncation& t,
                   const std::function<void(const BasicHeap<P>&, const Exponent&)>& visit) {
  detail::HeapWalker<P> walker(universe, t, static_cast<std::size_t>(-1));
  walker.run(visit);
}

// Trivial heaps only (at most one layer).
template <class P>
void for_each_trivial_heap(const PieceUniverse<P>& universe, const Truncation& t,
                           const std::function<void(const BasicHeap<P>&, const Exponent&)>& visit) {
  detail::HeapWalker<P> walker(universe, t, 1);
  walker.run(visit);
}

template <class P>
std::vector<BasicHeap<P>> enumerate_heaps(const PieceUniverse<P>& universe, const Truncation& t) {
  std::vector<BasicHeap<P>> out;
  for_each_heap<P>(universe, t, [&](const BasicHeap<P>& h, const Exponent&) { out.push_back(h); });
  return out;
}

template <class P>
Exponent heap_weight(const PieceUniverse<P>& universe, const BasicHeap<P>& h) {
  Exponent w;
  for (const P& p : h.pieces()) {
    auto it = std::find_if(universe.begin(), universe.end(),
                           [&](const auto& wp) { return wp.piece == p; });
    if (it == universe.end()) throw Error(ErrorKind::InvalidArgument, "piece outside universe");
    w = w + it->weight;
  }
  return w;
}

// Sum over trivial heaps T of (-1)^|T| * factor(T) * v(T).
template <class P>
TruncatedSeries signed_trivial_series(
    const PieceUniverse<P>& universe, const Truncation& t,
    const std::function<Rational(const BasicHeap<P>&)>& factor) {
  TruncatedSeries::Terms terms;
  for_each_trivial_heap<P>(universe, t, [&](const BasicHeap<P>& h, const Exponent& w) {
    Rational c = factor(h);
    if (h.size() % 2) c = -c;
    terms[w] += c;
  });
  return TruncatedSeries(t, std::move(terms));
}

// Sum of v(H) over heaps H with every maximal piece in M.
template <class P>
TruncatedSeries inversion_lemma_lhs(const PieceUniverse<P>& universe, const std::set<P>& M,
                                    const Truncation& t) {
  TruncatedSeries::Terms terms;
  for_each_heap<P>(universe, t, [&](const BasicHeap<P>& h, const Exponent& w) {
    for (const P& p : maxima(h))
      if (!M.count(p)) return;
    terms[w] += 1;
  });
  return TruncatedSeries(t, std::move(terms));
}

template <class P>
TruncatedSeries inversion_lemma_rhs(const PieceUniverse<P>& universe, const std::set<P>& M,
                                    const Truncation& t) {
  auto num = signed_trivial_series<P>(universe, t, [&](const BasicHeap<P>& h) {
    for (const P& p : h.pieces())
      if (M.count(p)) return Rational(0);
    return Rational(1);
  });
  auto den = signed_trivial_series<P>(universe, t, [](const BasicHeap<P>&) { return Rational(1); });
  return num * recip(den);
}

template <class P>
TruncatedSeries pyramid_series_lhs(const PieceUniverse<P>& universe, const Truncation& t) {
  TruncatedSeries::Terms terms;
  for_each_heap<P>(universe, t, [&](const BasicHeap<P>& h, const Exponent& w) {
    if (is_pyramid(h)) terms[w] += 1;
  });
  return TruncatedSeries(t, std::move(terms));
}

template <class P>
TruncatedSeries pyramid_series_rhs(const PieceUniverse<P>& universe, const Truncation& t) {
  auto num = signed_trivial_series<P>(
      universe, t, [](const BasicHeap<P>& h) { return Rational(static_cast<long>(h.size())); });
  auto den = signed_trivial_series<P>(universe, t, [](const BasicHeap<P>&) { return Rational(1); });
  return -(num * recip(den));
}

// Segment heap statistics.
int total_length(const Heap& h);
int right_end_sum(const Heap& h);

char label_char(Label l);
nlohmann::json to_json(const Segment& s);
Segment segment_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Heap& h);
Heap heap_from_json(const nlohmann::json& j);
std::string to_string(const Segment& s);
std::string to_string(const Heap& h);

}  // namespace affheaps
