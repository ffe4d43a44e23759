#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "affine_heaps/diagram.hpp"
#include "affine_heaps/heap.hpp"
#include "affine_heaps/series.hpp"

namespace affheaps {

// Pairs (a_i, b_i) with 1 <= a_i <= b_i and a_i <= b_{i-1}.
class AltSequence {
 public:
  AltSequence() = default;
  // Throws InvalidSequence.
  static AltSequence validate(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int width() const { return static_cast<int>(pairs_.size()); }
  bool wraps() const { return !pairs_.empty() && pairs_.front().first <= pairs_.back().second; }

  friend auto operator<=>(const AltSequence&, const AltSequence&) = default;

 private:
  explicit AltSequence(std::vector<std::pair<int, int>> p) : pairs_(std::move(p)) {}
  std::vector<std::pair<int, int>> pairs_;
};

// Nonempty sequence with a_1 <= b_m; the mark c is a_1.
class Ppp {
 public:
  // Throws InvalidSequence.
  static Ppp validate(AltSequence seq);
  const AltSequence& seq() const { return seq_; }
  friend auto operator<=>(const Ppp&, const Ppp&) = default;

 private:
  explicit Ppp(AltSequence s) : seq_(std::move(s)) {}
  AltSequence seq_;
};

struct MarkedPpp {
  Ppp ppp;
  int j = 0;
  // Throws InvalidSequence unless a_1 <= j <= b_1.
  static MarkedPpp validate(Ppp p, int j);
  friend auto operator<=>(const MarkedPpp&, const MarkedPpp&) = default;
};

Heap f_to_heap(const AltSequence& s);
AltSequence f_inverse(const Heap& h);

bool in_H_tilde(const Heap& h);

struct PppStatistics {
  int width = 0;
  int height = 0;
  int area = 0;
  friend bool operator==(const PppStatistics&, const PppStatistics&) = default;
};
PppStatistics statistics(const Ppp& p);
// x^height y^width q^area.
Exponent ppp_weight(const Ppp& p);

// x^(b-a) y q^b per segment.
Exponent segment_weight(const Segment& s);
Exponent segment_weight(const Heap& h);
// Segments [a, b] with 1 <= a <= b <= max_b.
PieceUniverse<Segment> segment_universe(int max_b);

AltSequence half_turn(const AltSequence& s);
Heap half_turn(const Heap& h);

bool is_rectangular(const Ppp& p);
// Throws RectangularPpp for rectangular shapes of height at least 2.
AlternatingDiagram marked_ppp_to_diagram(const MarkedPpp& mp);
MarkedPpp diagram_to_marked_ppp(const AlternatingDiagram& d);

enum class WType { Type0, Type1, NotInW };

struct WClass {
  WType type = WType::NotInW;
  std::vector<Segment> u1;
  std::vector<Segment> u2;
  // Type0: (S0, S0'); Type1: (S1, S1').
  std::optional<Segment> s;
  std::optional<Segment> s_prime;
};

// Throws TrivialHeap.
WClass classify_W(const Heap& f);
// Throws WrongType.
Heap psi0(const Heap& f);
Heap psi1(const Heap& f);

nlohmann::json to_json(const AltSequence& s);
AltSequence alt_sequence_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Ppp& p);
Ppp ppp_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MarkedPpp& p);
MarkedPpp marked_ppp_from_json(const nlohmann::json& j);

}  // namespace affheaps
