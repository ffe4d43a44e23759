#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "affine_heaps/cycles.hpp"
#include "affine_heaps/diagram.hpp"
#include "affine_heaps/heap.hpp"
#include "affine_heaps/series.hpp"

namespace affheaps {

enum class StepKind { Up, Down, Loop };

struct Step {
  StepKind kind = StepKind::Loop;
  Label label = Label::None;  // L or R for loops only
  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

// Walk on the vertex set {0, 1, 2, ...}: loops L/R, up i -> i+1, down i+1 -> i.
struct Walk {
  int start = 0;
  std::vector<Step> steps;
  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

// G has only the L loop at vertex 0; GPrime also has an R loop there.
enum class WalkGraph { G, GPrime };

int end_vertex(const Walk& w);
int area(const Walk& w);
bool is_closed(const Walk& w);
// Throws InvalidWalk for a step below 0, a bad label, or a forbidden loop at 0.
void validate_walk(const Walk& w, WalkGraph g);
// Closed walk of positive length made of identical loops at one positive vertex.
bool is_exceptional(const Walk& w);

Walk phi(const AlternatingDiagram& d);
// Throws ExceptionalWalk on exceptional walks and InvalidWalk for open walks.
AlternatingDiagram phi_inverse(const Walk& w);

// Monomer [i] (label L/R) or dimer [i, i+1].
Exponent md_weight(const Segment& s);
Exponent md_weight(const Heap& h);
PieceUniverse<Segment> md_universe(int max_abscissa, WalkGraph g);

struct MarkedPyramid {
  Heap pyramid;
  int mark = 0;
  friend bool operator==(const MarkedPyramid&, const MarkedPyramid&) = default;
};

// All pieces are monomers at one positive abscissa sharing one label.
bool in_col(const MarkedPyramid& p);

// Walk graph on vertices 0..max_vertex with edge weights x q^(start vertex).
Digraph walk_digraph(int max_vertex, WalkGraph g);
Path walk_to_path(const Digraph& g, const Walk& w);
Walk path_to_walk(const Digraph& g, const Path& p);
Segment cycle_to_piece(const Digraph& g, const Cycle& c);

// Heaps of cycles on the walk graph, read as marked pyramids of monomers and dimers.
MarkedPyramid psi_walk(const Walk& w, WalkGraph g);
Walk psi_walk_inverse(const MarkedPyramid& p, WalkGraph g);

MarkedPyramid upsilon(const AlternatingDiagram& d);
AlternatingDiagram upsilon_inverse(const MarkedPyramid& p);

enum class TrivialModel { Md, MdStar, DimersOnly, LAtZeroOnly };
PieceUniverse<Segment> trivial_model_universe(TrivialModel m, int max_abscissa);
// Sum of (-1)^|T| v(T) over trivial heaps of the model, by enumeration.
TruncatedSeries signed_trivial_sum(TrivialModel m, const Truncation& t);

// Dimer <-> (L at i, R at i+1) exchange at the smallest active site.
Heap involution_I(const Heap& trivial);

// Words over {0, L, R}; index = position.
std::pair<std::string, std::string> projection_Pr(std::string_view w);
std::string projection_Pr_inverse(std::string_view r_word, std::string_view l_word);
// Sum over LR-avoiding words of (-x)^(#letters) q^(index sum).
TruncatedSeries signed_word_sum(const Truncation& t);
// Sum over pairs of distinct-part partitions (parts >= 0) of
// (-x)^(l1 + l2) q^(|lambda| + |mu| + l1 l2).
TruncatedSeries signed_partition_pair_sum(const Truncation& t);

nlohmann::json to_json(const Walk& w);
Walk walk_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MarkedPyramid& p);
MarkedPyramid marked_pyramid_from_json(const nlohmann::json& j);
std::string to_string(const Walk& w);

}  // namespace affheaps
