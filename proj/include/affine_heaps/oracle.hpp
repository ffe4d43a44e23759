#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "affine_heaps/diagram.hpp"
#include "affine_heaps/monodimer.hpp"
#include "affine_heaps/permutation.hpp"
#include "affine_heaps/ppp.hpp"

namespace affheaps {

enum class PermClass { Affine, Finite, AffineInvolution, FiniteInvolution };

// "affine", "finite", "affine-involution", "finite-involution"; throws InvalidArgument.
PermClass parse_perm_class(std::string_view name);
std::string perm_class_name(PermClass c);

struct CountTable {
  int n = 0;
  PermClass cls = PermClass::Affine;
  std::map<int, std::int64_t> rows;  // length -> count
  std::int64_t total() const;
};

// 321-avoiding affine permutations of rank n with length <= max_len, by BFS in the weak order.
std::vector<AffinePermutation> fc_elements(int n, int max_len);
bool in_class(const AffinePermutation& s, PermClass c);
// Throws InvalidArgument for n < 2 or max_len < 0.
CountTable enumerate_fc_elements(int n, int max_len, PermClass c);
// Every class from one BFS.
std::map<PermClass, CountTable> enumerate_fc_all(int n, int max_len);

std::vector<AlternatingDiagram> enumerate_diagrams(int n, int max_size);
// Closed walks with the given number of steps and area <= max_area.
std::vector<Walk> enumerate_walks(WalkGraph g, int length, int max_area);
// Sequences in the wrap class with 1 <= width <= max_width and area <= max_area.
std::vector<Ppp> enumerate_ppp(int max_width, int max_area);

std::string to_csv(const CountTable& t);
nlohmann::json to_json(const CountTable& t);

}  // namespace affheaps
