#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "affine_heaps/permutation.hpp"

namespace affheaps {

// R: the chain on {s_i, s_{i+1}} reads s_i s_{i+1} ... bottom to top; L: s_{i+1} s_i ...
enum class ChainType { L, R };

// Affine alternating diagram of rank n, encoded by column sizes |D_i| and the
// chain types at every i with |D_i| = |D_{i+1}| > 0 (indices mod n).
class AlternatingDiagram {
 public:
  // Throws NotAlternating, ExcludedUniformR, ExcludedUniformL, ChainTypeDomainMismatch.
  static AlternatingDiagram validate(int n, std::vector<int> cols,
                                     std::map<int, ChainType> types);
  static AlternatingDiagram empty(int n);

  int rank() const { return static_cast<int>(cols_.size()); }
  const std::vector<int>& col_sizes() const { return cols_; }
  const std::map<int, ChainType>& chain_types() const { return types_; }

  friend auto operator<=>(const AlternatingDiagram&, const AlternatingDiagram&) = default;

 private:
  AlternatingDiagram(std::vector<int> cols, std::map<int, ChainType> types)
      : cols_(std::move(cols)), types_(std::move(types)) {}
  std::vector<int> cols_;
  std::map<int, ChainType> types_;
};

int size(const AlternatingDiagram& d);
bool is_finite(const AlternatingDiagram& d);
AlternatingDiagram dual(const AlternatingDiagram& d);
bool is_self_dual(const AlternatingDiagram& d);

// Throws NotFullyCommutative when the letters of the reduced word do not alternate.
AlternatingDiagram delta(const AffinePermutation& s);
AffinePermutation delta_inverse(const AlternatingDiagram& d);

enum class ExtensionOrder { ByColumn, ByLevel };
// Generator indices of a linear extension of the diagram poset, bottom to top.
ReducedWord linear_extension(const AlternatingDiagram& d, ExtensionOrder order);

char chain_type_char(ChainType t);
nlohmann::json to_json(const AlternatingDiagram& d);
AlternatingDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace affheaps
