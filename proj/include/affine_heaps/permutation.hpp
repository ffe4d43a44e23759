#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace affheaps {

// Bijection s of Z with s(i + n) = s(i) + n, stored by its window s(1..n).
class AffinePermutation {
 public:
  // Throws NotBijective / WrongSum / WrongLength.
  static AffinePermutation from_window(int n, std::vector<std::int64_t> values);
  static AffinePermutation identity(int n);
  // s_0 = [0, 2, ..., n-1, n+1]; s_i swaps i and i+1. Requires n >= 2.
  static AffinePermutation generator(int n, int i);

  int size() const { return static_cast<int>(window_.size()); }
  const std::vector<std::int64_t>& window() const { return window_; }
  std::int64_t operator()(std::int64_t i) const;

  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  explicit AffinePermutation(std::vector<std::int64_t> w) : window_(std::move(w)) {}
  std::vector<std::int64_t> window_;
};

struct ReducedWord {
  std::vector<int> letters;
  std::size_t length() const { return letters.size(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

std::int64_t apply(const AffinePermutation& s, std::int64_t i);
// (s * t)(i) = s(t(i)).
AffinePermutation compose(const AffinePermutation& s, const AffinePermutation& t);
AffinePermutation inverse(const AffinePermutation& s);
// s * s_i, i.e. swap of window positions i and i+1 (position 0 for i = 0).
AffinePermutation times_generator(const AffinePermutation& s, int i);
AffinePermutation word_product(int n, const ReducedWord& w);

std::int64_t inversion_number(const AffinePermutation& s);
// Smallest descent first, peeled from the right: s = s_{w1} s_{w2} ... s_{wk}.
ReducedWord reduced_word(const AffinePermutation& s);

bool is_321_avoiding_by_pattern(const AffinePermutation& s);
bool is_321_avoiding_by_alternation(const AffinePermutation& s);
// Runs both tests and throws std::logic_error if they disagree.
bool is_321_avoiding(const AffinePermutation& s);
// Letters s_i and s_{i+1} alternate in w for every i (indices mod n).
bool alternates(const ReducedWord& w, int n);

bool is_involution(const AffinePermutation& s);
bool is_finite(const AffinePermutation& s);

std::string to_string(const AffinePermutation& s);
AffinePermutation parse_window(std::string_view text);
nlohmann::json to_json(const AffinePermutation& s);
AffinePermutation permutation_from_json(const nlohmann::json& j);

}  // namespace affheaps
