#include "affine_heaps/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "affine_heaps/error.hpp"

namespace affheaps {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

}  // namespace

AffinePermutation AffinePermutation::from_window(int n, std::vector<std::int64_t> values) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
  if (static_cast<int>(values.size()) != n)
    throw Error(ErrorKind::WrongLength, "window has " + std::to_string(values.size()) +
                                            " entries, expected " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (std::int64_t v : values) {
    auto r = static_cast<std::size_t>(mod(v, n));
    if (seen[r])
      throw Error(ErrorKind::NotBijective, "two window entries are congruent to " +
                                               std::to_string(r) + " mod " + std::to_string(n));
    seen[r] = true;
  }
  std::int64_t sum = std::accumulate(values.begin(), values.end(), std::int64_t{0});
  std::int64_t expected = static_cast<std::int64_t>(n) * (n + 1) / 2;
  if (sum != expected)
    throw Error(ErrorKind::WrongSum, "window sums to " + std::to_string(sum) + ", expected " +
                                         std::to_string(expected));
  return AffinePermutation(std::move(values));
}

AffinePermutation AffinePermutation::identity(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "rank must be at least 1");
  std::vector<std::int64_t> w(n);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::generator(int n, int i) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "generators need rank at least 2");
  if (i < 0 || i >= n) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  return times_generator(identity(n), i);
}

std::int64_t AffinePermutation::operator()(std::int64_t i) const {
  const std::int64_t n = size();
  return window_[static_cast<std::size_t>(mod(i - 1, n))] + floor_div(i - 1, n) * n;
}

std::int64_t apply(const AffinePermutation& s, std::int64_t i) { return s(i); }

AffinePermutation compose(const AffinePermutation& s, const AffinePermutation& t) {
  if (s.size() != t.size())
    throw Error(ErrorKind::SizeMismatch, "cannot compose ranks " + std::to_string(s.size()) +
                                             " and " + std::to_string(t.size()));
  std::vector<std::int64_t> w(s.size());
  for (int i = 1; i <= s.size(); ++i) w[i - 1] = s(t(i));
  return AffinePermutation::from_window(s.size(), std::move(w));
}

AffinePermutation inverse(const AffinePermutation& s) {
  const int n = s.size();
  std::vector<std::int64_t> w(n);
  for (int i = 1; i <= n; ++i) {
    std::int64_t v = s(i);
    w[static_cast<std::size_t>(mod(v - 1, n))] = i - floor_div(v - 1, n) * n;
  }
  return AffinePermutation::from_window(n, std::move(w));
}

AffinePermutation times_generator(const AffinePermutation& s, int i) {
  const int n = s.size();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "generators need rank at least 2");
  if (i < 0 || i >= n) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  std::vector<std::int64_t> w = s.window();
  if (i == 0) {
    // s_0 sends 1 to 0 and n to n+1.
    std::int64_t first = w[0];
    w[0] = w[n - 1] - n;
    w[n - 1] = first + n;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePermutation::from_window(n, std::move(w));
}

AffinePermutation word_product(int n, const ReducedWord& w) {
  AffinePermutation s = AffinePermutation::identity(n);
  for (int letter : w.letters) s = times_generator(s, letter);
  return s;
}

std::int64_t inversion_number(const AffinePermutation& s) {
  const int n = s.size();
  // s(j) >= j - mp for every j, so j >= s(i) + mp cannot be an inversion.
  std::int64_t mp = 0;
  for (int k = 1; k <= n; ++k) mp = std::max<std::int64_t>(mp, k - s(k));
  std::int64_t count = 0;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t si = s(i);
    for (std::int64_t j = i + 1; j < si + mp; ++j)
      if (s(j) < si) ++count;
  }
  return count;
}

ReducedWord reduced_word(const AffinePermutation& s) {
  const int n = s.size();
  std::vector<int> peeled;
  AffinePermutation cur = s;
  while (true) {
    int descent = -1;
    for (int i = 1; i <= n && n >= 2; ++i) {
      if (cur(i) > cur(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent < 0) break;
    int letter = descent % n;
    peeled.push_back(letter);
    cur = times_generator(cur, letter);
  }
  std::reverse(peeled.begin(), peeled.end());
  return ReducedWord{std::move(peeled)};
}

bool is_321_avoiding_by_pattern(const AffinePermutation& s) {
  const int n = s.size();
  // s(i) <= i + m and s(k) >= k - mp bound the candidate outer positions.
  std::int64_t m = 0, mp = 0;
  for (int k = 1; k <= n; ++k) {
    m = std::max<std::int64_t>(m, s(k) - k);
    mp = std::max<std::int64_t>(mp, k - s(k));
  }
  for (int j = 1; j <= n; ++j) {
    const std::int64_t sj = s(j);
    bool larger_before = false;
    for (std::int64_t i = sj + 1 - m; i < j && !larger_before; ++i)
      larger_before = s(i) > sj;
    if (!larger_before) continue;
    for (std::int64_t k = j + 1; k <= sj - 1 + mp; ++k)
      if (s(k) < sj) return false;
  }
  return true;
}

bool alternates(const ReducedWord& w, int n) {
  if (n < 2) return w.letters.empty();
  for (int i = 0; i < n; ++i) {
    const int a = i, b = (i + 1) % n;
    int last = -1;
    for (int letter : w.letters) {
      if (letter != a && letter != b) continue;
      if (letter == last) return false;
      last = letter;
    }
  }
  return true;
}

bool is_321_avoiding_by_alternation(const AffinePermutation& s) {
  return alternates(reduced_word(s), s.size());
}

bool is_321_avoiding(const AffinePermutation& s) {
  bool a = is_321_avoiding_by_pattern(s);
  bool b = is_321_avoiding_by_alternation(s);
  if (a != b) throw std::logic_error("321-avoidance tests disagree on " + to_string(s));
  return a;
}

bool is_involution(const AffinePermutation& s) {
  for (int i = 1; i <= s.size(); ++i)
    if (s(s(i)) != i) return false;
  return true;
}

bool is_finite(const AffinePermutation& s) {
  return std::all_of(s.window().begin(), s.window().end(),
                     [&](std::int64_t v) { return v >= 1 && v <= s.size(); });
}

std::string to_string(const AffinePermutation& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.window().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.window()[i]);
  }
  return out + "]";
}

AffinePermutation parse_window(std::string_view text) {
  std::string t;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // Accept the typographic minus sign U+2212.
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      t += '-';
      i += 2;
    } else if (text[i] != ' ' && text[i] != '\t' && text[i] != '\n') {
      t += text[i];
    }
  }
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw Error(ErrorKind::ParseError, "window must look like [a1,...,an]");
  std::vector<std::int64_t> values;
  std::string_view body(t.data() + 1, t.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view tok = body.substr(0, comma);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw Error(ErrorKind::ParseError, "bad window entry '" + std::string(tok) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw Error(ErrorKind::ParseError, "trailing comma in window");
  }
  if (values.empty()) throw Error(ErrorKind::ParseError, "empty window");
  const int n = static_cast<int>(values.size());
  return AffinePermutation::from_window(n, std::move(values));
}

nlohmann::json to_json(const AffinePermutation& s) {
  return {{"n", s.size()}, {"window", s.window()}};
}

AffinePermutation permutation_from_json(const nlohmann::json& j) {
  try {
    return AffinePermutation::from_window(j.at("n").get<int>(),
                                          j.at("window").get<std::vector<std::int64_t>>());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad permutation JSON: ") + ex.what());
  }
}

}  // namespace affheaps
