#include "affine_heaps/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "affine_heaps/error.hpp"

namespace affheaps {

PermClass parse_perm_class(std::string_view name) {
  if (name == "affine") return PermClass::Affine;
  if (name == "finite") return PermClass::Finite;
  if (name == "affine-involution") return PermClass::AffineInvolution;
  if (name == "finite-involution") return PermClass::FiniteInvolution;
  throw Error(ErrorKind::InvalidArgument, "unknown class '" + std::string(name) + "'");
}

std::string perm_class_name(PermClass c) {
  switch (c) {
    case PermClass::Affine: return "affine";
    case PermClass::Finite: return "finite";
    case PermClass::AffineInvolution: return "affine-involution";
    case PermClass::FiniteInvolution: return "finite-involution";
  }
  return "affine";
}

std::int64_t CountTable::total() const {
  std::int64_t t = 0;
  for (const auto& [len, c] : rows) t += c;
  return t;
}

std::vector<AffinePermutation> fc_elements(int n, int max_len) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "rank must be at least 2");
  if (max_len < 0) throw Error(ErrorKind::InvalidArgument, "max length must be nonnegative");
  std::vector<AffinePermutation> out;
  std::set<AffinePermutation> level{AffinePermutation::identity(n)};
  for (int len = 0; len <= max_len && !level.empty(); ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::set<AffinePermutation> next;
    for (const AffinePermutation& w : level)
      for (int i = 0; i < n; ++i) {
        AffinePermutation v = times_generator(w, i);
        if (inversion_number(v) != len + 1) continue;
        if (next.count(v)) continue;
        if (is_321_avoiding(v)) next.insert(v);
      }
    level = std::move(next);
  }
  return out;
}

bool in_class(const AffinePermutation& s, PermClass c) {
  switch (c) {
    case PermClass::Affine: return true;
    case PermClass::Finite: return is_finite(s);
    case PermClass::AffineInvolution: return is_involution(s);
    case PermClass::FiniteInvolution: return is_finite(s) && is_involution(s);
  }
  return false;
}

std::map<PermClass, CountTable> enumerate_fc_all(int n, int max_len) {
  std::map<PermClass, CountTable> tables;
  for (PermClass c : {PermClass::Affine, PermClass::Finite, PermClass::AffineInvolution,
                      PermClass::FiniteInvolution})
    tables[c] = CountTable{n, c, {}};
  for (const AffinePermutation& s : fc_elements(n, max_len)) {
    int len = static_cast<int>(inversion_number(s));
    for (auto& [c, t] : tables)
      if (in_class(s, c)) ++t.rows[len];
  }
  return tables;
}

CountTable enumerate_fc_elements(int n, int max_len, PermClass c) {
  return enumerate_fc_all(n, max_len).at(c);
}

std::vector<AlternatingDiagram> enumerate_diagrams(int n, int max_size) {
  std::vector<AlternatingDiagram> out;
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::function<void(int, int)> go = [&](int i, int sum) {
    if (i == n) {
      if (n > 1 && std::abs(cols[n - 1] - cols[0]) > 1) return;
      std::vector<int> domain;
      for (int k = 0; k < n; ++k)
        if (cols[k] > 0 && cols[k] == cols[(k + 1) % n]) domain.push_back(k);
      const std::size_t combos = std::size_t{1} << domain.size();
      for (std::size_t mask = 0; mask < combos; ++mask) {
        std::map<int, ChainType> types;
        for (std::size_t b = 0; b < domain.size(); ++b)
          types.emplace(domain[b], (mask >> b) & 1 ? ChainType::L : ChainType::R);
        try {
          out.push_back(AlternatingDiagram::validate(n, cols, std::move(types)));
        } catch (const Error&) {
        }
      }
      return;
    }
    const int lo = i == 0 ? 0 : std::max(0, cols[i - 1] - 1);
    const int hi = i == 0 ? max_size : cols[i - 1] + 1;
    for (int c = lo; c <= hi && sum + c <= max_size; ++c) {
      cols[i] = c;
      go(i + 1, sum + c);
    }
  };
  if (n >= 1) go(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Walk> enumerate_walks(WalkGraph g, int length, int max_area) {
  std::vector<Walk> out;
  Walk w;
  std::function<void(int, int)> go = [&](int v, int area) {
    const int left = length - static_cast<int>(w.steps.size());
    if (left == 0) {
      if (v == w.start) out.push_back(w);
      return;
    }
    if (std::abs(v - w.start) > left || area + v > max_area) return;
    auto step = [&](StepKind k, Label l, int to) {
      w.steps.push_back({k, l});
      go(to, area + v);
      w.steps.pop_back();
    };
    step(StepKind::Loop, Label::L, v);
    if (v > 0 || g == WalkGraph::GPrime) step(StepKind::Loop, Label::R, v);
    step(StepKind::Up, Label::None, v + 1);
    if (v > 0) step(StepKind::Down, Label::None, v - 1);
  };
  // Smallest area of a closed walk of the given length from s: straight down and back.
  auto min_area = [&](int s) {
    int a = 0;
    for (int k = 0; k < length; ++k) a += std::max(0, s - std::min(k, length - k));
    return a;
  };
  for (int s = 0; s <= max_area; ++s) {
    if (min_area(s) > max_area) break;
    w = Walk{s, {}};
    go(s, 0);
  }
  return out;
}

std::vector<Ppp> enumerate_ppp(int max_width, int max_area) {
  std::vector<Ppp> out;
  std::vector<std::pair<int, int>> pairs;
  std::function<void(int)> go = [&](int area) {
    if (!pairs.empty() && pairs.front().first <= pairs.back().second)
      out.push_back(Ppp::validate(AltSequence::validate(pairs)));
    if (static_cast<int>(pairs.size()) == max_width) return;
    const int a_max = pairs.empty() ? max_area : pairs.back().second;
    for (int b = 1; area + b <= max_area; ++b)
      for (int a = 1; a <= std::min(a_max, b); ++a) {
        pairs.emplace_back(a, b);
        go(area + b);
        pairs.pop_back();
      }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_csv(const CountTable& t) {
  std::ostringstream os;
  os << "length,count\n";
  for (const auto& [len, c] : t.rows) os << len << ',' << c << '\n';
  return os.str();
}

nlohmann::json to_json(const CountTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [len, c] : t.rows) rows.push_back({{"length", len}, {"count", c}});
  return {{"class", perm_class_name(t.cls)}, {"n", t.n}, {"rows", std::move(rows)}};
}

}  // namespace affheaps
