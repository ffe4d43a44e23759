#include "affine_heaps/heap.hpp"

#include <sstream>

namespace affheaps {

int total_length(const Heap& h) {
  int s = 0;
  for (const Segment& p : h.pieces()) s += p.length();
  return s;
}

int right_end_sum(const Heap& h) {
  int s = 0;
  for (const Segment& p : h.pieces()) s += p.b;
  return s;
}

char label_char(Label l) {
  switch (l) {
    case Label::L: return 'L';
    case Label::R: return 'R';
    case Label::None: break;
  }
  return '-';
}

nlohmann::json to_json(const Segment& s) {
  nlohmann::json label = nullptr;
  if (s.label != Label::None) label = std::string(1, label_char(s.label));
  return {{"a", s.a}, {"b", s.b}, {"label", label}};
}

Segment segment_from_json(const nlohmann::json& j) {
  try {
    Segment s{j.at("a").get<int>(), j.at("b").get<int>(), Label::None};
    if (j.contains("label") && !j.at("label").is_null()) {
      std::string l = j.at("label").get<std::string>();
      if (l == "L") {
        s.label = Label::L;
      } else if (l == "R") {
        s.label = Label::R;
      } else {
        throw Error(ErrorKind::ParseError, "label must be L, R or null");
      }
    }
    if (s.a > s.b) throw Error(ErrorKind::InvalidArgument, "segment with a > b");
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad segment JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const Heap& h) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : h.layers()) {
    nlohmann::json l = nlohmann::json::array();
    for (const Segment& s : layer) l.push_back(to_json(s));
    layers.push_back(std::move(l));
  }
  return {{"layers", std::move(layers)}};
}

Heap heap_from_json(const nlohmann::json& j) {
  try {
    std::vector<Heap::Layer> layers;
    for (const auto& l : j.at("layers")) {
      Heap::Layer layer;
      for (const auto& s : l) layer.push_back(segment_from_json(s));
      layers.push_back(std::move(layer));
    }
    return Heap::from_layers(std::move(layers));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("bad heap JSON: ") + ex.what());
  }
}

std::string to_string(const Segment& s) {
  std::ostringstream out;
  if (s.a == s.b) {
    out << "[" << s.a << "]";
  } else {
    out << "[" << s.a << "," << s.b << "]";
  }
  if (s.label != Label::None) out << label_char(s.label);
  return out.str();
}

std::string to_string(const Heap& h) {
  std::string out;
  for (std::size_t k = 0; k < h.layers().size(); ++k) {
    if (k) out += " | ";
    for (std::size_t i = 0; i < h.layers()[k].size(); ++i) {
      if (i) out += " ";
      out += to_string(h.layers()[k][i]);
    }
  }
  return out.empty() ? "()" : out;
}

}  // namespace affheaps
