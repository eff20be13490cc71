#pragma once

#include "kostka/identities.hpp"
#include "kostka/paths.hpp"
#include "kostka/qpoly.hpp"
#include "kostka/shapes.hpp"
#include "kostka/tableaux.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace kostka {

using json = nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const Rect& r) { return json{{"w", r.width}, {"h", r.height}}; }

inline json to_json(const RectList& mu) {
  json a = json::array();
  for (const Rect& r : mu) a.push_back(to_json(r));
  return a;
}

inline json to_json(const LMatrix& L) {
  json rows = json::array();
  for (int a = 1; a <= L.rows(); ++a) {
    json row = json::array();
    for (int i = 1; i <= L.cols(); ++i) row.push_back(L.at(a, i));
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) {
    json r = json::array();
    for (const Letter& x : row) r.push_back(json::array({x.step, x.row}));
    rows.push_back(r);
  }
  return rows;
}

inline json to_json(const Path& p) {
  json steps = json::array();
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)  // p_L first
    steps.push_back(to_json(*it));
  return json{{"n", p.n}, {"steps", steps}};
}

/// [num, den, coeff] triples, ascending exponent; coefficients that do not
/// fit a 64-bit integer are emitted as decimal strings.
inline json to_json(const QPoly& p) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t = json::array({e.num(), e.den()});
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      t.push_back(static_cast<long long>(c));
    else
      t.push_back(c.str());
    a.push_back(t);
  }
  return a;
}

inline json to_json(const IdentityReport& r) {
  return json{{"identity", r.identity}, {"instance", r.instance},
              {"pass", r.pass},         {"lhs", r.lhs.str()},
              {"rhs", r.rhs.str()},     {"elapsed_ms", r.elapsed_ms}};
}

inline Rect rect_from_json(const json& j) {
  if (!j.is_object() || !j.contains("w") || !j.contains("h"))
    throw std::invalid_argument("rectangle must be {\"w\":int,\"h\":int}");
  Rect r{j["w"].get<int>(), j["h"].get<int>()};
  if (r.width < 1 || r.height < 1) throw std::invalid_argument("rectangle sides must be >= 1");
  return r;
}

/// Accepts a JSON array of rectangles, optionally with a trailing repetition
/// suffix `xN` applied to the whole list, e.g. `[{"w":1,"h":1}]x3`.
inline RectList parse_mu(const std::string& text) {
  std::string body = text;
  int repeat = 1;
  auto xpos = body.rfind(']');
  if (xpos != std::string::npos && xpos + 1 < body.size()) {
    std::string tail = body.substr(xpos + 1);
    if (tail.size() >= 2 && tail[0] == 'x') {
      repeat = std::stoi(tail.substr(1));
      if (repeat < 0) throw std::invalid_argument("negative repetition");
      body = body.substr(0, xpos + 1);
    } else {
      throw std::invalid_argument("trailing characters after mu list");
    }
  }
  json j = json::parse(body);
  if (!j.is_array()) throw std::invalid_argument("mu must be a JSON array");
  RectList unit;
  for (const auto& e : j) unit.push_back(rect_from_json(e));
  RectList mu;
  for (int k = 0; k < repeat; ++k) mu.insert(mu.end(), unit.begin(), unit.end());
  return mu;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace kostka
