#include "bwkl/io.hpp"

namespace bwkl {

Json to_json(const QPoly &p) {
  Json terms = Json::object();
  for (auto [e, c] : p.terms())
    terms[std::to_string(e)] = c;
  return Json{{"terms", terms}, {"text", p.to_string()}};
}

QPoly qpoly_from_json(const Json &j) {
  QPoly::Terms terms;
  const Json &t = j.contains("terms") ? j.at("terms") : j;
  for (auto it = t.begin(); it != t.end(); ++it) {
    std::size_t used = 0;
    int e = std::stoi(it.key(), &used);
    if (used != it.key().size())
      throw std::invalid_argument("qpoly_from_json: bad exponent key '" + it.key() + "'");
    terms[e] = it.value().get<std::int64_t>();
  }
  return QPoly(terms);
}

std::string weight_name(const WeightDiagram &w) {
  try {
    return display_name(weight_to_shape(w));
  } catch (const WeightError &) {
    return w.label_string();
  }
}

Json to_json(const WeightDiagram &w) {
  Json j;
  j["family"] = std::string(family_name(w.family()));
  j["delta"] = w.delta();
  j["window_lo"] = w.window_lo();
  j["window_hi"] = w.window_hi();
  j["labels"] = w.label_string();
  if (auto d = w.diamond_resolution())
    j["diamond_resolution"] = std::string(1, static_cast<char>(*d));
  else
    j["diamond_resolution"] = nullptr;
  j["shape"] = weight_name(w);
  return j;
}

Json to_json(const ArcDiagram &c) {
  Json j;
  auto pairs = [](const std::vector<std::pair<int, int>> &v) {
    Json a = Json::array();
    for (auto [x, y] : v)
      a.push_back({x, y});
    return a;
  };
  j["caps"] = pairs(c.caps);
  j["curls"] = pairs(c.curls);
  j["rays"] = c.rays;
  j["free"] = c.free;
  if (c.leftmost_nontrivial)
    j["leftmost_nontrivial"] = *c.leftmost_nontrivial;
  return j;
}

Json to_json(const LProfile &l) {
  Json per = Json::object();
  for (auto [p, v] : l.per_vertex)
    per[std::to_string(p)] = v;
  return Json{{"per_vertex", per}, {"total", l.total}};
}

Json to_json(const ChamberTree &t) {
  Json nodes = Json::array();
  for (const auto &ch : t.nodes) {
    Json n;
    n["parent"] = ch.parent;
    n["bound"] = ch.bound == Chamber::Bound::None ? "none" : ch.bound == Chamber::Bound::Cap ? "cap" : "curl";
    if (ch.bound != Chamber::Bound::None)
      n["arc"] = {ch.left, ch.right};
    n["children"] = ch.children;
    n["small"] = ch.is_small;
    n["must_be_even"] = ch.must_be_even;
    if (ch.small_bound)
      n["small_bound"] = *ch.small_bound;
    nodes.push_back(n);
  }
  return Json{{"nodes", nodes}, {"chains", t.chains}};
}

Json to_json(const std::vector<ValuedAssignment> &as) {
  Json a = Json::array();
  for (const auto &v : as)
    a.push_back(Json{{"values", v.value}, {"weight_sum", v.weight_sum}});
  return a;
}

Json to_json(const PolyMatrix &m) {
  Json index = Json::array();
  for (const auto &w : m.index)
    index.push_back(weight_name(w));
  Json rows = Json::array();
  for (const auto &row : m.entries) {
    Json r = Json::array();
    for (const auto &e : row)
      r.push_back(to_json(e));
    rows.push_back(r);
  }
  return Json{{"index", index}, {"entries", rows}};
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string to_csv(const PolyMatrix &m) {
  std::string out = csv_field("lambda\\mu");
  for (const auto &w : m.index)
    out += "," + csv_field(weight_name(w));
  out += "\r\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += csv_field(weight_name(m.index[r]));
    for (const auto &e : m.entries[r])
      out += "," + csv_field(e.to_string());
    out += "\r\n";
  }
  return out;
}

} // namespace bwkl
