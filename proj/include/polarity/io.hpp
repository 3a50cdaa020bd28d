#pragma once

// JSON instance files:
//   {"type":"lattice","elements":[...],"order":[[a,b],...]}
//   {"type":"frame","elements":[...],"leq1":[[a,b],...],"leq2":[[a,b],...]}
//   {"type":"map","from":<path>,"to":<path>,"pairs":[[x,x'],...]}
// Map endpoints are resolved relative to the map file and loaded as plain
// two-relation frames, so a map may point at a frame that is not doubly
// ordered.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "polarity/canonical.hpp"
#include "polarity/caps.hpp"
#include "polarity/error.hpp"
#include "polarity/frame.hpp"
#include "polarity/lattice.hpp"
#include "polarity/morphisms.hpp"

namespace polarity {

using json = nlohmann::ordered_json;

struct MapInstance {
  std::string from_path;
  std::string to_path;
  FrameMap map;
};

struct InstanceFile {
  std::variant<Lattice, DoublyOrderedFrame, MapInstance> payload;

  std::string kind() const {
    switch (payload.index()) {
      case 0: return "lattice";
      case 1: return "frame";
      default: return "map";
    }
  }
};

namespace detail {

inline Error parse_error(const std::string& where, const std::string& what) {
  return Error(ErrorKind::ParseError, where + ": " + what, {where});
}

inline const json& field(const json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object()) throw parse_error(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw parse_error(where, "missing field '" + key + "'");
  return *it;
}

inline std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw parse_error(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string())
      throw parse_error(where + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

inline std::vector<LabelPair> pair_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw parse_error(where, "expected an array of [a,b] pairs");
  std::vector<LabelPair> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto at = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != 2 || !v[i][0].is_string() || !v[i][1].is_string())
      throw parse_error(at, "expected a pair of strings");
    out.emplace_back(v[i][0].get<std::string>(), v[i][1].get<std::string>());
  }
  return out;
}

// Runs a validator, rewrapping its failures as ValidationError.
template <class F>
auto validated(const std::string& where, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError) throw;
    throw Error::validation(e, where);
  }
}

inline std::string file_context(const std::string& path, std::size_t byte,
                                const std::string& text) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return path + ":" + std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace detail

inline json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw detail::parse_error(detail::file_context(origin, e.byte, text), "malformed JSON");
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw detail::parse_error(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

inline Lattice lattice_from_json(const json& doc, const std::string& where,
                                 const Caps& caps = {}) {
  auto elements = detail::string_list(detail::field(doc, "elements", where), where + ".elements");
  std::vector<LabelPair> order;
  if (doc.contains("order")) order = detail::pair_list(doc["order"], where + ".order");
  return detail::validated(where, [&] { return build_lattice(elements, order, caps.lattice); });
}

inline DoublyOrderedFrame frame_from_json(const json& doc, const std::string& where) {
  auto elements = detail::string_list(detail::field(doc, "elements", where), where + ".elements");
  auto leq1 = detail::pair_list(detail::field(doc, "leq1", where), where + ".leq1");
  auto leq2 = detail::pair_list(detail::field(doc, "leq2", where), where + ".leq2");
  return detail::validated(where, [&] { return build_frame(elements, leq1, leq2); });
}

/// Two-relation frame without the doubly-ordered requirement.
inline RelationalFrame quasi_frame_from_json(const json& doc, const std::string& where) {
  auto elements = detail::string_list(detail::field(doc, "elements", where), where + ".elements");
  auto leq1 = detail::pair_list(detail::field(doc, "leq1", where), where + ".leq1");
  auto leq2 = detail::pair_list(detail::field(doc, "leq2", where), where + ".leq2");
  return detail::validated(where, [&] { return build_quasi_frame(elements, leq1, leq2); });
}

inline std::string type_of(const json& doc, const std::string& where) {
  const auto& t = detail::field(doc, "type", where);
  if (!t.is_string()) throw detail::parse_error(where + ".type", "expected a string");
  return t.get<std::string>();
}

inline RelationalFrame load_quasi_frame(const std::string& path) {
  auto doc = read_json_file(path);
  if (auto t = type_of(doc, path); t != "frame")
    throw detail::parse_error(path + ".type", "expected a frame, got '" + t + "'");
  return quasi_frame_from_json(doc, path);
}

/// Parses and validates an instance file; `path` is used for error context
/// and to resolve map endpoints.
inline InstanceFile load_instance(const std::string& path, const Caps& caps = {}) {
  const json doc = read_json_file(path);
  const std::string t = type_of(doc, path);
  if (t == "lattice") return {lattice_from_json(doc, path, caps)};
  if (t == "frame") return {frame_from_json(doc, path)};
  if (t != "map") throw detail::parse_error(path + ".type", "unknown instance type '" + t + "'");

  const auto& from = detail::field(doc, "from", path);
  const auto& to = detail::field(doc, "to", path);
  if (!from.is_string()) throw detail::parse_error(path + ".from", "expected a path string");
  if (!to.is_string()) throw detail::parse_error(path + ".to", "expected a path string");
  const auto base = std::filesystem::path(path).parent_path();
  const auto from_path = (base / from.get<std::string>()).string();
  const auto to_path = (base / to.get<std::string>()).string();
  auto src = load_quasi_frame(from_path);
  auto dst = load_quasi_frame(to_path);
  auto pairs = detail::pair_list(detail::field(doc, "pairs", path), path + ".pairs");

  return detail::validated(path, [&] {
    LabelIndex si(src.labels), di(dst.labels);
    std::vector<std::size_t> image(src.size(), 0);
    std::vector<bool> seen(src.size(), false);
    for (const auto& [a, b] : pairs) {
      auto x = si.at(a);
      if (seen[x])
        throw Error(ErrorKind::InvalidArgument, "'" + a + "' is mapped twice", {a});
      seen[x] = true;
      image[x] = di.at(b);
    }
    for (std::size_t x = 0; x < src.size(); ++x)
      if (!seen[x])
        throw Error(ErrorKind::InvalidArgument, "'" + src.labels[x] + "' has no image",
                    {src.labels[x]});
    return InstanceFile{MapInstance{from_path, to_path, FrameMap(src, dst, image)}};
  });
}

// ---- serialisation --------------------------------------------------------

inline json labels_json(const Subset& s, const std::vector<std::string>& labels) {
  return json(subset_labels(s, labels));
}

/// Covering pairs a ⋖ b of a lattice order.
inline std::vector<IndexPair> covers(const Lattice& L) {
  std::vector<IndexPair> out;
  for (std::size_t a = 0; a < L.size(); ++a)
    for (auto b : members(L.up(a))) {
      if (a == b) continue;
      Subset between = L.up(a) & L.down(b);
      if (between.count() == 2) out.emplace_back(a, b);
    }
  return out;
}

inline json relation_json(const Relation& r, const std::vector<std::string>& labels,
                          bool skip_reflexive = true) {
  json out = json::array();
  for (auto [a, b] : r.pairs())
    if (!skip_reflexive || a != b) out.push_back({labels[a], labels[b]});
  return out;
}

inline json lattice_to_json(const Lattice& L) {
  json order = json::array();
  for (auto [a, b] : covers(L)) order.push_back({L.label(a), L.label(b)});
  return {{"type", "lattice"}, {"elements", L.labels()}, {"order", order}};
}

inline json frame_to_json(const DoublyOrderedFrame& X) {
  return {{"type", "frame"},
          {"elements", X.labels()},
          {"leq1", relation_json(X.relation(Order::First), X.labels())},
          {"leq2", relation_json(X.relation(Order::Second), X.labels())}};
}

inline json table_json(const Lattice& L, bool joins) {
  json rows = json::array();
  for (std::size_t a = 0; a < L.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < L.size(); ++b)
      row.push_back(L.label(joins ? L.join(a, b) : L.meet(a, b)));
    rows.push_back(row);
  }
  return rows;
}

inline json axiom_json(const DoublyOrderedFrame& X, const AxiomCheck& c, bool lf0) {
  if (c.pass) return {{"pass", true}};
  json w = json::array();
  if (lf0) {
    w.push_back(X.label(c.witness.at(0)));
    w.push_back(c.witness.at(1));
  } else {
    for (auto i : c.witness) w.push_back(X.label(i));
  }
  return {{"pass", false}, {"witness", w}};
}

inline json lattice_frame_json(const DoublyOrderedFrame& X, const LatticeFrameReport& r) {
  return {{"lf0", axiom_json(X, r.lf0, true)},
          {"lf1", axiom_json(X, r.lf1, false)},
          {"lf2", axiom_json(X, r.lf2, false)},
          {"lattice_frame", r.all_pass()}};
}

inline json error_json(const Error& e) {
  json j{{"error", std::string(to_string(e.kind()))}, {"message", e.detail()},
         {"witness", e.witness()}};
  if (e.cause() != e.kind()) j["cause"] = std::string(to_string(e.cause()));
  return j;
}

}  // namespace polarity
