#pragma once

// Text formats: lattice, poset, morphism and iso documents (JSON), DOT
// export of Hasse diagrams, and frame edge lists. Emitters are canonical, so
// identical data always produces identical bytes.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "omlkit/lattice.hpp"
#include "omlkit/poset.hpp"
#include "omlkit/reconstruction.hpp"
#include "omlkit/subalgebras.hpp"

namespace omlkit::io {

using Json = nlohmann::json;
using Label = std::vector<int>;

namespace detail {

inline Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

inline long long integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
  return v.get<long long>();
}

inline std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const Json& doc, long long size) {
  const Json& leq = field(doc, "leq");
  if (!leq.is_array()) throw Error(ErrorKind::ParseError, "'leq' must be an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Json& p : leq) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::ParseError, "'leq' entries must be [i,j] pairs");
    const long long i = integer(p[0], "pair index");
    const long long j = integer(p[1], "pair index");
    if (i < 0 || j < 0 || i >= size || j >= size) {
      throw Error(ErrorKind::ParseError, "pair [" + std::to_string(i) + "," + std::to_string(j) + "] out of range");
    }
    const std::pair<std::size_t, std::size_t> pair{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
    if (!seen.insert(pair).second) {
      throw Error(ErrorKind::ParseError, "duplicate pair [" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
    out.push_back(pair);
  }
  return out;
}

template <typename Pairs>
std::string pairs_text(const Pairs& pairs) {
  std::string out = "[";
  bool first = true;
  for (const auto& [i, j] : pairs) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(i) + ',' + std::to_string(j) + ']';
  }
  return out + "]";
}

inline std::string ints_text(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

inline std::string set_text(const Label& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "}";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lattices

inline std::string emit_lattice(const FiniteOrtholattice& L) {
  std::ostringstream os;
  os << "{\n";
  if (!L.name().empty()) os << "  \"name\": " << Json(L.name()).dump() << ",\n";
  os << "  \"size\": " << L.size() << ",\n";
  os << "  \"leq\": " << detail::pairs_text(L.leq_pairs()) << ",\n";
  os << "  \"ortho\": " << detail::ints_text(L.ortho()) << "\n";
  os << "}\n";
  return os.str();
}

inline FiniteOrtholattice parse_lattice(const std::string& text) {
  const Json doc = detail::parse_document(text);
  const long long size = detail::integer(detail::field(doc, "size"), "'size'");
  if (size < 2) throw Error(ErrorKind::NoBoundedLattice, "a lattice needs at least 2 elements");
  if (size > kMaxElements) throw Error(ErrorKind::SizeCap, "more than 64 elements");
  const auto pairs = detail::parse_pairs(doc, size);
  const Json& ortho_json = detail::field(doc, "ortho");
  if (!ortho_json.is_array()) throw Error(ErrorKind::ParseError, "'ortho' must be an array");
  std::vector<int> ortho;
  for (const Json& v : ortho_json) {
    const long long x = detail::integer(v, "ortho entry");
    if (x < 0 || x >= size) throw Error(ErrorKind::ParseError, "ortho entry out of range");
    ortho.push_back(static_cast<int>(x));
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorKind::ParseError, "'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  std::vector<std::pair<int, int>> leq;
  for (auto [i, j] : pairs) leq.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return validate(static_cast<int>(size), leq, std::move(ortho), std::move(name));
}

// ---------------------------------------------------------------------------
// Posets

struct PosetDocument {
  AbstractPoset poset;
  std::optional<std::vector<Label>> labels;
};

inline std::string emit_poset(const AbstractPoset& P, const std::optional<std::vector<Label>>& labels = std::nullopt) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"size\": " << P.size() << ",\n";
  os << "  \"leq\": " << detail::pairs_text(P.leq_pairs());
  if (labels) {
    os << ",\n  \"labels\": [";
    for (std::size_t i = 0; i < labels->size(); ++i) {
      if (i > 0) os << ',';
      os << detail::ints_text((*labels)[i]);
    }
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

inline std::string emit_poset(const SubalgebraPoset& P) { return emit_poset(P.order(), P.labels()); }

inline PosetDocument parse_poset(const std::string& text) {
  const Json doc = detail::parse_document(text);
  const long long size = detail::integer(detail::field(doc, "size"), "'size'");
  if (size < 1) throw Error(ErrorKind::ParseError, "a poset needs at least 1 element");
  PosetDocument out{AbstractPoset::from_pairs(static_cast<std::size_t>(size), detail::parse_pairs(doc, size)),
                    std::nullopt};
  if (doc.contains("labels")) {
    const Json& labels = doc["labels"];
    if (!labels.is_array() || static_cast<long long>(labels.size()) != size) {
      throw Error(ErrorKind::ParseError, "'labels' must have one entry per node");
    }
    std::vector<Label> parsed;
    for (const Json& l : labels) {
      if (!l.is_array()) throw Error(ErrorKind::ParseError, "labels must be element lists");
      Label label;
      for (const Json& v : l) label.push_back(static_cast<int>(detail::integer(v, "label entry")));
      parsed.push_back(std::move(label));
    }
    out.labels = std::move(parsed);
  }
  return out;
}

/// Hasse diagram of the cover relation, drawn bottom-up with one rank per height.
inline std::string emit_dot(const AbstractPoset& P, const std::optional<std::vector<Label>>& labels = std::nullopt,
                            const std::string& name = "hasse") {
  std::ostringstream os;
  os << "digraph " << Json(name).dump() << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (Node i = 0; i < P.size(); ++i) {
    os << "  n" << i << " [label=\"" << (labels ? detail::set_text((*labels)[i]) : std::to_string(i)) << "\"];\n";
  }
  std::map<int, std::vector<Node>> by_rank;
  for (Node i = 0; i < P.size(); ++i) by_rank[P.rank(i)].push_back(i);
  for (const auto& [rank, nodes] : by_rank) {
    os << "  { rank=same;";
    for (Node i : nodes) os << " n" << i << ";";
    os << " }\n";
  }
  for (Node i = 0; i < P.size(); ++i) {
    for (Node j : P.upper_covers(i)) os << "  n" << i << " -> n" << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string emit_dot(const SubalgebraPoset& P, const std::string& name = "hasse") {
  return emit_dot(P.order(), P.labels(), name);
}

// ---------------------------------------------------------------------------
// Morphisms

inline Json morphism_json(const Morphism& f) {
  Json doc;
  doc["kind"] = kind_name(f.kind);
  doc["map"] = f.map;
  return doc;
}

inline std::string emit_morphism(const Morphism& f) {
  return "{\n  \"kind\": \"" + kind_name(f.kind) + "\",\n  \"map\": " + detail::ints_text(f.map) + "\n}\n";
}

inline std::string emit_morphisms(const std::vector<Morphism>& fs) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out += "  {\"kind\": \"" + kind_name(fs[i].kind) + "\", \"map\": " + detail::ints_text(fs[i].map) + "}";
    out += i + 1 < fs.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

inline Morphism morphism_from_json(const Json& doc) {
  Morphism f;
  const Json& kind = detail::field(doc, "kind");
  if (!kind.is_string()) throw Error(ErrorKind::ParseError, "'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "hom") f.kind = MorphismKind::Hom;
  else if (k == "embedding") f.kind = MorphismKind::Embedding;
  else if (k == "iso") f.kind = MorphismKind::Iso;
  else throw Error(ErrorKind::ParseError, "unknown morphism kind '" + k + "'");
  const Json& map = detail::field(doc, "map");
  if (!map.is_array()) throw Error(ErrorKind::ParseError, "'map' must be an array");
  for (const Json& v : map) f.map.push_back(static_cast<int>(detail::integer(v, "map entry")));
  return f;
}

inline Morphism parse_morphism(const std::string& text) { return morphism_from_json(detail::parse_document(text)); }

inline std::vector<Morphism> parse_morphisms(const std::string& text) {
  const Json doc = detail::parse_document(text);
  std::vector<Morphism> out;
  if (doc.is_array()) {
    for (const Json& d : doc) out.push_back(morphism_from_json(d));
  } else {
    out.push_back(morphism_from_json(doc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphisms between subalgebra posets, given as pairs of node labels

inline std::string emit_iso(const SubalgebraPoset& P, const SubalgebraPoset& Q, const std::vector<Node>& phi) {
  std::string out = "{\n  \"pairs\": [\n";
  for (Node i = 0; i < P.size(); ++i) {
    out += "    [" + detail::ints_text(bits_of(P.node(i))) + "," + detail::ints_text(bits_of(Q.node(phi[i]))) + "]";
    out += i + 1 < P.size() ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

inline std::vector<std::pair<Label, Label>> parse_iso_pairs(const std::string& text) {
  const Json doc = detail::parse_document(text);
  const Json& pairs = detail::field(doc, "pairs");
  if (!pairs.is_array()) throw Error(ErrorKind::ParseError, "'pairs' must be an array");
  std::vector<std::pair<Label, Label>> out;
  for (const Json& p : pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_array() || !p[1].is_array()) {
      throw Error(ErrorKind::ParseError, "iso entries must be [source-label, target-label]");
    }
    Label a, b;
    for (const Json& v : p[0]) a.push_back(static_cast<int>(detail::integer(v, "label entry")));
    for (const Json& v : p[1]) b.push_back(static_cast<int>(detail::integer(v, "label entry")));
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

inline Mask label_mask(const Label& label, int size) {
  Mask m = 0;
  for (int a : label) {
    if (a < 0 || a >= size) throw Error(ErrorKind::MalformedInput, "label element out of range");
    m |= bit(a);
  }
  return m;
}

/// Resolves label pairs to a node bijection P -> Q; every node of P must
/// appear exactly once and targets must be distinct.
inline std::vector<Node> resolve_iso(const SubalgebraPoset& P, const SubalgebraPoset& Q,
                                     const std::vector<std::pair<Label, Label>>& pairs) {
  constexpr Node kUnset = static_cast<Node>(-1);
  std::vector<Node> phi(P.size(), kUnset);
  NodeSet hit(Q.size());
  for (const auto& [a, b] : pairs) {
    const auto src = P.find(label_mask(a, P.owner().size()));
    const auto dst = Q.find(label_mask(b, Q.owner().size()));
    if (!src || !dst) throw Error(ErrorKind::MalformedInput, "label is not a node of the subalgebra poset");
    if (phi[*src] != kUnset) throw Error(ErrorKind::MalformedInput, "source node listed twice");
    if (hit.test(*dst)) throw Error(ErrorKind::MalformedInput, "target node listed twice");
    phi[*src] = *dst;
    hit.set(*dst);
  }
  if (std::find(phi.begin(), phi.end(), kUnset) != phi.end() || P.size() != Q.size()) {
    throw Error(ErrorKind::MalformedInput, "iso does not cover every node");
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Frames

inline std::string emit_frame(const OrthoFrame& frame) {
  std::ostringstream os;
  os << "# frame: " << frame.size() << " points (index poset-atom copy), then orthogonal pairs\n";
  for (int i = 0; i < frame.size(); ++i) {
    os << "point " << i << ' ' << frame.points[i].origin << ' ' << frame.points[i].copy << '\n';
  }
  for (auto [i, j] : frame.edges()) os << "perp " << i << ' ' << j << '\n';
  return os.str();
}

}  // namespace omlkit::io
