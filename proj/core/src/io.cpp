#include "ksys/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ksys/error.hpp"

namespace ksys::io {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\": " + e.what());
  }
}

json graph_doc(const PolytopeGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"d", g.dim()}, {"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

PolytopeGraph graph_of(const json& doc) {
  const json& body = doc.is_object() && doc.contains("graph") ? doc.at("graph") : doc;
  auto pairs = field<std::vector<std::vector<int>>>(body, "edges");
  std::vector<Edge> edges;
  for (const auto& pair : pairs) {
    if (pair.size() != 2) throw Error(ErrorCode::ParseError, "edge must have two endpoints");
    edges.push_back({pair[0], pair[1]});
  }
  return validate_graph(field<int>(body, "d"), field<int>(body, "n"), std::move(edges));
}

json orientation_doc(const Orientation& o) {
  return {{"graph_fingerprint", o.graph_fingerprint()},
          {"heads", std::vector<int>(o.heads().begin(), o.heads().end())}};
}

Orientation orientation_of(const json& doc) {
  auto heads = field<std::vector<int>>(doc, "heads");
  std::vector<std::uint8_t> bits;
  for (int h : heads) {
    if (h != 0 && h != 1) throw Error(ErrorCode::ParseError, "heads entries must be 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(h));
  }
  return Orientation(field<std::string>(doc, "graph_fingerprint"), std::move(bits));
}

json sets_doc(const SetSystem& s) {
  json sets = json::array();
  for (const auto& set : s.sets()) sets.push_back(set);
  return sets;
}

json set_system_doc(const SetSystem& s) {
  return {{"graph_fingerprint", s.graph_fingerprint()}, {"k", s.k()}, {"sets", sets_doc(s)}};
}

SetSystem set_system_of(const json& doc) {
  return SetSystem(field<std::string>(doc, "graph_fingerprint"), field<int>(doc, "k"),
                   field<std::vector<VertexSet>>(doc, "sets"));
}

// Certificates embed either a bare list of sets (bound through the
// orientation's fingerprint) or a full set-system document.
SetSystem embedded_sets(const json& doc, const std::string& fingerprint, int k) {
  if (!doc.contains("sets")) throw Error(ErrorCode::ParseError, "certificate without \"sets\"");
  const json& sets = doc.at("sets");
  if (sets.is_object()) {
    SetSystem s = set_system_of(sets);
    if (s.k() != k) throw Error(ErrorCode::KMismatch, "embedded set system has a different k");
    return s;
  }
  return SetSystem(fingerprint, k, field<std::vector<VertexSet>>(doc, "sets"));
}

std::string rational_string(const boost::multiprecision::cpp_int& value) { return value.str(); }

}  // namespace

std::string to_json(const PolytopeGraph& g) { return graph_doc(g).dump(); }
PolytopeGraph graph_from_json(std::string_view text) { return graph_of(parse(text)); }

std::string to_json(const Orientation& o) { return orientation_doc(o).dump(); }
Orientation orientation_from_json(std::string_view text) { return orientation_of(parse(text)); }

std::string to_json(const SetSystem& s) { return set_system_doc(s).dump(); }
SetSystem set_system_from_json(std::string_view text) { return set_system_of(parse(text)); }

std::string to_json(const Instance& inst) {
  json coords = nullptr;
  if (inst.coords) {
    coords = json::array();
    for (const auto& point : *inst.coords) {
      json row = json::array();
      for (const auto& x : point) {
        row.push_back({rational_string(boost::multiprecision::numerator(x)),
                       rational_string(boost::multiprecision::denominator(x))});
      }
      coords.push_back(std::move(row));
    }
  }
  json facets = json::array();
  for (const auto& facet : inst.facets) facets.push_back(facet);
  json doc = {{"name", inst.name},
              {"d", inst.dim()},
              {"graph", graph_doc(inst.graph)},
              {"facets", std::move(facets)},
              {"coords", std::move(coords)}};
  return doc.dump();
}

Instance instance_from_json(std::string_view text) {
  json doc = parse(text);
  PolytopeGraph g = graph_of(doc);
  if (field<int>(doc, "d") != g.dim()) throw Error(ErrorCode::ParseError, "instance d disagrees with graph d");
  std::optional<std::vector<Point>> coords;
  if (doc.contains("coords") && !doc.at("coords").is_null()) {
    coords.emplace();
    auto rows = field<std::vector<std::vector<std::vector<std::string>>>>(doc, "coords");
    for (const auto& row : rows) {
      Point p;
      for (const auto& entry : row) {
        if (entry.size() != 2) throw Error(ErrorCode::ParseError, "coordinate must be [num, den]");
        p.push_back(parse_rational(entry[0] + "/" + entry[1]));
      }
      coords->push_back(std::move(p));
    }
  }
  return make_instance(field<std::string>(doc, "name"), std::move(g), field<std::vector<VertexSet>>(doc, "facets"),
                       std::move(coords));
}

std::string to_json(const FaceCertificate& c) {
  json doc = {{"type", "faces"},
              {"k", c.k},
              {"sets", sets_doc(c.claimed_sets)},
              {"orientation", orientation_doc(c.witness_orientation)}};
  return doc.dump();
}

std::string to_json(const AofCertificate& c) {
  json doc = {{"type", "aof"},
              {"sets", sets_doc(c.witness_two_system)},
              {"orientation", orientation_doc(c.candidate_orientation)}};
  return doc.dump();
}

std::string certificate_type(std::string_view text) { return field<std::string>(parse(text), "type"); }

FaceCertificate face_certificate_from_json(std::string_view text) {
  json doc = parse(text);
  if (field<std::string>(doc, "type") != "faces") throw Error(ErrorCode::ParseError, "not a faces certificate");
  if (!doc.contains("orientation")) throw Error(ErrorCode::ParseError, "certificate without \"orientation\"");
  FaceCertificate c;
  c.k = field<int>(doc, "k");
  c.witness_orientation = orientation_of(doc.at("orientation"));
  c.claimed_sets = embedded_sets(doc, c.witness_orientation.graph_fingerprint(), c.k);
  return c;
}

AofCertificate aof_certificate_from_json(std::string_view text) {
  json doc = parse(text);
  if (field<std::string>(doc, "type") != "aof") throw Error(ErrorCode::ParseError, "not an aof certificate");
  if (!doc.contains("orientation")) throw Error(ErrorCode::ParseError, "certificate without \"orientation\"");
  AofCertificate c;
  c.candidate_orientation = orientation_of(doc.at("orientation"));
  c.witness_two_system = embedded_sets(doc, c.candidate_orientation.graph_fingerprint(), 2);
  return c;
}

std::string to_text(const HVector& h) {
  std::string out;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(h.counts[i]);
  }
  return out;
}

HVector hvector_from_text(std::string_view text) {
  HVector h;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    json doc = parse(text);
    try {
      h.counts = doc.get<std::vector<std::int64_t>>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      try {
        h.counts.push_back(std::stoll(token, &used));
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw Error(ErrorCode::ParseError, "bad h-vector entry '" + token + "'");
    }
  }
  if (h.counts.empty()) throw Error(ErrorCode::ParseError, "empty h-vector");
  for (auto c : h.counts)
    if (c < 0) throw Error(ErrorCode::ParseError, "negative h-vector entry");
  return h;
}

Rational parse_rational(std::string_view text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(boost::multiprecision::cpp_int(std::string(text)));
    boost::multiprecision::cpp_int num(std::string(text.substr(0, slash)));
    boost::multiprecision::cpp_int den(std::string(text.substr(slash + 1)));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << contents;
}

}  // namespace ksys::io
