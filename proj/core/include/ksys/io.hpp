#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ksys/certificates.hpp"
#include "ksys/graph.hpp"
#include "ksys/ksystems.hpp"
#include "ksys/oracle.hpp"

namespace ksys::io {

// Canonical JSON documents: compact, keys sorted, sets and edges sorted.
// Every *_from_json function throws Error(ParseError) on malformed input and
// the usual validation errors on well-formed but invalid content.

std::string to_json(const PolytopeGraph& g);
/// Accepts a graph document or an instance document (uses its "graph").
PolytopeGraph graph_from_json(std::string_view text);

std::string to_json(const Orientation& o);
Orientation orientation_from_json(std::string_view text);

std::string to_json(const SetSystem& s);
SetSystem set_system_from_json(std::string_view text);

std::string to_json(const Instance& inst);
Instance instance_from_json(std::string_view text);

std::string to_json(const FaceCertificate& c);
std::string to_json(const AofCertificate& c);
FaceCertificate face_certificate_from_json(std::string_view text);
AofCertificate aof_certificate_from_json(std::string_view text);
/// "faces" or "aof".
std::string certificate_type(std::string_view text);

/// "h_0 h_1 ... h_d"
std::string to_text(const HVector& h);
/// Whitespace-separated integers or a JSON array.
HVector hvector_from_text(std::string_view text);

/// "p/q" or "p".
Rational parse_rational(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ksys::io
