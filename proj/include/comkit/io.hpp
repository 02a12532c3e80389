#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "comkit/ranking.hpp"
#include "comkit/realize.hpp"
#include "comkit/sign_system.hpp"
#include "comkit/topes.hpp"

namespace comkit {

using Json = nlohmann::ordered_json;

// Sign-vector file: optional "elements: a b c" header, one row of '+', '-', '0' per line,
// '#' starts a comment. Duplicate rows are dropped with a warning.
SignSystem parse_svs(std::string_view text, std::vector<std::string>* warnings = nullptr);
// Canonically sorted rows; the header is written unless the labels are e1..en.
std::string emit_svs(const SignSystem& system);

// Poset file: optional "elements: ..." header, cover chains "a < b < c", lone labels.
// Without a header, all-numeric labels are sorted numerically, others keep first appearance.
Poset parse_poset(std::string_view text);
std::string emit_poset(const Poset& poset);

// Arrangement file: "dim: d", hyperplanes "label: a1 ... ad | b", region rows "strict: c1 ... cd | r".
RealizationProblem parse_arrangement(std::string_view text);
std::string emit_arrangement(const RealizationProblem& problem);

// Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

// L with a synthetic top above the topes, ordered by <=. Index system.size() is the top.
struct FacePoset {
  std::vector<SignVector> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  std::size_t top() const { return elements.size(); }
};

// Requires a COM.
FacePoset face_poset(const SignSystem& system);

std::string export_dot(const Graph& graph);
std::string export_dot(const FacePoset& poset);
Json graph_json(const Graph& graph);

std::uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::string_view data);

// {"command", "input_digest", "results", "exit_status"} in that order.
Json report_document(const std::string& command, const std::string& input_digest, Json results, int exit_status);

}  // namespace comkit
