#include "comkit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "comkit/axioms.hpp"
#include "comkit/error.hpp"
#include "comkit/generation.hpp"

namespace comkit {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& why) {
  throw ParseError("line " + std::to_string(l.number) + ": " + why);
}

// "key: rest" with key a single token; empty key when there is no colon.
std::pair<std::string, std::string> split_key(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return {"", s};
  return {trim(s.substr(0, colon)), trim(s.substr(colon + 1))};
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool default_labels(const GroundSet& g) { return g == GroundSet::numbered(g.size()); }

// "a1 ... ad | b" as rationals.
std::pair<RationalVector, Rational> parse_row(const Line& l, const std::string& body, std::size_t d) {
  const auto bar = body.find('|');
  if (bar == std::string::npos) fail(l, "expected 'coefficients | constant'");
  const auto coeffs = split_ws(body.substr(0, bar));
  const auto rhs = split_ws(body.substr(bar + 1));
  if (rhs.size() != 1) fail(l, "expected exactly one constant after '|'");
  if (coeffs.size() != d)
    fail(l, "expected " + std::to_string(d) + " coefficients, found " + std::to_string(coeffs.size()));
  try {
    RationalVector a;
    for (const auto& c : coeffs) a.push_back(parse_rational(c));
    return {std::move(a), parse_rational(rhs[0])};
  } catch (const ParseError& e) {
    fail(l, e.what());
  }
}

std::string format_row(const RationalVector& a, const Rational& b) {
  std::string s;
  for (const auto& v : a) s += format_rational(v) + " ";
  return s + "| " + format_rational(b);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SignSystem parse_svs(std::string_view text, std::vector<std::string>* warnings) {
  const auto lines = content_lines(text);
  std::vector<std::string> labels;
  bool have_header = false;
  std::vector<SignVector> rows;
  std::unordered_set<SignVector, SignVectorHash> seen;
  for (const auto& l : lines) {
    auto [key, rest] = split_key(l.text);
    if (key == "elements") {
      if (have_header || !rows.empty()) fail(l, "the elements header must come first and only once");
      labels = split_ws(rest);
      if (labels.empty()) fail(l, "empty elements header");
      have_header = true;
      continue;
    }
    if (!key.empty()) fail(l, "unknown header '" + key + "'");
    SignVector v;
    try {
      v = SignVector::parse(l.text);
    } catch (const ParseError& e) {
      fail(l, e.what());
    }
    if (!rows.empty() && v.size() != rows.front().size())
      fail(l, "row has " + std::to_string(v.size()) + " entries, expected " + std::to_string(rows.front().size()));
    if (have_header && v.size() != labels.size())
      fail(l, "row has " + std::to_string(v.size()) + " entries but " + std::to_string(labels.size()) +
                  " elements are declared");
    if (!seen.insert(v).second) {
      if (warnings) warnings->push_back("line " + std::to_string(l.number) + ": duplicate covector " + v.str());
      continue;
    }
    rows.push_back(v);
  }
  if (rows.empty()) throw ParseError("sign-vector file contains no covectors");
  if (rows.front().size() == 0) throw ParseError("covectors must have at least one entry");
  GroundSet ground = have_header ? GroundSet(labels) : GroundSet::numbered(rows.front().size());
  return SignSystem(std::move(ground), std::move(rows));
}

std::string emit_svs(const SignSystem& system) {
  std::string out;
  if (!default_labels(system.ground())) {
    out += "elements:";
    for (const auto& l : system.ground().labels()) out += " " + l;
    out += "\n";
  }
  for (const auto& x : system) out += x.str() + "\n";
  return out;
}

Poset parse_poset(std::string_view text) {
  std::vector<std::string> labels;
  bool have_header = false;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> seen_order;
  auto note = [&](const std::string& s) {
    if (std::find(seen_order.begin(), seen_order.end(), s) == seen_order.end()) seen_order.push_back(s);
  };
  for (const auto& l : content_lines(text)) {
    auto [key, rest] = split_key(l.text);
    if (key == "elements") {
      if (have_header) fail(l, "duplicate elements header");
      labels = split_ws(rest);
      have_header = true;
      continue;
    }
    if (!key.empty()) fail(l, "unknown header '" + key + "'");
    std::vector<std::string> chain;
    std::string rest_text = l.text;
    while (true) {
      const auto lt = rest_text.find('<');
      const auto part = split_ws(rest_text.substr(0, lt));
      if (part.size() != 1) fail(l, "expected 'a < b' with single-token labels");
      chain.push_back(part[0]);
      if (lt == std::string::npos) break;
      rest_text = rest_text.substr(lt + 1);
    }
    for (const auto& c : chain) note(c);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) pairs.emplace_back(chain[i], chain[i + 1]);
  }
  if (!have_header) {
    labels = seen_order;
    if (std::all_of(labels.begin(), labels.end(), is_number))
      std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
  }
  if (labels.empty()) throw ParseError("poset file declares no elements");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw ParseError("cover " + a + " < " + b + " uses an element missing from the header");
    covers.emplace_back(ia->second, ib->second);
  }
  return Poset(labels, covers);
}

std::string emit_poset(const Poset& poset) {
  std::string out = "elements:";
  for (const auto& l : poset.labels()) out += " " + l;
  out += "\n";
  for (const auto& [a, b] : poset.covers()) out += poset.label(a) + " < " + poset.label(b) + "\n";
  return out;
}

RealizationProblem parse_arrangement(std::string_view text) {
  RealizationProblem p;
  bool have_dim = false;
  for (const auto& l : content_lines(text)) {
    auto [key, rest] = split_key(l.text);
    if (key.empty()) fail(l, "expected 'dim:', 'strict:' or 'label:'");
    if (key == "dim") {
      if (have_dim) fail(l, "duplicate dim line");
      const auto words = split_ws(rest);
      if (words.size() != 1 || !is_number(words[0]) || words[0].size() > 6 || std::stoul(words[0]) == 0)
        fail(l, "dim must be a positive integer");
      p.dimension = std::stoul(words[0]);
      have_dim = true;
      continue;
    }
    if (!have_dim) fail(l, "dim must be declared before any constraint");
    if (split_ws(key).size() != 1) fail(l, "labels must be single tokens");
    auto [a, b] = parse_row(l, rest, p.dimension);
    if (key == "strict")
      p.region.strict_constraints.emplace_back(std::move(a), std::move(b));
    else
      p.hyperplanes.push_back(AffineHyperplane{std::move(a), std::move(b), key});
  }
  if (!have_dim) throw ParseError("arrangement file has no dim line");
  if (p.hyperplanes.empty()) throw ParseError("arrangement file has no hyperplanes");
  std::vector<std::string> labels;
  for (const auto& h : p.hyperplanes) labels.push_back(h.label);
  GroundSet check(labels);  // rejects duplicate labels
  p.validate();
  return p;
}

std::string emit_arrangement(const RealizationProblem& problem) {
  std::string out = "dim: " + std::to_string(problem.dimension) + "\n";
  for (const auto& h : problem.hyperplanes) out += h.label + ": " + format_row(h.normal, h.offset) + "\n";
  for (const auto& [c, r] : problem.region.strict_constraints) out += "strict: " + format_row(c, r) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FacePoset face_poset(const SignSystem& system) {
  if (!classify(system).is_com) throw PreconditionError("face poset requires a COM");
  FacePoset f;
  f.elements = system.covectors();
  const auto rel = cover_relation(system);
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (auto j : rel.up[i]) f.covers.emplace_back(i, j);
    if (rel.up[i].empty()) f.covers.emplace_back(i, f.top());
  }
  return f;
}

std::string export_dot(const Graph& graph) {
  std::string out = "graph tope_graph {\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=" + quote(graph.vertices[i].str()) + "];\n";
  for (std::size_t k = 0; k < graph.edges.size(); ++k)
    out += "  v" + std::to_string(graph.edges[k].first) + " -- v" + std::to_string(graph.edges[k].second) +
           " [label=" + quote(graph.ground.label(graph.edge_label[k])) + "];\n";
  return out + "}\n";
}

std::string export_dot(const FacePoset& poset) {
  std::string out = "digraph face_poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.elements.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=" + quote(poset.elements[i].str()) + "];\n";
  out += "  top [label=\"1\"];\n";
  for (const auto& [a, b] : poset.covers)
    out += "  v" + std::to_string(a) + " -> " + (b == poset.top() ? std::string("top") : "v" + std::to_string(b)) +
           ";\n";
  return out + "}\n";
}

Json graph_json(const Graph& graph) {
  Json j;
  j["elements"] = graph.ground.labels();
  Json vertices = Json::array();
  for (const auto& v : graph.vertices) vertices.push_back(v.str());
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (std::size_t k = 0; k < graph.edges.size(); ++k)
    edges.push_back(Json{{"source", graph.edges[k].first},
                         {"target", graph.edges[k].second},
                         {"element", graph.ground.label(graph.edge_label[k])}});
  j["edges"] = std::move(edges);
  j["semisimple_input"] = graph.semisimple_input;
  return j;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return std::string("fnv1a64:") + buf;
}

Json report_document(const std::string& command, const std::string& input_digest, Json results, int exit_status) {
  Json j;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["results"] = std::move(results);
  j["exit_status"] = exit_status;
  return j;
}

}  // namespace comkit
