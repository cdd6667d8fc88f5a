#ifndef SUMDIST_IO_HPP
#define SUMDIST_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sumdist/hypergraph.hpp"

// Text formats, all 0-based and whitespace separated:
//   .hg  "n m" then m lines "k v_1 ... v_k"
//   .g   "n m" then m lines "u v"
// Blank lines are ignored; line numbers in errors count them.

namespace sumdist::io {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank line split into tokens; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_; }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

inline std::uint64_t to_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  return value;
}

inline std::pair<std::uint64_t, std::uint64_t> read_header(LineReader& in) {
  std::vector<std::string_view> tok;
  if (!in.next(tok)) throw ParseError("empty input");
  if (tok.size() != 2) throw ParseError("header must be 'n m'", in.line());
  return {to_uint(tok[0], in.line()), to_uint(tok[1], in.line())};
}

inline void expect_end(LineReader& in) {
  std::vector<std::string_view> tok;
  if (in.next(tok)) throw ParseError("unexpected content after the last edge", in.line());
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::string_view text) {
  detail::LineReader in(text);
  auto [n, m] = detail::read_header(in);
  if (n == 0) throw ValidationError("vertex count must be positive", in.line());
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::vector<std::string_view> tok;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!in.next(tok)) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    const std::size_t line = in.line();
    const std::uint64_t k = detail::to_uint(tok[0], line);
    if (tok.size() != k + 1)
      throw ParseError("edge declares " + std::to_string(k) + " vertices but lists " +
                           std::to_string(tok.size() - 1),
                       line);
    if (k == 0) throw ValidationError("empty edge", line);
    Edge e;
    for (std::size_t j = 1; j < tok.size(); ++j) {
      const std::uint64_t v = detail::to_uint(tok[j], line);
      if (v >= n)
        throw ValidationError("vertex index " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")",
                              line);
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ValidationError("edge repeats a vertex", line);
    for (std::size_t prev = 0; prev < edges.size(); ++prev)
      if (edges[prev] == e)
        throw ValidationError("duplicate edge (same as line " + std::to_string(lines[prev]) + ")", line);
    edges.push_back(std::move(e));
    lines.push_back(line);
  }
  detail::expect_end(in);
  return Hypergraph(n, std::move(edges));
}

inline Graph parse_graph(std::string_view text) {
  detail::LineReader in(text);
  auto [n, m] = detail::read_header(in);
  if (n == 0) throw ValidationError("vertex count must be positive", in.line());
  Graph::EdgeList edges;
  std::vector<std::string_view> tok;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!in.next(tok)) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    const std::size_t line = in.line();
    if (tok.size() != 2) throw ParseError("edge line must be 'u v'", line);
    const std::uint64_t u = detail::to_uint(tok[0], line), v = detail::to_uint(tok[1], line);
    if (u >= n || v >= n) throw ValidationError("endpoint out of range", line);
    if (u == v) throw ValidationError("self-loop", line);
    auto key = std::minmax(static_cast<Vertex>(u), static_cast<Vertex>(v));
    for (const auto& e : edges)
      if (std::minmax(e.first, e.second) == key) throw ValidationError("duplicate edge", line);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  detail::expect_end(in);
  return Graph(n, edges);
}

inline std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const Edge& e : h.edges()) {
    out << e.size();
    for (Vertex v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

inline std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << contents;
}

/// {"labels":[...],"max_label":N,"verified":bool}
inline nlohmann::ordered_json labeling_json(const Labeling& f, bool verified) {
  nlohmann::ordered_json j;
  j["labels"] = f.values();
  j["max_label"] = f.max_label();
  j["verified"] = verified;
  return j;
}

inline Labeling labeling_from_json(const nlohmann::json& j) {
  const auto& labels = j.is_array() ? j : j.at("labels");
  std::vector<Label> values;
  for (const auto& x : labels) {
    if (!x.is_number_unsigned()) throw ParseError("labels must be positive integers");
    values.push_back(x.get<Label>());
  }
  return Labeling(std::move(values));
}

}  // namespace sumdist::io

#endif
