#include "minorlab/io.hpp"

#include <fstream>
#include <sstream>

#include "minorlab/errors.hpp"

namespace minorlab {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("edge list: missing header line");
  std::istringstream head(line);
  long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: header must be 'n m'");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream row(line);
    long u, v;
    if (!(row >> u >> v)) throw ParseError("edge list: bad edge line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range in '" + line + "'");
    if (u == v) throw ParseError("edge list: loop at " + std::to_string(u));
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph parse_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  std::size_t pos = 0;
  auto byte = [&]() -> int {
    if (pos >= s.size()) throw ParseError("graph6: truncated");
    int c = static_cast<unsigned char>(s[pos++]) - 63;
    if (c < 0 || c > 63) throw ParseError("graph6: invalid character");
    return c;
  };
  long n;
  if (!s.empty() && s[0] == '~') {
    ++pos;
    if (s.size() > 1 && s[1] == '~') throw ParseError("graph6: graphs this large are not supported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte();
  } else {
    n = byte();
  }
  std::vector<Edge> edges;
  int bits_left = 0, cur = 0;
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i) {
      if (bits_left == 0) {
        cur = byte();
        bits_left = 6;
      }
      --bits_left;
      if (cur >> bits_left & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (pos != s.size()) throw ParseError("graph6: trailing characters");
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw DomainError("graph6: graph too large");
  }
  int cur = 0, bits = 0;
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(cur + 63));
        cur = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((cur << (6 - bits)) + 63));
  return out;
}

GraphFormat format_from_name(const std::string& name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  throw DomainError("unknown graph format '" + name + "'");
}

Graph read_graph_file(const std::string& path, const std::string& format) {
  std::string text = read_text_file(path);
  bool g6 = format == "auto" ? (path.size() > 3 && path.substr(path.size() - 3) == ".g6")
                             : format_from_name(format) == GraphFormat::Graph6;
  if (g6) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
    throw ParseError("graph6: empty file");
  }
  std::istringstream in(text);
  return read_edge_list(in);
}

nlohmann::json vertex_set_json(const VertexSet& s) { return nlohmann::json(s.members()); }

VertexSet vertex_set_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected an array of vertex ids");
  std::vector<Vertex> vs;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("vertex ids must be integers");
    vs.push_back(x.get<Vertex>());
  }
  return VertexSet(vs);
}

nlohmann::json path_json(const Path& p) { return nlohmann::json(p); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    const int n = j.at("n").get<int>();
    if (n < 0) throw ParseError("graph: negative order");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph: edge must be a pair");
      Vertex u = e[0].get<Vertex>(), v = e[1].get<Vertex>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("graph: bad edge");
      edges.push_back(make_edge(u, v));
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph: ") + e.what());
  }
}

std::string canonical_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace minorlab
