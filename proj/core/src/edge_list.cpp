#include "omitlab/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "omitlab/error.hpp"

namespace omitlab {

namespace {

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Hypergraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    if (!have_header) {
      long long nn = -1, mm = -1;
      std::string extra;
      if (!(ls >> nn >> mm) || nn < 0 || mm < 0 || (ls >> extra)) {
        throw ParseError("expected header 'n m'", line_no);
      }
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      have_header = true;
      edges.reserve(m);
      continue;
    }
    Edge e;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("invalid vertex token '" + tok + "'", line_no);
      }
      if (used != tok.size() || tok[0] == '-') {
        throw ParseError("invalid vertex token '" + tok + "'", line_no);
      }
      if (v >= n) throw ParseError("vertex " + tok + " out of range", line_no);
      e.push_back(static_cast<Vertex>(v));
    }
    if (e.size() < 2) throw ParseError("edge needs at least two vertices", line_no);
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (e[i] <= e[i - 1]) {
        throw ParseError("edge vertices must be strictly ascending", line_no);
      }
    }
    if (edges.size() == m) throw ParseError("more edges than declared", line_no);
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError("missing header", line_no);
  if (edges.size() != m) {
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no);
  }
  return Hypergraph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

std::string to_edge_list(const Hypergraph& h) {
  std::ostringstream os;
  write_edge_list(os, h);
  return os.str();
}

Hypergraph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

Hypergraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  write_edge_list(out, h);
}

}  // namespace omitlab
