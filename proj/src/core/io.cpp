#include "berge/io.hpp"

#include <fstream>
#include <sstream>

namespace berge {

namespace {

void append_comment(std::string& out, const std::string& comment) {
  if (comment.empty()) return;
  std::istringstream in(comment);
  std::string line;
  while (std::getline(in, line)) out += "# " + line + "\n";
}

// Non-empty, non-comment lines.
std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

template <typename T>
std::vector<T> parse_numbers(const std::string& line, const char* what) {
  std::istringstream in(line);
  std::vector<T> out;
  long long x;
  while (in >> x) {
    if (x < 0) throw ParseError(std::string("negative value in ") + what);
    out.push_back(static_cast<T>(x));
  }
  if (!in.eof()) throw ParseError(std::string("malformed ") + what + ": '" + line + "'");
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

}  // namespace

std::string format_hypergraph(const Hypergraph& h, const std::string& comment) {
  std::string out;
  append_comment(out, comment);
  out += std::to_string(h.n()) + " " + std::to_string(h.r()) + "\n";
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto ed = h.edge(e);
    for (unsigned j = 0; j < h.r(); ++j) {
      if (j) out += ' ';
      out += std::to_string(ed[j]);
    }
    out += '\n';
  }
  return out;
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::vector<std::string> lines = data_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && blank(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("missing 'n r' header");
  const auto header = parse_numbers<std::size_t>(lines[i], "header");
  if (header.size() != 2) throw ParseError("header must be 'n r'");
  const std::size_t n = header[0];
  const unsigned r = static_cast<unsigned>(header[1]);
  std::vector<Vertex> flat;
  for (++i; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    const auto e = parse_numbers<Vertex>(lines[i], "edge");
    if (e.size() != r) throw ParseError("edge line with wrong arity: '" + lines[i] + "'");
    flat.insert(flat.end(), e.begin(), e.end());
  }
  try {
    return Hypergraph::from_flat(n, r, std::move(flat));
  } catch (const ParameterError& err) {
    throw ParseError(err.what());
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string format_certificate(const BergePath& w, WalkMode mode) {
  std::string out = mode == WalkMode::berge ? "berge-" : "weak-";
  out += w.closed ? "cycle " : "path ";
  out += std::to_string(w.vertices.size()) + "\n";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.vertices[i]);
  }
  out += '\n';
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.edges[i]);
  }
  out += '\n';
  return out;
}

Certificate parse_certificate(const std::string& text) {
  const std::vector<std::string> lines = data_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && blank(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("empty certificate");
  std::istringstream head(lines[i]);
  std::string kind;
  long long k = -1;
  head >> kind >> k;
  if (k < 0) throw ParseError("certificate header must be '<kind> k'");
  Certificate c;
  if (kind == "berge-cycle" || kind == "berge-path") {
    c.mode = WalkMode::berge;
  } else if (kind == "weak-cycle" || kind == "weak-path") {
    c.mode = WalkMode::weak;
  } else {
    throw ParseError("unknown certificate kind '" + kind + "'");
  }
  c.walk.closed = kind.ends_with("cycle");
  c.walk.vertices = i + 1 < lines.size() ? parse_numbers<Vertex>(lines[i + 1], "vertex line")
                                         : std::vector<Vertex>{};
  c.walk.edges = i + 2 < lines.size() ? parse_numbers<EdgeId>(lines[i + 2], "edge line")
                                      : std::vector<EdgeId>{};
  if (c.walk.vertices.size() != static_cast<std::size_t>(k)) {
    throw ParseError("vertex line has " + std::to_string(c.walk.vertices.size()) +
                     " entries, header says " + std::to_string(k));
  }
  c.walk.is_berge = c.mode == WalkMode::berge;
  return c;
}

}  // namespace berge
