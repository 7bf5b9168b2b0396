#include "bbapsp/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace bbapsp {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::optional<std::uint64_t> parse_count(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_graph_file(std::string_view text, bool allow_negative) {
  std::optional<std::size_t> n;
  std::size_t declared_m = 0;
  std::vector<Arc> arcs;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;

    if (fields[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (fields.size() != 4 || fields[1] != "sp") {
        throw ParseError(line_no, "expected 'p sp <n> <m>'");
      }
      auto nv = parse_count(fields[2]);
      auto mv = parse_count(fields[3]);
      if (!nv || !mv || *nv == 0) throw ParseError(line_no, "bad vertex or arc count");
      n = *nv;
      declared_m = *mv;
      arcs.reserve(declared_m);
    } else if (fields[0] == "a") {
      if (!n) throw ParseError(line_no, "arc before problem line");
      if (fields.size() != 4) throw ParseError(line_no, "expected 'a <tail> <head> <length>'");
      auto tail = parse_count(fields[1]);
      auto head = parse_count(fields[2]);
      if (!tail || !head) throw ParseError(line_no, "bad vertex id");
      if (*tail < 1 || *tail > *n || *head < 1 || *head > *n) {
        throw ParseError(line_no, "vertex id out of range [1," + std::to_string(*n) + "]");
      }
      auto length = parse_weight(fields[3]);
      if (!length || !length->is_finite()) throw ParseError(line_no, "bad arc length");
      if (*length < Weight::zero() && !allow_negative) {
        throw ParseError(line_no, "negative arc length " + std::string(fields[3]));
      }
      arcs.push_back(Arc{static_cast<VertexId>(*tail - 1), static_cast<VertexId>(*head - 1), *length});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(fields[0]) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing problem line");
  if (arcs.size() != declared_m) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_m) + " arcs, found " +
                                  std::to_string(arcs.size()));
  }
  return Graph::build(*n, arcs, allow_negative);
}

std::string write_graph_file(const Graph& g) {
  std::ostringstream out;
  out << "p sp " << g.num_vertices() << ' ' << g.num_arcs() << '\n';
  for (const Arc& a : g.arcs()) {
    out << "a " << a.tail + 1 << ' ' << a.head + 1 << ' ' << to_string(a.length) << '\n';
  }
  return out.str();
}

Graph read_graph_path(const std::string& path, bool allow_negative) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str(), allow_negative);
}

void write_graph_path(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << write_graph_file(g);
}

}  // namespace bbapsp
