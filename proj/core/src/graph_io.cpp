#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "triplepoint/error.hpp"
#include "triplepoint/graph.hpp"

namespace triplepoint {
namespace {

struct Line {
  int number = 0;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto raw = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    ++number;
    const auto line = trim(raw);
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t j = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

int parse_int(std::string_view token, int line, const char* what) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

class BlockReader {
 public:
  explicit BlockReader(const std::vector<Line>& lines) : lines_(lines) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  void expect_header(std::string_view header) {
    if (done()) throw ParseError(last_line(), "missing section " + std::string(header));
    if (peek().text != header) {
      throw ParseError(peek().number, "expected section " + std::string(header) + ", got '" +
                                          std::string(peek().text) + "'");
    }
    ++pos_;
  }

  GradedBigraph read_graph() {
    const auto [depth_line, depth_value] = read_key("depths");
    const auto depth_tokens = split_ws(depth_value);
    if (depth_tokens.size() != 1) throw ParseError(depth_line, "depths takes a single integer");
    const int depths = parse_int(depth_tokens.front(), depth_line, "depth count");
    if (depths < 1) throw ParseError(depth_line, "depths must be at least 1");

    const auto [count_line, count_value] = read_key("counts");
    const auto count_tokens = split_ws(count_value);
    if (static_cast<int>(count_tokens.size()) != depths) {
      throw ParseError(count_line, "expected " + std::to_string(depths) + " counts, got " +
                                       std::to_string(count_tokens.size()));
    }
    std::vector<int> counts;
    for (auto token : count_tokens) counts.push_back(parse_int(token, count_line, "vertex count"));
    for (std::size_t d = 0; d < counts.size(); ++d) {
      if (counts[d] < 1) {
        throw ParseError(count_line, "depth " + std::to_string(d) + " needs a positive count");
      }
    }

    const auto [edge_line, edge_value] = read_key("edges");
    std::vector<Edge> edges;
    for (auto token : split_ws(edge_value)) {
      const auto colon = token.find(':');
      const auto dash = token.find('-', colon == std::string_view::npos ? 0 : colon);
      if (colon == std::string_view::npos || dash == std::string_view::npos) {
        throw ParseError(edge_line, "malformed edge token '" + std::string(token) +
                                        "', expected d:u-v");
      }
      Edge e;
      e.depth = parse_int(token.substr(0, colon), edge_line, "edge depth");
      e.lower = parse_int(token.substr(colon + 1, dash - colon - 1), edge_line, "edge source");
      e.upper = parse_int(token.substr(dash + 1), edge_line, "edge target");
      if (e.depth < 0 || e.depth + 1 >= depths) {
        throw ParseError(edge_line, "edge '" + std::string(token) + "' leaves the " +
                                        std::to_string(depths) + " declared depths");
      }
      if (e.lower < 0 || e.lower >= counts[e.depth] || e.upper < 0 ||
          e.upper >= counts[e.depth + 1]) {
        throw ParseError(edge_line, "edge '" + std::string(token) + "' names a missing vertex");
      }
      edges.push_back(e);
    }
    return GradedBigraph::create(std::move(counts), std::move(edges));
  }

 private:
  std::pair<int, std::string_view> read_key(std::string_view key) {
    if (done()) throw ParseError(last_line(), "missing key '" + std::string(key) + "'");
    const Line& line = peek();
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos || trim(line.text.substr(0, colon)) != key) {
      throw ParseError(line.number, "expected key '" + std::string(key) + "', got '" +
                                        std::string(line.text) + "'");
    }
    ++pos_;
    return {line.number, trim(line.text.substr(colon + 1))};
  }

  const std::vector<Line>& lines_;
  std::size_t pos_ = 0;
};

void write_block(std::ostream& os, const GradedBigraph& g) {
  os << "depths: " << g.depth_count() << "\ncounts:";
  for (int c : g.vertex_counts()) os << ' ' << c;
  os << "\nedges:";
  for (const Edge& e : g.edges()) os << ' ' << e.depth << ':' << e.lower << '-' << e.upper;
  os << '\n';
}

}  // namespace

GradedBigraph parse_graph(std::string_view text) {
  const auto lines = significant_lines(text);
  BlockReader reader(lines);
  GradedBigraph g = reader.read_graph();
  if (!reader.done()) throw ParseError(reader.peek().number, "unexpected trailing content");
  return g;
}

GraphPair parse_graph_pair(std::string_view text) {
  const auto lines = significant_lines(text);
  BlockReader reader(lines);
  reader.expect_header("[principal]");
  GradedBigraph principal = reader.read_graph();
  reader.expect_header("[dual]");
  GradedBigraph dual = reader.read_graph();
  if (!reader.done()) throw ParseError(reader.peek().number, "unexpected trailing content");
  return {std::move(principal), std::move(dual)};
}

std::string serialize(const GradedBigraph& g) {
  std::ostringstream os;
  write_block(os, g);
  return os.str();
}

std::string serialize(const GraphPair& pair) {
  std::ostringstream os;
  os << "[principal]\n";
  write_block(os, pair.principal);
  os << "[dual]\n";
  write_block(os, pair.dual);
  return os.str();
}

}  // namespace triplepoint
