#include "relpack/formats.hpp"

#include <cctype>
#include <sstream>

namespace relpack {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view strip_newline(std::string_view s) {
  if (s.ends_with("\r\n")) return s.substr(0, s.size() - 2);
  if (s.ends_with("\n")) return s.substr(0, s.size() - 1);
  return s;
}

int checked_byte(std::string_view s, size_t pos) {
  if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
  unsigned char c = s[pos];
  if (c < 63 || c > 126)
    throw ParseError("byte outside printable range 63..126", pos);
  return c - 63;
}

// N(n): one byte for n <= 62, "~" + 3 bytes for n <= 258047, "~~" + 6 bytes
// beyond (parsed but capped).
long long parse_order(std::string_view s, size_t& pos) {
  size_t start = pos;
  int b = checked_byte(s, pos);
  if (b != 63) {
    ++pos;
    return b;
  }
  ++pos;
  int b1 = checked_byte(s, pos);
  int count = 3;
  if (b1 == 63) {
    ++pos;
    count = 6;
  }
  long long n = 0;
  for (int i = 0; i < count; ++i) {
    n = (n << 6) | checked_byte(s, pos);
    ++pos;
  }
  if (n > Graph::kMaxVertices)
    throw SizeLimitError("graph6 order " + std::to_string(n) +
                         " exceeds the 4096-vertex cap (at byte " +
                         std::to_string(start) + ")");
  return n;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = strip_newline(text);
  size_t pos = 0;
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header)
    pos = kGraph6Header.size();
  int n = int(parse_order(s, pos));
  Graph g(n);
  long long nbits = (long long)n * (n - 1) / 2;
  size_t nbytes = size_t((nbits + 5) / 6);
  if (s.size() - pos < nbytes)
    throw ParseError("truncated adjacency bit stream", s.size());
  if (s.size() - pos > nbytes)
    throw ParseError("trailing data after adjacency bits", pos + nbytes);
  int u = 0, v = 1;
  for (size_t i = 0; i < nbytes; ++i) {
    int b = checked_byte(s, pos + i);
    for (int k = 5; k >= 0; --k) {
      bool bit = (b >> k) & 1;
      if (v >= n) {
        if (bit) throw ParseError("nonzero padding bits", pos + i);
        continue;
      }
      if (bit) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(char(63 + n));
  } else {
    out.push_back('~');
    out.push_back(char(63 + ((n >> 12) & 63)));
    out.push_back(char(63 + ((n >> 6) & 63)));
    out.push_back(char(63 + (n & 63)));
  }
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(char(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(char(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_sparse6(std::string_view text) {
  std::string_view s = strip_newline(text);
  size_t pos = 0;
  if (s.substr(0, kSparse6Header.size()) == kSparse6Header)
    pos = kSparse6Header.size();
  if (pos >= s.size() || s[pos] != ':')
    throw ParseError("sparse6 must start with ':'", pos);
  ++pos;
  int n = int(parse_order(s, pos));
  Graph g(n);
  if (n == 0) {
    if (pos != s.size()) throw ParseError("trailing data", pos);
    return g;
  }
  int k = 1;
  while ((1 << k) < n - 1 + 1) ++k;  // bits needed for values 0..n-1

  std::vector<int> bits;
  bits.reserve((s.size() - pos) * 6);
  for (size_t i = pos; i < s.size(); ++i) {
    int b = checked_byte(s, i);
    for (int j = 5; j >= 0; --j) bits.push_back((b >> j) & 1);
  }
  size_t at = 0;
  long long v = 0;
  while (at + 1 + k <= bits.size()) {
    int b = bits[at++];
    long long x = 0;
    for (int j = 0; j < k; ++j) x = (x << 1) | bits[at++];
    if (b) ++v;
    if (v >= n || x >= n) break;
    if (x > v) {
      v = x;
    } else if (x < v) {
      if (!g.adjacent(int(x), int(v))) g.add_edge(int(x), int(v));
    }
    // x == v would be a loop; only arises from 1-padding, ignored
  }
  return g;
}

Graph parse_shorthand(std::string_view text) {
  std::string_view s = strip_newline(text);
  if (s == "petersen") return petersen();
  if (s.size() < 2) throw ParseError("unrecognized shorthand", 0);
  char kind = s[0];
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit((unsigned char)s[i]))
      throw ParseError("unrecognized shorthand", i);
  long n = std::stol(std::string(s.substr(1)));
  if (n > Graph::kMaxVertices) throw SizeLimitError("shorthand order too large");
  switch (kind) {
    case 'C':
      if (n < 3) throw ParseError("cycle shorthand needs n >= 3", 1);
      return cycle(int(n));
    case 'K':
      return complete(int(n));
    case 'P':
      return path(int(n));
    case 'E':
      return empty_graph(int(n));
    default:
      throw ParseError("unrecognized shorthand", 0);
  }
}

Graph parse_edgelist(std::string_view text) {
  std::string body(text);
  std::istringstream in(body);
  std::string line;
  size_t offset = 0;
  int n = -1;
  Graph g;
  bool have_header = false;
  while (std::getline(in, line)) {
    size_t line_start = offset;
    offset += line.size() + 1;
    if (line.empty() || line == "\r") continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      long count = -1;
      if (!(ls >> tag >> count) || tag != "n" || count < 0)
        throw ParseError("edge list must start with 'n <count>'", line_start);
      if (count > Graph::kMaxVertices)
        throw SizeLimitError("edge list order too large");
      n = int(count);
      g = Graph(n);
      have_header = true;
      continue;
    }
    long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw ParseError("expected 'u v' edge line", line_start);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge endpoint out of range", line_start);
    if (u == v) throw ParseError("loops are not allowed", line_start);
    if (g.adjacent(int(u), int(v)))
      throw ParseError("duplicate edge", line_start);
    g.add_edge(int(u), int(v));
  }
  if (!have_header) throw ParseError("empty edge list", 0);
  return g;
}

namespace {

bool matches_shorthand(std::string_view s) {
  s = strip_newline(s);
  if (s == "petersen") return true;
  if (s.size() < 2) return false;
  if (s[0] != 'C' && s[0] != 'K' && s[0] != 'P' && s[0] != 'E') return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit((unsigned char)s[i])) return false;
  return true;
}

}  // namespace

Graph parse_graph_text(std::string_view text) {
  std::string_view s = text;
  if (matches_shorthand(s)) return parse_shorthand(s);
  if (s.starts_with(":") || s.starts_with(kSparse6Header))
    return parse_sparse6(s);
  if (s.starts_with("n ") || s.find('\n') != std::string_view::npos)
    return parse_edgelist(s);
  return parse_graph6(s);
}

std::string unescape_cli_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\' && i + 1 < text.size() && text[i + 1] == 'n') {
      out.push_back('\n');
      ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace relpack
