#include "domcyc/graph6.hpp"

#include <fstream>
#include <istream>

namespace domcyc {

namespace {

constexpr int kBias = 63;

// number of payload bytes for the packed upper triangle
size_t payload_len(int n) {
  return (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view line) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (line.size() - pos < k) throw Graph6Error("truncated graph6 record");
  };
  auto sextet = [&]() -> int {
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw Graph6Error("byte out of range 63..126");
    return c - kBias;
  };

  need(1);
  int n;
  if (static_cast<unsigned char>(line[0]) == 126) {
    ++pos;
    need(3);
    int a = sextet(), b = sextet(), c = sextet();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = sextet();
  }
  if (n > kMaxOrder) throw Graph6Error("order exceeds 64");

  need(payload_len(n));
  std::array<uint64_t, kMaxOrder> rows{};
  int group = 0, left = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (left == 0) {
        group = sextet();
        left = 6;
      }
      if ((group >> --left) & 1) {
        rows[row] |= uint64_t{1} << col;
        rows[col] |= uint64_t{1} << row;
      }
    }
  }
  if (left > 0 && (group & ((1 << left) - 1)) != 0) throw Graph6Error("nonzero padding bits");
  if (pos != line.size()) throw Graph6Error("trailing garbage after record");
  return Graph::from_rows(n, rows.data());
}

size_t read_graph6_stream(std::istream& in, MalformedPolicy policy,
                          const std::function<void(size_t, const Graph&)>& visit,
                          const std::function<void(size_t, const std::string&)>& diagnose) {
  static constexpr std::string_view kHeader = ">>graph6<<";
  std::string line;
  size_t line_no = 0, index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view rec = line;
    if (rec.substr(0, kHeader.size()) == kHeader) rec.remove_prefix(kHeader.size());
    if (rec.empty()) continue;
    try {
      Graph g = graph6_decode(rec);
      visit(index++, g);
    } catch (const Graph6Error& e) {
      if (diagnose) diagnose(line_no, e.what());
      if (policy == MalformedPolicy::fail_fast)
        throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return index;
}

size_t read_graph6_file(const std::string& path, MalformedPolicy policy,
                        const std::function<void(size_t, const Graph&)>& visit,
                        const std::function<void(size_t, const std::string&)>& diagnose) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in, policy, visit, diagnose);
}

}  // namespace domcyc
