#include "domcyc/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "domcyc/graph6.hpp"

namespace domcyc {

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

namespace {

// appends a path of `len` edges hanging off `anchor`, using labels from *next
void attach_path(std::vector<std::pair<int, int>>& edges, int anchor, int len, int* next) {
  int prev = anchor;
  for (int i = 0; i < len; ++i) {
    edges.emplace_back(prev, *next);
    prev = (*next)++;
  }
}

}  // namespace

Graph zee_graph(int n) {
  if (n < 1) throw std::invalid_argument("Z index must be >= 1");
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
  int next = 3;
  attach_path(edges, 2, n, &next);
  return Graph(next, edges);
}

Graph bee_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("B indices must be >= 1");
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
  int next = 3;
  attach_path(edges, 1, m, &next);
  attach_path(edges, 2, n, &next);
  return Graph(next, edges);
}

Graph net_graph(int l, int m, int n) {
  if (l < 1 || m < 1 || n < 1) throw std::invalid_argument("N indices must be >= 1");
  std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
  int next = 3;
  attach_path(edges, 0, l, &next);
  attach_path(edges, 1, m, &next);
  attach_path(edges, 2, n, &next);
  return Graph(next, edges);
}

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph bowtie_star() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {0, 5}});
}

Graph subdivided_claw() {
  return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

Graph subdivided_claw_minus_leaf() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

namespace {

std::optional<std::vector<int>> parse_indices(std::string_view s, size_t want) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t sep = s.find('_', pos);
    std::string_view tok = s.substr(pos, sep == std::string_view::npos ? s.size() - pos : sep - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) return std::nullopt;
    out.push_back(value);
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  if (out.size() != want) return std::nullopt;
  return out;
}

std::optional<Graph> build_named(const std::string& name) {
  if (name == "W") return bowtie();
  if (name == "W*") return bowtie_star();
  if (name == "K1_3") return claw();
  if (name == "K1_3*") return subdivided_claw();
  if (name == "K1_3**") return subdivided_claw_minus_leaf();
  if (name == "K4-") return diamond();
  if (name.size() < 2) return std::nullopt;
  std::string_view rest = std::string_view(name).substr(1);
  switch (name[0]) {
    case 'P':
      if (auto ix = parse_indices(rest, 1); ix && (*ix)[0] >= 3 && (*ix)[0] <= kMaxOrder)
        return path_graph((*ix)[0]);
      return std::nullopt;
    case 'K':
      if (auto ix = parse_indices(rest, 1); ix && (*ix)[0] >= 3 && (*ix)[0] <= kMaxOrder)
        return complete_graph((*ix)[0]);
      return std::nullopt;
    case 'Z':
      if (auto ix = parse_indices(rest, 1); ix && (*ix)[0] >= 1 && (*ix)[0] + 3 <= kMaxOrder)
        return zee_graph((*ix)[0]);
      return std::nullopt;
    case 'B':
      if (auto ix = parse_indices(rest, 2); ix && (*ix)[0] >= 1 && (*ix)[1] >= 1 &&
                                            (*ix)[0] + (*ix)[1] + 3 <= kMaxOrder)
        return bee_graph((*ix)[0], (*ix)[1]);
      return std::nullopt;
    case 'N':
      if (auto ix = parse_indices(rest, 3); ix && (*ix)[0] >= 1 && (*ix)[1] >= 1 && (*ix)[2] >= 1 &&
                                            (*ix)[0] + (*ix)[1] + (*ix)[2] + 3 <= kMaxOrder)
        return net_graph((*ix)[0], (*ix)[1], (*ix)[2]);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

ForbiddenCatalog ForbiddenCatalog::with_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open override file " + path);
  ForbiddenCatalog cat;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string name, g6, extra;
    if (!(fields >> name) || name[0] == '#') continue;
    if (!(fields >> g6) || (fields >> extra))
      throw std::runtime_error("override line " + std::to_string(line_no) +
                               ": expected NAME GRAPH6STRING");
    if (!build_named(name))
      throw std::runtime_error("override line " + std::to_string(line_no) + ": unknown name " + name);
    Graph g = graph6_decode(g6);
    if (g.order() < 3)
      throw std::runtime_error("override line " + std::to_string(line_no) + ": order < 3");
    if (!is_connected(g))
      throw std::runtime_error("override line " + std::to_string(line_no) + ": disconnected graph");
    cat.overrides_.insert_or_assign(name, g);
  }
  return cat;
}

Graph ForbiddenCatalog::resolve(const std::string& name) const {
  if (auto it = overrides_.find(name); it != overrides_.end()) return it->second;
  if (auto g = build_named(name)) return *g;
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> ForbiddenCatalog::core_names() const {
  std::vector<std::string> names = {"B1_2", "K1_3", "K1_3*", "K1_3**", "K3",  "K4-", "N1_1_1",
                                    "P4",   "P5",   "W",     "W*",     "Z1", "Z4"};
  for (const auto& [name, g] : overrides_)
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

std::string ForbiddenCatalog::fingerprint() const {
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
  };
  for (const auto& name : core_names()) {
    mix(name);
    mix("=");
    mix(graph6_encode(resolve(name)));
    mix("\n");
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool contains_induced(const Graph& g, const Graph& h) {
  int k = h.order();
  int n = g.order();
  if (k == 0) return true;
  if (k > n) return false;

  // pattern vertices in descending-degree order (stable on index)
  std::array<int, kMaxOrder> order{};
  for (int i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.begin() + k,
                   [&](int a, int b) { return h.degree(a) > h.degree(b); });

  std::array<int, kMaxOrder> map{};
  std::array<int, kMaxOrder> cand{};  // next candidate per depth
  uint64_t used = 0;
  int depth = 0;
  cand[0] = 0;
  while (depth >= 0) {
    int u = order[depth];
    int v = cand[depth];
    bool advanced = false;
    for (; v < n; ++v) {
      if ((used >> v) & 1) continue;
      if (g.degree(v) < h.degree(u)) continue;
      bool ok = true;
      for (int j = 0; j < depth; ++j) {
        if (g.adjacent(v, map[j]) != h.adjacent(u, order[j])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[depth] = v;
      cand[depth] = v + 1;
      used |= uint64_t{1} << v;
      if (depth + 1 == k) return true;
      ++depth;
      cand[depth] = 0;
      advanced = true;
      break;
    }
    if (!advanced) {
      --depth;
      if (depth >= 0) used &= ~(uint64_t{1} << map[depth]);
    }
  }
  return false;
}

bool is_family_free(const Graph& g, const std::vector<Graph>& family) {
  if (family.empty()) throw std::invalid_argument("family must be nonempty");
  // cheapest members first: containment of a small pattern rejects fast
  std::vector<const Graph*> by_order;
  by_order.reserve(family.size());
  for (const Graph& h : family) by_order.push_back(&h);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const Graph* a, const Graph* b) { return a->order() < b->order(); });
  for (const Graph* h : by_order)
    if (contains_induced(g, *h)) return false;
  return true;
}

bool family_leq(const std::vector<Graph>& f1, const std::vector<Graph>& f2) {
  if (f1.empty() || f2.empty()) throw std::invalid_argument("families must be nonempty");
  for (const Graph& h2 : f2) {
    bool hit = false;
    for (const Graph& h1 : f1) {
      if (contains_induced(h2, h1)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<NamedPair> maximal_pairs(const ForbiddenCatalog& catalog) {
  static const std::array<std::array<const char*, 2>, 7> kPairs = {{
      {"K1_3", "Z4"},
      {"K1_3", "B1_2"},
      {"K1_3", "N1_1_1"},
      {"P4", "W"},
      {"K1_3*", "Z1"},
      {"P5", "W*"},
      {"P5", "K4-"},
  }};
  std::vector<NamedPair> out;
  out.reserve(kPairs.size());
  for (const auto& p : kPairs)
    out.push_back(NamedPair{{p[0], p[1]}, {catalog.resolve(p[0]), catalog.resolve(p[1])}});
  return out;
}

PairVerdict classify_pair(const Graph& a, const Graph& b, const ForbiddenCatalog& catalog) {
  if (a.order() < 3 || b.order() < 3)
    throw std::invalid_argument("pair members must have order >= 3");
  if (!is_connected(a) || !is_connected(b))
    throw std::invalid_argument("pair members must be connected");
  PairVerdict verdict;
  std::vector<Graph> pair = {a, b};
  for (const NamedPair& m : maximal_pairs(catalog)) {
    if (family_leq(pair, {m.graphs[0], m.graphs[1]})) verdict.dominated_by.push_back(m.names);
  }
  verdict.covered = !verdict.dominated_by.empty();
  return verdict;
}

}  // namespace domcyc
