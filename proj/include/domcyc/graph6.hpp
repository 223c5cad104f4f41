#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domcyc/graph.hpp"

namespace domcyc {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6, restricted to order <= 64:
//   order field N(n): one byte n+63 for n <= 62, else byte 126 followed by
//   three bytes holding n in 18 bits big-endian, 6 bits per byte, each +63;
//   then the upper-triangle adjacency bits in column order
//   x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ... packed big-endian
//   into 6-bit groups, zero padded, each group +63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);

enum class MalformedPolicy { fail_fast, skip };

/// Newline-delimited graph6 reader. Lines beginning with ">>graph6<<" have the
/// header stripped; a header with nothing after it is skipped. visit receives
/// the record index (malformed skipped lines do not consume an index).
/// Returns the number of graphs visited.
size_t read_graph6_stream(std::istream& in, MalformedPolicy policy,
                          const std::function<void(size_t index, const Graph&)>& visit,
                          const std::function<void(size_t line_no, const std::string& message)>& diagnose = {});

size_t read_graph6_file(const std::string& path, MalformedPolicy policy,
                        const std::function<void(size_t index, const Graph&)>& visit,
                        const std::function<void(size_t line_no, const std::string& message)>& diagnose = {});

}  // namespace domcyc
