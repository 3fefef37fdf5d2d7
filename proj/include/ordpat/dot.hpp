#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ordpat/poset.hpp"

namespace ordpat {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Renders the Hasse diagram: nodes grouped into ranks by height with the
/// lowest level at the bottom, edges given by the transitive reduction.
/// Output is stable: levels ascend, and nodes and edges keep the poset's
/// lexicographic element order.
inline std::string export_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph {\n  rankdir=BT;\n";
  const auto h = heights(p);
  std::map<std::size_t, std::vector<std::string>> levels;
  for (std::size_t i = 0; i < p.size(); ++i) levels[h[i]].push_back(p.label(i));
  for (const auto& [lvl, labels] : levels) {
    out << "  { rank=same;";
    for (const auto& l : labels) out << " " << detail::dot_quote(l) << ";";
    out << " }\n";
  }
  for (const auto& [a, b] : transitive_reduction(p))
    out << "  " << detail::dot_quote(a) << " -> " << detail::dot_quote(b)
        << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ordpat
