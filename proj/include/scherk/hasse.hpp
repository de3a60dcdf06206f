#pragma once

#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "elements.hpp"

namespace scherk {

/// Covering pairs (lower, upper) of the order restricted to `elements`,
/// in lexicographic index order.
inline std::vector<std::pair<std::size_t, std::size_t>>
covering_edges(std::span<const PosetElement> elements) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lt[i][j] = i != j && less(elements[i], elements[j]);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (lt[i][k] && lt[k][j]) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

/// Graphviz digraph of the Hasse diagram, bottom to top. Nodes are named
/// n0, n1, ... in input order and labelled "<kind> dim <d> rank <r>".
inline void write_hasse_dot(std::ostream &out,
                            std::span<const PosetElement> elements) {
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto &p = elements[i];
    out << "  n" << i << " [label=\"" << kind_letter(p.kind()) << " dim "
        << p.dim() << " rank " << rank(p) << "\"];\n";
  }
  for (auto [lo, hi] : covering_edges(elements))
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
}

inline std::string hasse_dot(std::span<const PosetElement> elements) {
  std::ostringstream os;
  write_hasse_dot(os, elements);
  return os.str();
}

} // namespace scherk
