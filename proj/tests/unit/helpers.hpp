#ifndef TIGHTLAB_TEST_HELPERS_HPP
#define TIGHTLAB_TEST_HELPERS_HPP

#include <vector>

#include "tightlab/hypergraph.hpp"

namespace tl::test {

inline Hypergraph graph(int n, int k, const std::vector<std::vector<int>>& edges) {
  return build_hypergraph(n, k, edges).graph;
}

inline VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) s |= singleton(v);
  return s;
}

// Every k-graph on n vertices whose edge set is the bitmask `mask` over the
// lexicographic list of k-sets.
inline Hypergraph from_mask(int n, int k, std::uint64_t mask) {
  const std::vector<VertexSet> all = subsets_lex(n, k);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < all.size(); ++i)
    if ((mask >> i) & 1U) edges.push_back(all[i]);
  return Hypergraph(n, k, std::move(edges));
}

}  // namespace tl::test

#endif
