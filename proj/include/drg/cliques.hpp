#pragma once

#include <vector>

#include "drg/fallible.hpp"
#include "drg/graph.hpp"

namespace drg {

/// All inclusion-maximal cliques with at least `min_size` vertices
/// (Bron-Kerbosch with pivoting). Each clique is sorted; the list is in
/// lexicographic order. Aborts with the count when `cap` is exceeded.
Fallible<std::vector<std::vector<int>>> maximal_cliques(const Graph& g, int min_size,
                                                        long cap = 5'000'000);

/// All cliques of size exactly `size` that contain the edge (u, v); every
/// further vertex comes from the common neighborhood of u and v. Sorted,
/// lexicographic order.
std::vector<std::vector<int>> cliques_of_size_through_edge(const Graph& g, int u, int v,
                                                           int size);

/// Induced subgraph on `vertices` (need not be sorted); labels dropped.
/// Vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace drg
