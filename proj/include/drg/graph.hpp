#pragma once

// Explicit finite simple graphs with bit-set adjacency rows, plus the
// brute-force extraction machinery (BFS distances, distance-regularity
// check) that serves as ground truth for the closed-form parameter theory.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drg/bitset.hpp"
#include "drg/params.hpp"

namespace drg {

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), Bitset(n)) {}

    int n() const { return n_; }

    void add_edge(int u, int v) {
        adj_[static_cast<size_t>(u)].set(v);
        adj_[static_cast<size_t>(v)].set(u);
    }
    void remove_edge(int u, int v) {
        adj_[static_cast<size_t>(u)].reset(v);
        adj_[static_cast<size_t>(v)].reset(u);
    }
    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
    const Bitset& row(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }

    long edge_count() const {
        long twice = 0;
        for (const Bitset& r : adj_) twice += r.count();
        return twice / 2;
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    std::vector<std::string> labels;  // optional per-vertex annotations

  private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

/// Single-source BFS; unreachable vertices get distance -1.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Dense distance table (row per source), entries uint8, 255 = unreachable.
/// Sized for desk-scale graphs; refuses n > 20000.
std::vector<std::vector<std::uint8_t>> all_pairs_distances(const Graph& g);

struct DrgWitness {
    int x = -1, y = -1;  // ordered pair exhibiting the conflict
    int dist = -1;
    std::string what;  // which count differs (c_i / b_i / connectivity)
    long expected = -1, got = -1;

    std::string to_string() const;
};

struct DrgCheckResult {
    std::optional<IntersectionArray> array;  // set iff distance-regular
    std::optional<DrgWitness> witness;
    int diameter = -1;
    bool ok() const { return array.has_value(); }
};

/// Counts |Gamma(y) ∩ Gamma_{i-1}(x)| and |Gamma(y) ∩ Gamma_{i+1}(x)| for
/// every ordered pair; returns the array when the counts are constant per
/// distance, else the lexicographically first witness.
DrgCheckResult check_distance_regular(const Graph& g);

// ---- graph file format ----------------------------------------------------
// A single JSON document: {"n": ..., "edges": [[u,v],...], "labels"?: [...],
// "family"?: "...", "args"?: [...]}. The writer is canonical (edges sorted,
// one pair per line) so identical graphs serialize byte-identically.

struct GraphFile {
    Graph graph;
    std::string family;         // optional
    std::vector<long> args;     // optional
};

std::string write_graph_text(const GraphFile& gf);
Fallible<GraphFile> read_graph_text(const std::string& text);
Fallible<GraphFile> load_graph_file(const std::string& path);
Fallible<bool> save_graph_file(const GraphFile& gf, const std::string& path);

}  // namespace drg
