#pragma once

// Constructive verification of clique geometry on explicit graphs: Delsarte
// clique covers, line/assembly structure, dual Pasch, grid-local structure
// and the induced 2-designs. Every check returns a witness on failure,
// never a bare boolean; refutations are the scanner's payload.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "drg/graph.hpp"
#include "drg/params.hpp"

namespace drg {

using DistTable = std::vector<std::vector<std::uint8_t>>;

inline std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

struct CliqueCover {
    std::vector<std::vector<int>> lines;           // sorted vertex lists
    std::vector<std::vector<int>> lines_through;   // per vertex, ascending
    std::unordered_map<std::uint64_t, int> of_edge;

    int line_of(int u, int v) const {
        auto it = of_edge.find(edge_key(u, v));
        return it == of_edge.end() ? -1 : it->second;
    }
};

struct CoverResult {
    std::optional<CliqueCover> cover;
    int witness_u = -1, witness_v = -1;  // edge with bad clique count
    long witness_count = -1;
    std::string detail;
    bool ok() const { return cover.has_value(); }
};

/// Enumerates every clique of order exactly beta+1 (the Delsarte order) and
/// selects a subset covering each edge exactly once; the selection is a
/// complete backtracking search, so failure means no such cover exists.
/// With check_drg, first verifies the graph realizes intersection_array(p).
CoverResult delsarte_cover(const Graph& g, const ClassicalParams& p, bool check_drg = true);

struct PhiReport {
    bool ok = false;
    std::string witness;
    std::vector<long> pairs_per_j;   // (vertex, line) pairs at each distance j
    std::vector<Rat> phi_expected;   // 1 + alpha[j]
};

/// Tallies, for every line C and vertex x at distance j, the number of
/// vertices of C at distance j from x; requires j <= D-1 throughout and the
/// count to equal 1 + alpha[j].
PhiReport phi_check(const Graph& g, const ClassicalParams& p, const CliqueCover& cover,
                    const DistTable& dist);

/// Lines through x all of whose vertices are within distance 2 of y;
/// requires d(x, y) = 2.
Fallible<std::vector<int>> line_set_xy(const Graph& g, const CliqueCover& cover,
                                       const DistTable& dist, int x, int y);

struct DualPaschResult {
    bool ok = false;
    // witness: u, w are non-adjacent common neighbours of edge (x, y) off its line
    int x = -1, y = -1, u = -1, w = -1;
    long off_line_min = -1, off_line_max = -1;  // |U| range over edges
    std::string to_string() const;
};

/// For every edge: the common neighbours outside its line must be a clique.
DualPaschResult dual_pasch_check(const Graph& g, const CliqueCover& cover);

struct AssemblySystem {
    std::vector<std::vector<int>> assemblies;      // sorted vertex lists
    std::vector<std::vector<int>> through;         // per vertex, ascending
    std::unordered_map<std::uint64_t, int> of_edge;

    int assembly_of(int u, int v) const {
        auto it = of_edge.find(edge_key(u, v));
        return it == of_edge.end() ? -1 : it->second;
    }
};

struct AssembliesResult {
    std::optional<AssemblySystem> system;
    std::string witness;
    bool ok() const { return system.has_value(); }
};

/// Builds the maximal clique through {x, y} and their off-line common
/// neighbours for every edge, deduplicates, and asserts: uniqueness per
/// edge, order alpha*r + 1, and beta/alpha assemblies per vertex.
/// Requires 1 <= alpha <= b-1 and a graph passing dual_pasch_check.
AssembliesResult assemblies(const Graph& g, const ClassicalParams& p, const CliqueCover& cover);

struct LocalGridResult {
    bool ok = false;
    std::string witness;
    long cells_per_vertex = -1;  // r * beta/alpha when ok
};

/// Certifies every local graph as the alpha-clique extension of a
/// (beta/alpha) x r grid using (assembly, line) coordinates: each cell has
/// alpha vertices with equal closed neighbourhoods, adjacency between cells
/// is shared row or column, and every line/assembly intersection has
/// alpha+1 vertices.
LocalGridResult local_grid_check(const Graph& g, const ClassicalParams& p,
                                 const CliqueCover& cover, const AssemblySystem& asys);

struct PhiStarReport {
    bool ok = false;
    std::string witness;
    bool beta_exceeds_alpha_r = false;  // the hypothesis under which the
                                        // constants are guaranteed
    std::vector<long> phi_star_pairs;   // (assembly, vertex) tallies per distance
    std::vector<Rat> phi_star_expected; // 1 + alpha[i]
    std::vector<long> tau_star_pairs;   // ordered-pair tallies per distance
    std::vector<Rat> tau_star_expected; // [j]
};

/// Exhaustive phi*/tau* tallies over assemblies: vertices of an assembly at
/// the minimal distance, and assemblies through y one step closer to x.
PhiStarReport phi_star_tau_star(const Graph& g, const ClassicalParams& p,
                                const AssemblySystem& asys, const DistTable& dist);

struct CiSubgridResult {
    bool ok = false;
    std::string witness;
    long pairs_checked = 0;
};

/// For every ordered pair at distance i >= 2, the (line, assembly)
/// coordinates of C_i(x,y) through y must be injective, span at most [i]
/// lines and [i] assemblies, and adjacency inside C_i must mean a shared
/// line or assembly.
CiSubgridResult ci_subgrid_check(const Graph& g, const ClassicalParams& p,
                                 const CliqueCover& cover, const AssemblySystem& asys,
                                 const DistTable& dist);

struct DesignInstance {
    std::vector<int> points;              // B, sorted
    std::vector<std::vector<int>> blocks; // L(B), sorted lists, sorted
    long v = 0, k_blk = 0, lambda = 1;
};

struct DesignResult {
    std::optional<DesignInstance> design;
    std::string witness;
    bool ok() const { return design.has_value(); }
};

/// B = Gamma_2(x) ∩ M for an assembly M at distance 2 from x; blocks are
/// the line sections of B. Asserts the 2-(alpha(b+1)+1, alpha+1, 1) design
/// counts and the block-count identity |L(B)|(alpha+1) = |B|(b+1).
DesignResult design_extract(const Graph& g, const ClassicalParams& p, const CliqueCover& cover,
                            const AssemblySystem& asys, const DistTable& dist, int assembly_id,
                            int x);

// ---- grids ------------------------------------------------------------

/// Cartesian product K_m x K_n.
Graph grid_graph(int m, int n);

/// Replace each vertex by an s-clique; blown-up vertices of adjacent
/// originals are fully joined.
Graph clique_extension(const Graph& g, int s);

struct GridCert {
    bool ok = false;
    std::string reason;
    // per input vertex: (row, column) of its cell in the recognized grid
    std::vector<std::pair<int, int>> coords;
};

/// Decides whether h is the alpha-clique extension of the m x n grid and
/// returns the coordinate labelling as certificate.
GridCert grid_recognizer(const Graph& h, int alpha, int m, int n);

}  // namespace drg
