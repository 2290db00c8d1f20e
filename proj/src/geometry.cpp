#include "drg/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "drg/cliques.hpp"

namespace drg {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

}  // namespace

CoverResult delsarte_cover(const Graph& g, const ClassicalParams& p, bool check_drg) {
    CoverResult res;
    if (check_drg) {
        auto chk = check_distance_regular(g);
        if (!chk.ok()) {
            res.detail = "pre-check failed: " + chk.witness->to_string();
            return res;
        }
        IntersectionArray want = intersection_array(p);
        if (chk.array->b_seq != want.b_seq || chk.array->c_seq != want.c_seq) {
            res.detail = "pre-check failed: extracted array " + chk.array->to_string() +
                         " does not match " + want.to_string();
            return res;
        }
    }
    if (!is_integer(p.beta + 1) || p.beta + 1 < 2) {
        res.detail = "Delsarte order beta+1 = " + rat_str(p.beta + 1) + " is not an integer >= 2";
        return res;
    }
    const int order = static_cast<int>(to_int(p.beta + 1));

    const auto es = g.edges();
    std::unordered_map<std::uint64_t, int> edge_index;
    for (size_t i = 0; i < es.size(); ++i)
        edge_index[edge_key(es[i].first, es[i].second)] = static_cast<int>(i);

    std::vector<std::vector<int>> cliques;                       // id -> vertices
    std::unordered_map<std::vector<int>, int, VecHash> id_of;    // dedup
    std::vector<std::vector<int>> cands(es.size());              // edge -> clique ids
    for (size_t i = 0; i < es.size(); ++i) {
        for (auto& K : cliques_of_size_through_edge(g, es[i].first, es[i].second, order)) {
            auto [it, fresh] = id_of.try_emplace(K, static_cast<int>(cliques.size()));
            if (fresh) cliques.push_back(K);
            cands[i].push_back(it->second);
        }
        if (cands[i].empty()) {
            res.witness_u = es[i].first;
            res.witness_v = es[i].second;
            res.witness_count = 0;
            res.detail = "edge lies in no clique of the Delsarte order";
            return res;
        }
    }

    std::vector<int> chosen_ids;
    bool ambiguous = false;
    for (const auto& c : cands)
        if (c.size() > 1) {
            ambiguous = true;
            break;
        }
    if (!ambiguous) {
        // each edge has a unique candidate; the union is the only possible cover
        std::vector<char> seen(cliques.size(), 0);
        for (const auto& c : cands)
            if (!seen[static_cast<size_t>(c[0])]) {
                seen[static_cast<size_t>(c[0])] = 1;
                chosen_ids.push_back(c[0]);
            }
    } else {
        // exact cover search over edges; complete backtracking with a
        // smallest-candidate-list-first branching rule
        enum : char { kAvail = 0, kChosen = 1, kExcluded = 2 };
        std::vector<char> state(cliques.size(), kAvail);
        std::vector<char> covered(es.size(), 0);
        std::vector<int> avail(es.size());
        for (size_t i = 0; i < es.size(); ++i) avail[i] = static_cast<int>(cands[i].size());
        std::vector<std::vector<int>> cedges(cliques.size());
        for (size_t id = 0; id < cliques.size(); ++id) {
            const auto& K = cliques[id];
            for (size_t a = 0; a < K.size(); ++a)
                for (size_t b = a + 1; b < K.size(); ++b)
                    cedges[id].push_back(edge_index.at(edge_key(K[a], K[b])));
        }
        struct TrailItem {
            char kind;  // 'c' chose, 'x' excluded, 'e' covered, 'a' avail--
            int id;
        };
        std::vector<TrailItem> trail;
        auto exclude = [&](int id) {
            state[static_cast<size_t>(id)] = kExcluded;
            trail.push_back({'x', id});
            for (int e : cedges[static_cast<size_t>(id)])
                if (!covered[static_cast<size_t>(e)]) {
                    --avail[static_cast<size_t>(e)];
                    trail.push_back({'a', e});
                }
        };
        auto choose = [&](int id) {
            state[static_cast<size_t>(id)] = kChosen;
            trail.push_back({'c', id});
            for (int e : cedges[static_cast<size_t>(id)]) {
                if (covered[static_cast<size_t>(e)]) return false;
                covered[static_cast<size_t>(e)] = 1;
                trail.push_back({'e', e});
            }
            for (int e : cedges[static_cast<size_t>(id)])
                for (int other : cands[static_cast<size_t>(e)])
                    if (other != id && state[static_cast<size_t>(other)] == kAvail)
                        exclude(other);
            return true;
        };
        auto undo_to = [&](size_t mark) {
            while (trail.size() > mark) {
                TrailItem t = trail.back();
                trail.pop_back();
                switch (t.kind) {
                    case 'c':
                    case 'x': state[static_cast<size_t>(t.id)] = kAvail; break;
                    case 'e': covered[static_cast<size_t>(t.id)] = 0; break;
                    case 'a': ++avail[static_cast<size_t>(t.id)]; break;
                }
            }
        };
        auto solve = [&](auto&& self) -> bool {
            int best_edge = -1, best = -1;
            for (size_t e = 0; e < es.size(); ++e) {
                if (covered[e]) continue;
                if (best_edge < 0 || avail[e] < best) {
                    best_edge = static_cast<int>(e);
                    best = avail[e];
                    if (best <= 1) break;
                }
            }
            if (best_edge < 0) return true;
            if (best == 0) return false;
            for (int id : cands[static_cast<size_t>(best_edge)]) {
                if (state[static_cast<size_t>(id)] != kAvail) continue;
                size_t mark = trail.size();
                if (choose(id) && self(self)) return true;
                undo_to(mark);
            }
            return false;
        };
        if (!solve(solve)) {
            for (size_t i = 0; i < es.size(); ++i)
                if (cands[i].size() > 1) {
                    res.witness_u = es[i].first;
                    res.witness_v = es[i].second;
                    res.witness_count = static_cast<long>(cands[i].size());
                    break;
                }
            res.detail = "no subset of the Delsarte cliques covers every edge exactly once";
            return res;
        }
        for (size_t id = 0; id < cliques.size(); ++id)
            if (state[id] == kChosen) chosen_ids.push_back(static_cast<int>(id));
    }

    CliqueCover cover;
    for (int id : chosen_ids) cover.lines.push_back(cliques[static_cast<size_t>(id)]);
    std::sort(cover.lines.begin(), cover.lines.end());
    cover.lines_through.assign(static_cast<size_t>(g.n()), {});
    for (size_t li = 0; li < cover.lines.size(); ++li) {
        const auto& K = cover.lines[li];
        for (int v : K) cover.lines_through[static_cast<size_t>(v)].push_back(static_cast<int>(li));
        for (size_t a = 0; a < K.size(); ++a)
            for (size_t b = a + 1; b < K.size(); ++b) {
                auto [it, fresh] =
                    cover.of_edge.try_emplace(edge_key(K[a], K[b]), static_cast<int>(li));
                if (!fresh) {
                    res.witness_u = K[a];
                    res.witness_v = K[b];
                    res.witness_count = 2;
                    res.detail = "internal: selected cover double-covers an edge";
                    return res;
                }
            }
    }
    if (cover.of_edge.size() != es.size()) {
        res.detail = "internal: selected cover misses an edge";
        return res;
    }
    res.cover = std::move(cover);
    return res;
}

PhiReport phi_check(const Graph& g, const ClassicalParams& p, const CliqueCover& cover,
                    const DistTable& dist) {
    PhiReport rep;
    const int D = p.D;
    for (int j = 0; j <= D - 1; ++j) rep.phi_expected.push_back(1 + p.alpha * bracket(j, p.b));
    rep.pairs_per_j.assign(static_cast<size_t>(D), 0);
    for (size_t li = 0; li < cover.lines.size(); ++li) {
        const auto& C = cover.lines[li];
        for (int x = 0; x < g.n(); ++x) {
            int j = 255, cnt = 0;
            for (int y : C) {
                int d = dist[static_cast<size_t>(x)][static_cast<size_t>(y)];
                if (d < j) {
                    j = d;
                    cnt = 1;
                } else if (d == j) {
                    ++cnt;
                }
            }
            if (j > D - 1) {
                rep.witness = "vertex " + std::to_string(x) + " has distance " +
                              std::to_string(j) + " to line " + std::to_string(li);
                return rep;
            }
            if (Rat(cnt) != rep.phi_expected[static_cast<size_t>(j)]) {
                rep.witness = "line " + std::to_string(li) + ", vertex " + std::to_string(x) +
                              ": " + std::to_string(cnt) + " members at distance " +
                              std::to_string(j) + ", expected " +
                              rat_str(rep.phi_expected[static_cast<size_t>(j)]);
                return rep;
            }
            ++rep.pairs_per_j[static_cast<size_t>(j)];
        }
    }
    rep.ok = true;
    return rep;
}

Fallible<std::vector<int>> line_set_xy(const Graph& g, const CliqueCover& cover,
                                       const DistTable& dist, int x, int y) {
    (void)g;
    if (dist[static_cast<size_t>(x)][static_cast<size_t>(y)] != 2)
        return Fallible<std::vector<int>>::failure("line_set_xy requires d(x, y) = 2");
    std::vector<int> out;
    for (int li : cover.lines_through[static_cast<size_t>(x)]) {
        bool all_close = true;
        for (int u : cover.lines[static_cast<size_t>(li)])
            if (dist[static_cast<size_t>(y)][static_cast<size_t>(u)] > 2) {
                all_close = false;
                break;
            }
        if (all_close) out.push_back(li);
    }
    return Fallible<std::vector<int>>::success(std::move(out));
}

std::string DualPaschResult::to_string() const {
    if (ok) return "dual Pasch axiom holds";
    std::ostringstream os;
    os << "edge (" << x << "," << y << "): off-line common neighbours " << u << " and " << w
       << " are not adjacent";
    return os.str();
}

DualPaschResult dual_pasch_check(const Graph& g, const CliqueCover& cover) {
    DualPaschResult res;
    Bitset common(g.n());
    for (auto [x, y] : g.edges()) {
        int li = cover.line_of(x, y);
        if (li < 0) {
            res.x = x;
            res.y = y;
            return res;
        }
        common = g.row(x);
        common.and_with(g.row(y));
        for (int v : cover.lines[static_cast<size_t>(li)]) common.reset(v);
        std::vector<int> U;
        common.for_each([&](int v) { U.push_back(v); });
        long sz = static_cast<long>(U.size());
        if (res.off_line_min < 0 || sz < res.off_line_min) res.off_line_min = sz;
        if (sz > res.off_line_max) res.off_line_max = sz;
        for (size_t a = 0; a < U.size(); ++a)
            for (size_t b = a + 1; b < U.size(); ++b)
                if (!g.adjacent(U[a], U[b])) {
                    res.x = x;
                    res.y = y;
                    res.u = U[a];
                    res.w = U[b];
                    return res;
                }
    }
    res.ok = true;
    return res;
}

AssembliesResult assemblies(const Graph& g, const ClassicalParams& p, const CliqueCover& cover) {
    AssembliesResult res;
    if (p.alpha < 1 || p.alpha > p.b - 1) {
        res.witness = "assemblies require 1 <= alpha <= b-1";
        return res;
    }
    Rat order_r = p.alpha * p.r() + 1;
    Rat per_vertex_r = p.beta / p.alpha;
    if (!is_integer(order_r) || !is_integer(per_vertex_r)) {
        res.witness = "alpha*r + 1 or beta/alpha is not an integer";
        return res;
    }
    const size_t order = static_cast<size_t>(to_int(order_r));
    const long per_vertex = static_cast<long>(to_int(per_vertex_r));

    AssemblySystem sys;
    std::unordered_map<std::vector<int>, int, VecHash> id_of;
    Bitset common(g.n()), ext(g.n());
    for (auto [x, y] : g.edges()) {
        int li = cover.line_of(x, y);
        if (li < 0) {
            res.witness = "edge (" + std::to_string(x) + "," + std::to_string(y) +
                          ") lies on no line";
            return res;
        }
        common = g.row(x);
        common.and_with(g.row(y));
        for (int v : cover.lines[static_cast<size_t>(li)]) common.reset(v);
        std::vector<int> S{x, y};
        common.for_each([&](int v) { S.push_back(v); });
        // vertices adjacent to all of S
        bool first = true;
        for (int v : S) {
            if (first) {
                ext = g.row(v);
                first = false;
            } else {
                ext.and_with(g.row(v));
            }
        }
        std::vector<int> M = S;
        ext.for_each([&](int v) { M.push_back(v); });
        std::sort(M.begin(), M.end());
        for (size_t a = 0; a < M.size(); ++a)
            for (size_t b = a + 1; b < M.size(); ++b)
                if (!g.adjacent(M[a], M[b])) {
                    res.witness = "edge (" + std::to_string(x) + "," + std::to_string(y) +
                                  "): closure " + vec_str(M) + " is not a clique";
                    return res;
                }
        if (M.size() != order) {
            res.witness = "edge (" + std::to_string(x) + "," + std::to_string(y) +
                          "): assembly order " + std::to_string(M.size()) + ", expected " +
                          rat_str(order_r);
            return res;
        }
        auto [it, fresh] = id_of.try_emplace(M, static_cast<int>(sys.assemblies.size()));
        if (fresh) sys.assemblies.push_back(M);
        sys.of_edge[edge_key(x, y)] = it->second;
    }
    std::sort(sys.assemblies.begin(), sys.assemblies.end());
    // ids changed by the sort; rebuild the edge map from scratch
    sys.of_edge.clear();
    sys.through.assign(static_cast<size_t>(g.n()), {});
    for (size_t ai = 0; ai < sys.assemblies.size(); ++ai) {
        const auto& M = sys.assemblies[ai];
        for (int v : M) sys.through[static_cast<size_t>(v)].push_back(static_cast<int>(ai));
        for (size_t a = 0; a < M.size(); ++a)
            for (size_t b = a + 1; b < M.size(); ++b) {
                auto [it, fresh] = sys.of_edge.try_emplace(edge_key(M[a], M[b]),
                                                           static_cast<int>(ai));
                if (!fresh) {
                    res.witness = "edge (" + std::to_string(M[a]) + "," + std::to_string(M[b]) +
                                  ") lies in two assemblies";
                    return res;
                }
            }
    }
    if (sys.of_edge.size() != static_cast<size_t>(g.edge_count())) {
        res.witness = "some edge lies in no assembly";
        return res;
    }
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<long>(sys.through[static_cast<size_t>(v)].size()) != per_vertex) {
            res.witness = "vertex " + std::to_string(v) + " lies in " +
                          std::to_string(sys.through[static_cast<size_t>(v)].size()) +
                          " assemblies, expected " + rat_str(per_vertex_r);
            return res;
        }
    res.system = std::move(sys);
    return res;
}

LocalGridResult local_grid_check(const Graph& g, const ClassicalParams& p,
                                 const CliqueCover& cover, const AssemblySystem& asys) {
    LocalGridResult res;
    if (!is_integer(p.r()) || !is_integer(p.beta / p.alpha) || !is_integer(p.alpha)) {
        res.witness = "r, alpha and beta/alpha must be integers";
        return res;
    }
    const long r = static_cast<long>(to_int(p.r()));
    const long t = static_cast<long>(to_int(p.beta / p.alpha));
    const long alpha = static_cast<long>(to_int(p.alpha));
    res.cells_per_vertex = r * t;

    // line/assembly sections: every nonempty intersection has alpha+1 vertices
    std::map<std::pair<int, int>, long> section;
    for (int v = 0; v < g.n(); ++v)
        for (int li : cover.lines_through[static_cast<size_t>(v)])
            for (int ai : asys.through[static_cast<size_t>(v)]) ++section[{li, ai}];
    for (const auto& [key, cnt] : section)
        if (cnt != alpha + 1) {
            res.witness = "line " + std::to_string(key.first) + " and assembly " +
                          std::to_string(key.second) + " share " + std::to_string(cnt) +
                          " vertices, expected " + std::to_string(alpha + 1);
            return res;
        }

    std::vector<int> cell_of(static_cast<size_t>(g.n()), -1);
    Bitset cn_a(g.n()), cn_b(g.n());
    for (int x = 0; x < g.n(); ++x) {
        const auto& Lx = cover.lines_through[static_cast<size_t>(x)];
        const auto& Ax = asys.through[static_cast<size_t>(x)];
        if (static_cast<long>(Lx.size()) != r || static_cast<long>(Ax.size()) != t) {
            res.witness = "vertex " + std::to_string(x) + " lies on " +
                          std::to_string(Lx.size()) + " lines and " + std::to_string(Ax.size()) +
                          " assemblies, expected " + std::to_string(r) + " and " +
                          std::to_string(t);
            return res;
        }
        auto local_index = [](const std::vector<int>& v, int id) {
            auto it = std::lower_bound(v.begin(), v.end(), id);
            return (it != v.end() && *it == id) ? static_cast<int>(it - v.begin()) : -1;
        };
        std::vector<int> nbrs;
        g.row(x).for_each([&](int y) { nbrs.push_back(y); });
        std::vector<long> cell_count(static_cast<size_t>(r * t), 0);
        for (int y : nbrs) {
            int li = local_index(Lx, cover.line_of(x, y));
            int ai = local_index(Ax, asys.assembly_of(x, y));
            if (li < 0 || ai < 0) {
                res.witness = "edge (" + std::to_string(x) + "," + std::to_string(y) +
                              ") missing from the incidence structures";
                return res;
            }
            cell_of[static_cast<size_t>(y)] = ai * static_cast<int>(r) + li;
            ++cell_count[static_cast<size_t>(ai * r + li)];
        }
        for (long c = 0; c < r * t; ++c)
            if (cell_count[static_cast<size_t>(c)] != alpha) {
                res.witness = "vertex " + std::to_string(x) + ": cell (assembly " +
                              std::to_string(c / r) + ", line " + std::to_string(c % r) +
                              ") has " + std::to_string(cell_count[static_cast<size_t>(c)]) +
                              " vertices, expected " + std::to_string(alpha);
                return res;
            }
        // within the local graph, adjacency must mean shared row or column,
        // and cell-mates must have equal closed neighbourhoods
        for (int y : nbrs) {
            int cy = cell_of[static_cast<size_t>(y)];
            long seen = 0;
            bool bad = false;
            int bad_z = -1;
            Bitset inner = g.row(y);
            inner.and_with(g.row(x));
            inner.for_each([&](int z) {
                ++seen;
                int cz = cell_of[static_cast<size_t>(z)];
                if (cz != cy && cz / r != cy / r && cz % r != cy % r && !bad) {
                    bad = true;
                    bad_z = z;
                }
            });
            if (bad) {
                res.witness = "vertex " + std::to_string(x) + ": neighbours " +
                              std::to_string(y) + " and " + std::to_string(bad_z) +
                              " are adjacent without sharing a line or an assembly";
                return res;
            }
            if (seen != (r - 1) * alpha + (t - 1) * alpha + (alpha - 1)) {
                res.witness = "vertex " + std::to_string(x) + ": neighbour " + std::to_string(y) +
                              " has " + std::to_string(seen) +
                              " local neighbours, expected grid valency";
                return res;
            }
            if (alpha > 1) {
                for (int z : nbrs) {
                    if (z <= y || cell_of[static_cast<size_t>(z)] != cy) continue;
                    cn_a = g.row(y);
                    cn_a.and_with(g.row(x));
                    cn_a.set(y);
                    cn_b = g.row(z);
                    cn_b.and_with(g.row(x));
                    cn_b.set(z);
                    if (!(cn_a == cn_b)) {
                        res.witness = "vertex " + std::to_string(x) + ": cell-mates " +
                                      std::to_string(y) + " and " + std::to_string(z) +
                                      " have different closed neighbourhoods";
                        return res;
                    }
                }
            }
        }
    }
    res.ok = true;
    return res;
}

PhiStarReport phi_star_tau_star(const Graph& g, const ClassicalParams& p,
                                const AssemblySystem& asys, const DistTable& dist) {
    PhiStarReport rep;
    rep.beta_exceeds_alpha_r = p.beta > p.alpha * p.r();
    const int D = p.D;
    for (int i = 0; i <= D; ++i) rep.phi_star_expected.push_back(1 + p.alpha * bracket(i, p.b));
    for (int j = 1; j <= D; ++j) rep.tau_star_expected.push_back(bracket(j, p.b));
    rep.phi_star_pairs.assign(static_cast<size_t>(D) + 1, 0);
    rep.tau_star_pairs.assign(static_cast<size_t>(D), 0);

    const size_t n = static_cast<size_t>(g.n());
    const size_t na = asys.assemblies.size();
    std::vector<std::vector<std::uint8_t>> adist(na, std::vector<std::uint8_t>(n, 255));
    for (size_t ai = 0; ai < na; ++ai) {
        const auto& M = asys.assemblies[ai];
        for (size_t x = 0; x < n; ++x) {
            int j = 255, cnt = 0;
            for (int y : M) {
                int d = dist[x][static_cast<size_t>(y)];
                if (d < j) {
                    j = d;
                    cnt = 1;
                } else if (d == j) {
                    ++cnt;
                }
            }
            adist[ai][x] = static_cast<std::uint8_t>(j);
            if (j > D) {
                rep.witness = "vertex " + std::to_string(x) + " beyond diameter from assembly " +
                              std::to_string(ai);
                return rep;
            }
            if (Rat(cnt) != rep.phi_star_expected[static_cast<size_t>(j)]) {
                rep.witness = "assembly " + std::to_string(ai) + ", vertex " + std::to_string(x) +
                              ": " + std::to_string(cnt) + " members at distance " +
                              std::to_string(j) + ", expected " +
                              rat_str(rep.phi_star_expected[static_cast<size_t>(j)]);
                return rep;
            }
            ++rep.phi_star_pairs[static_cast<size_t>(j)];
        }
    }
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            int j = dist[x][y];
            if (j < 1) continue;
            long cnt = 0;
            for (int ai : asys.through[y])
                if (adist[static_cast<size_t>(ai)][x] == j - 1) ++cnt;
            if (Rat(cnt) != rep.tau_star_expected[static_cast<size_t>(j - 1)]) {
                rep.witness = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                              ") at distance " + std::to_string(j) + ": " + std::to_string(cnt) +
                              " assemblies one step closer, expected " +
                              rat_str(rep.tau_star_expected[static_cast<size_t>(j - 1)]);
                return rep;
            }
            ++rep.tau_star_pairs[static_cast<size_t>(j - 1)];
        }
    rep.ok = true;
    return rep;
}

CiSubgridResult ci_subgrid_check(const Graph& g, const ClassicalParams& p,
                                 const CliqueCover& cover, const AssemblySystem& asys,
                                 const DistTable& dist) {
    CiSubgridResult res;
    const int D = p.D;
    std::vector<long> bracket_l(static_cast<size_t>(D) + 1);
    for (int i = 0; i <= D; ++i) bracket_l[static_cast<size_t>(i)] =
        static_cast<long>(to_int(bracket(i, p.b)));
    const size_t n = static_cast<size_t>(g.n());
    std::vector<int> zs;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            int i = dist[x][y];
            if (i < 2 || i > D) continue;
            zs.clear();
            g.row(static_cast<int>(y)).for_each([&](int z) {
                if (dist[x][static_cast<size_t>(z)] == i - 1) zs.push_back(z);
            });
            std::map<std::pair<int, int>, int> coord_of;
            std::vector<int> lines_used, asys_used;
            for (int z : zs) {
                int li = cover.line_of(static_cast<int>(y), z);
                int ai = asys.assembly_of(static_cast<int>(y), z);
                auto [it, fresh] = coord_of.try_emplace({li, ai}, z);
                if (!fresh) {
                    res.witness = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                  "): vertices " + std::to_string(it->second) + " and " +
                                  std::to_string(z) + " share line and assembly coordinates";
                    return res;
                }
                lines_used.push_back(li);
                asys_used.push_back(ai);
            }
            auto distinct = [](std::vector<int>& v) {
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
                return static_cast<long>(v.size());
            };
            if (distinct(lines_used) > bracket_l[static_cast<size_t>(i)] ||
                distinct(asys_used) > bracket_l[static_cast<size_t>(i)]) {
                res.witness = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                              "): coordinates exceed the [i] x [i] grid at i = " +
                              std::to_string(i);
                return res;
            }
            for (size_t a = 0; a < zs.size(); ++a)
                for (size_t b = a + 1; b < zs.size(); ++b) {
                    if (!g.adjacent(zs[a], zs[b])) continue;
                    int la = cover.line_of(static_cast<int>(y), zs[a]);
                    int lb = cover.line_of(static_cast<int>(y), zs[b]);
                    int aa = asys.assembly_of(static_cast<int>(y), zs[a]);
                    int ab = asys.assembly_of(static_cast<int>(y), zs[b]);
                    if (la != lb && aa != ab) {
                        res.witness = "pair (" + std::to_string(x) + "," + std::to_string(y) +
                                      "): adjacent members " + std::to_string(zs[a]) + "," +
                                      std::to_string(zs[b]) +
                                      " share neither row nor column";
                        return res;
                    }
                }
            ++res.pairs_checked;
        }
    res.ok = true;
    return res;
}

DesignResult design_extract(const Graph& g, const ClassicalParams& p, const CliqueCover& cover,
                            const AssemblySystem& asys, const DistTable& dist, int assembly_id,
                            int x) {
    DesignResult res;
    const auto& M = asys.assemblies[static_cast<size_t>(assembly_id)];
    int dxM = 255;
    for (int y : M) dxM = std::min(dxM, static_cast<int>(dist[static_cast<size_t>(x)][static_cast<size_t>(y)]));
    if (dxM != 2) {
        res.witness = "d(x, M) = " + std::to_string(dxM) + ", need 2";
        return res;
    }
    DesignInstance di;
    for (int y : M)
        if (dist[static_cast<size_t>(x)][static_cast<size_t>(y)] == 2) di.points.push_back(y);
    Rat expect_v = p.alpha * (p.b + 1) + 1;
    if (Rat(static_cast<long>(di.points.size())) != expect_v) {
        res.witness = "|B| = " + std::to_string(di.points.size()) + ", expected " +
                      rat_str(expect_v);
        return res;
    }
    std::map<int, std::vector<int>> block_of_line;
    for (size_t a = 0; a < di.points.size(); ++a)
        for (size_t b = a + 1; b < di.points.size(); ++b) {
            int li = cover.line_of(di.points[a], di.points[b]);
            if (li < 0) {
                res.witness = "points " + std::to_string(di.points[a]) + "," +
                              std::to_string(di.points[b]) + " lie on no common line";
                return res;
            }
            auto& blk = block_of_line[li];
            if (blk.empty())
                for (int u : cover.lines[static_cast<size_t>(li)])
                    if (dist[static_cast<size_t>(x)][static_cast<size_t>(u)] == 2 &&
                        std::binary_search(M.begin(), M.end(), u))
                        blk.push_back(u);
        }
    for (auto& [li, blk] : block_of_line) {
        std::sort(blk.begin(), blk.end());
        if (Rat(static_cast<long>(blk.size())) != p.alpha + 1) {
            res.witness = "block on line " + std::to_string(li) + " has " +
                          std::to_string(blk.size()) + " points, expected " +
                          rat_str(p.alpha + 1);
            return res;
        }
        di.blocks.push_back(blk);
    }
    std::sort(di.blocks.begin(), di.blocks.end());
    // every point pair in exactly one block
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& blk : di.blocks)
        for (size_t a = 0; a < blk.size(); ++a)
            for (size_t b = a + 1; b < blk.size(); ++b) ++pair_count[{blk[a], blk[b]}];
    size_t np = di.points.size();
    if (pair_count.size() != np * (np - 1) / 2) {
        res.witness = "some point pair lies in no block";
        return res;
    }
    for (const auto& [pr, cnt] : pair_count)
        if (cnt != 1) {
            res.witness = "point pair (" + std::to_string(pr.first) + "," +
                          std::to_string(pr.second) + ") lies in " + std::to_string(cnt) +
                          " blocks";
            return res;
        }
    // |L(B)| (alpha+1) = |B| (b+1)
    if (Rat(static_cast<long>(di.blocks.size())) * (p.alpha + 1) !=
        Rat(static_cast<long>(np)) * (p.b + 1)) {
        res.witness = "block-count identity fails: " + std::to_string(di.blocks.size()) +
                      " blocks for " + std::to_string(np) + " points";
        return res;
    }
    di.v = static_cast<long>(np);
    di.k_blk = static_cast<long>(to_int(p.alpha + 1));
    di.lambda = 1;
    res.design = std::move(di);
    return res;
}

Graph grid_graph(int m, int n) {
    Graph g(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            for (int j2 = j + 1; j2 < n; ++j2) g.add_edge(i * n + j, i * n + j2);
            for (int i2 = i + 1; i2 < m; ++i2) g.add_edge(i * n + j, i2 * n + j);
        }
    return g;
}

Graph clique_extension(const Graph& g, int s) {
    Graph h(g.n() * s);
    for (int v = 0; v < g.n(); ++v)
        for (int a = 0; a < s; ++a) {
            for (int b = a + 1; b < s; ++b) h.add_edge(v * s + a, v * s + b);
            g.row(v).for_each([&](int w) {
                if (w > v)
                    for (int b = 0; b < s; ++b) h.add_edge(v * s + a, w * s + b);
            });
        }
    return h;
}

GridCert grid_recognizer(const Graph& h, int alpha, int m, int n) {
    GridCert cert;
    if (alpha < 1 || m < 1 || n < 1) {
        cert.reason = "parameters must be positive";
        return cert;
    }
    if (h.n() != alpha * m * n) {
        cert.reason = "vertex count " + std::to_string(h.n()) + " != alpha*m*n = " +
                      std::to_string(alpha * m * n);
        return cert;
    }
    const int want_deg = (m + n - 2) * alpha + alpha - 1;
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) != want_deg) {
            cert.reason = "vertex " + std::to_string(v) + " has degree " +
                          std::to_string(h.degree(v)) + ", expected " + std::to_string(want_deg);
            return cert;
        }

    // 1-row grids blow up to complete graphs, where the cell partition is
    // not determined; accept any grouping
    if (m == 1 || n == 1) {
        for (int a = 0; a < h.n(); ++a)
            for (int b = a + 1; b < h.n(); ++b)
                if (!h.adjacent(a, b)) {
                    cert.reason = "a 1-row grid extension must be complete";
                    return cert;
                }
        cert.ok = true;
        cert.coords.resize(static_cast<size_t>(h.n()));
        for (int v = 0; v < h.n(); ++v)
            cert.coords[static_cast<size_t>(v)] = {m == 1 ? 0 : v / alpha,
                                                   n == 1 ? 0 : v / alpha};
        return cert;
    }

    // cells = classes of equal closed neighbourhood
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int v = 0; v < h.n(); ++v) {
        Bitset cn = h.row(v);
        cn.set(v);
        std::vector<int> key;
        cn.for_each([&](int u) { key.push_back(u); });
        classes[key].push_back(v);
    }
    for (const auto& [key, members] : classes)
        if (static_cast<int>(members.size()) != alpha) {
            cert.reason = "a closed-neighbourhood class has " + std::to_string(members.size()) +
                          " vertices, expected alpha = " + std::to_string(alpha);
            return cert;
        }
    std::vector<std::vector<int>> cells;
    std::vector<int> cell_of(static_cast<size_t>(h.n()), -1);
    for (const auto& [key, members] : classes) {
        for (int v : members) cell_of[static_cast<size_t>(v)] = static_cast<int>(cells.size());
        cells.push_back(members);
    }
    Graph q(static_cast<int>(cells.size()));
    for (size_t a = 0; a < cells.size(); ++a)
        for (size_t b = a + 1; b < cells.size(); ++b)
            if (h.adjacent(cells[a][0], cells[b][0]))
                q.add_edge(static_cast<int>(a), static_cast<int>(b));
    for (int v = 0; v < q.n(); ++v)
        if (q.degree(v) != m + n - 2) {
            cert.reason = "quotient is not (m+n-2)-regular";
            return cert;
        }

    auto mc = maximal_cliques(q, 2);
    if (!mc.ok()) {
        cert.reason = mc.error;
        return cert;
    }
    if (mc->size() != static_cast<size_t>(m + n)) {
        cert.reason = "quotient has " + std::to_string(mc->size()) +
                      " maximal cliques, expected m+n = " + std::to_string(m + n);
        return cert;
    }
    std::vector<std::vector<int>> in_clique(static_cast<size_t>(q.n()));
    for (size_t ci = 0; ci < mc->size(); ++ci)
        for (int v : (*mc)[ci]) in_clique[static_cast<size_t>(v)].push_back(static_cast<int>(ci));
    for (int v = 0; v < q.n(); ++v)
        if (in_clique[static_cast<size_t>(v)].size() != 2) {
            cert.reason = "a quotient vertex lies in " +
                          std::to_string(in_clique[static_cast<size_t>(v)].size()) +
                          " maximal cliques, expected 2";
            return cert;
        }
    // 2-colour the cliques: cliques sharing a vertex get opposite colours
    std::vector<int> colour(mc->size(), -1);
    std::vector<size_t> stack{0};
    colour[0] = 0;
    while (!stack.empty()) {
        size_t c = stack.back();
        stack.pop_back();
        for (int v : (*mc)[c])
            for (int c2 : in_clique[static_cast<size_t>(v)]) {
                if (static_cast<size_t>(c2) == c) continue;
                if (colour[static_cast<size_t>(c2)] < 0) {
                    colour[static_cast<size_t>(c2)] = 1 - colour[c];
                    stack.push_back(static_cast<size_t>(c2));
                } else if (colour[static_cast<size_t>(c2)] == colour[c]) {
                    cert.reason = "row/column structure is not 2-colourable";
                    return cert;
                }
            }
    }
    std::vector<int> rows_idx, cols_idx;
    for (size_t c = 0; c < mc->size(); ++c)
        (colour[c] == 0 ? rows_idx : cols_idx).push_back(static_cast<int>(c));
    auto sizes_ok = [&](const std::vector<int>& cls, size_t count, size_t size) {
        if (cls.size() != count) return false;
        for (int c : cls)
            if ((*mc)[static_cast<size_t>(c)].size() != size) return false;
        return true;
    };
    if (sizes_ok(cols_idx, static_cast<size_t>(m), static_cast<size_t>(n)) &&
        sizes_ok(rows_idx, static_cast<size_t>(n), static_cast<size_t>(m)))
        std::swap(rows_idx, cols_idx);
    if (!(sizes_ok(rows_idx, static_cast<size_t>(m), static_cast<size_t>(n)) &&
          sizes_ok(cols_idx, static_cast<size_t>(n), static_cast<size_t>(m)))) {
        cert.reason = "clique sizes do not match m rows of size n and n columns of size m";
        return cert;
    }
    std::vector<int> row_of(static_cast<size_t>(q.n()), -1), col_of(static_cast<size_t>(q.n()), -1);
    for (size_t ri = 0; ri < rows_idx.size(); ++ri)
        for (int v : (*mc)[static_cast<size_t>(rows_idx[ri])]) row_of[static_cast<size_t>(v)] = static_cast<int>(ri);
    for (size_t ci = 0; ci < cols_idx.size(); ++ci)
        for (int v : (*mc)[static_cast<size_t>(cols_idx[ci])]) col_of[static_cast<size_t>(v)] = static_cast<int>(ci);
    for (int v = 0; v < q.n(); ++v)
        if (row_of[static_cast<size_t>(v)] < 0 || col_of[static_cast<size_t>(v)] < 0) {
            cert.reason = "a quotient vertex misses a row or a column";
            return cert;
        }
    for (int a = 0; a < q.n(); ++a)
        for (int b = a + 1; b < q.n(); ++b) {
            bool share = row_of[static_cast<size_t>(a)] == row_of[static_cast<size_t>(b)] ||
                         col_of[static_cast<size_t>(a)] == col_of[static_cast<size_t>(b)];
            if (share != q.adjacent(a, b)) {
                cert.reason = "quotient adjacency disagrees with the row/column structure";
                return cert;
            }
        }
    cert.ok = true;
    cert.coords.resize(static_cast<size_t>(h.n()));
    for (int v = 0; v < h.n(); ++v) {
        int c = cell_of[static_cast<size_t>(v)];
        cert.coords[static_cast<size_t>(v)] = {row_of[static_cast<size_t>(c)],
                                               col_of[static_cast<size_t>(c)]};
    }
    return cert;
}

}  // namespace drg
