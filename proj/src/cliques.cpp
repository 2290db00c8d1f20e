#include "drg/cliques.hpp"

#include <algorithm>

namespace drg {

namespace {

struct BkState {
    const Graph* g;
    std::vector<std::vector<int>>* out;
    int min_size;
    long cap;
    bool overflow = false;

    void run(std::vector<int>& R, Bitset& P, Bitset& X) {
        if (overflow) return;
        if (P.none() && X.none()) {
            if (static_cast<int>(R.size()) >= min_size) {
                if (static_cast<long>(out->size()) >= cap) {
                    overflow = true;
                    return;
                }
                std::vector<int> clique = R;
                std::sort(clique.begin(), clique.end());
                out->push_back(std::move(clique));
            }
            return;
        }
        // pivot: vertex of P ∪ X with the most neighbours in P
        int pivot = -1, best = -1;
        for (const Bitset* side : {&P, &X})
            side->for_each([&](int u) {
                int c = Bitset::and_count(P, g->row(u));
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            });
        Bitset ext = P;
        if (pivot >= 0) ext.andnot_with(g->row(pivot));
        std::vector<int> order;
        ext.for_each([&](int v) { order.push_back(v); });
        for (int v : order) {
            Bitset P2 = P, X2 = X;
            P2.and_with(g->row(v));
            X2.and_with(g->row(v));
            R.push_back(v);
            run(R, P2, X2);
            R.pop_back();
            P.reset(v);
            X.set(v);
            if (overflow) return;
        }
    }
};

}  // namespace

Fallible<std::vector<std::vector<int>>> maximal_cliques(const Graph& g, int min_size, long cap) {
    std::vector<std::vector<int>> out;
    BkState st{&g, &out, min_size, cap};
    std::vector<int> R;
    Bitset P(g.n()), X(g.n());
    for (int v = 0; v < g.n(); ++v) P.set(v);
    st.run(R, P, X);
    if (st.overflow)
        return Fallible<std::vector<std::vector<int>>>::failure(
            "maximal_cliques: output cap exceeded after " + std::to_string(out.size()) +
            " cliques");
    std::sort(out.begin(), out.end());
    return Fallible<std::vector<std::vector<int>>>::success(std::move(out));
}

std::vector<std::vector<int>> cliques_of_size_through_edge(const Graph& g, int u, int v,
                                                           int size) {
    std::vector<std::vector<int>> out;
    if (size < 2) return out;
    Bitset common = g.row(u);
    common.and_with(g.row(v));
    std::vector<int> pool;
    common.for_each([&](int w) { pool.push_back(w); });
    const int want = size - 2;
    if (static_cast<int>(pool.size()) < want) return out;
    if (want == 0) {
        out.push_back({std::min(u, v), std::max(u, v)});
        return out;
    }
    std::vector<int> chosen;
    // depth-first extension in ascending order; each clique found once
    auto rec = [&](auto&& self, size_t lo, Bitset& allowed) -> void {
        if (static_cast<int>(chosen.size()) == want) {
            std::vector<int> clique = chosen;
            clique.push_back(u);
            clique.push_back(v);
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
            return;
        }
        int need = want - static_cast<int>(chosen.size());
        for (size_t i = lo; i + static_cast<size_t>(need) <= pool.size(); ++i) {
            int w = pool[i];
            if (!allowed.test(w)) continue;
            Bitset next = allowed;
            next.and_with(g.row(w));
            chosen.push_back(w);
            self(self, i + 1, next);
            chosen.pop_back();
        }
    };
    Bitset allowed = common;
    rec(rec, 0, allowed);
    std::sort(out.begin(), out.end());
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph h(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

}  // namespace drg
