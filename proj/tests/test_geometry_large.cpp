// Larger instances: the 3x4 binary bilinear forms graph (4096 vertices,
// beta strictly above alpha*r, so the assembly-count constants are
// guaranteed, not just observed) and the rank-3 binary Grassmann graph.

#include <doctest.h>

#include "drg/cliques.hpp"
#include "drg/families.hpp"
#include "drg/geometry.hpp"

using namespace drg;

TEST_CASE("3x4 bilinear forms graph: full assembly-structure suite") {
    auto built = build_bilinear_forms(2, 3, 4);
    REQUIRE(built.ok());
    const Graph& g = built->graph;
    ClassicalParams p = built->expected_params;
    CHECK(g.n() == 4096);
    CHECK(p.beta == 15);
    CHECK(p.beta > p.alpha * p.r());

    auto cr = delsarte_cover(g, p);
    REQUIRE(cr.ok());
    CHECK(cr.cover->lines.size() == 4096L * 7 / 16);
    for (int v = 0; v < g.n(); ++v)
        CHECK(cr.cover->lines_through[static_cast<size_t>(v)].size() == 7);

    DistTable dist = all_pairs_distances(g);
    PhiReport pr = phi_check(g, p, *cr.cover, dist);
    INFO(pr.witness);
    CHECK(pr.ok);
    CHECK(pr.phi_expected == std::vector<Rat>{1, 2, 4});

    DualPaschResult dp = dual_pasch_check(g, *cr.cover);
    INFO(dp.to_string());
    CHECK(dp.ok);  // beta = 15 > (r - alpha - 1) alpha b + alpha = 11
    CHECK(dp.off_line_min == 6);

    auto ar = assemblies(g, p, *cr.cover);
    REQUIRE(ar.ok());
    CHECK(ar.system->assemblies.size() == 4096L * 15 / 8);
    for (int v = 0; v < g.n(); ++v)
        CHECK(ar.system->through[static_cast<size_t>(v)].size() == 15);

    LocalGridResult lg = local_grid_check(g, p, *cr.cover, *ar.system);
    INFO(lg.witness);
    CHECK(lg.ok);
    CHECK(lg.cells_per_vertex == 105);  // 15 x 7 grid

    PhiStarReport ps = phi_star_tau_star(g, p, *ar.system, dist);
    INFO(ps.witness);
    CHECK(ps.beta_exceeds_alpha_r);  // the hypothesis is met on this instance
    CHECK(ps.ok);
    CHECK(ps.phi_star_expected == std::vector<Rat>{1, 2, 4, 8});
    CHECK(ps.tau_star_expected == std::vector<Rat>{1, 3, 7});

    // sections of neighbourhoods one step out are clique extensions of
    // shrunken grids: check a few pairs at each depth h
    for (int h : {1, 2}) {
        long m_rows = 15 - static_cast<long>(to_int(bracket(h, p.b)));
        long n_cols = 7 - static_cast<long>(to_int(bracket(h, p.b)));
        int checked = 0;
        for (int y = 0; y < g.n() && checked < 5; ++y) {
            if (dist[0][static_cast<size_t>(y)] != h) continue;
            std::vector<int> bh;
            g.row(y).for_each([&](int z) {
                if (dist[0][static_cast<size_t>(z)] == h + 1) bh.push_back(z);
            });
            REQUIRE(static_cast<long>(bh.size()) == m_rows * n_cols);
            GridCert cert = grid_recognizer(induced_subgraph(g, bh), 1,
                                            static_cast<int>(m_rows), static_cast<int>(n_cols));
            INFO("h=", h, " y=", y, ": ", cert.reason);
            CHECK(cert.ok);
            ++checked;
        }
        CHECK(checked == 5);
    }

    // a couple of design extractions at distance 2
    int done = 0;
    for (size_t ai = 0; ai < ar.system->assemblies.size() && done < 5; ++ai)
        for (int x = 0; x < g.n() && done < 5; ++x) {
            int dxM = 255;
            for (int y : ar.system->assemblies[ai])
                dxM = std::min(dxM, static_cast<int>(dist[static_cast<size_t>(x)][static_cast<size_t>(y)]));
            if (dxM != 2) continue;
            DesignResult dr =
                design_extract(g, p, *cr.cover, *ar.system, dist, static_cast<int>(ai), x);
            INFO(dr.witness);
            REQUIRE(dr.ok());
            CHECK(dr.design->v == 4);  // alpha(b+1)+1
            CHECK(dr.design->blocks.size() == 6);
            ++done;
        }
    CHECK(done == 5);
}

TEST_CASE("rank-3 binary Grassmann graph: cover of 15-vertex lines") {
    auto built = build_grassmann(2, 6, 3);
    REQUIRE(built.ok());
    const Graph& g = built->graph;
    CHECK(g.n() == 1395);
    auto chk = check_distance_regular(g);
    REQUIRE(chk.ok());
    CHECK(chk.array->k == 98);
    CHECK(chk.array->c(2) == 9);
    IntersectionArray want = intersection_array(built->expected_params);
    CHECK(chk.array->b_seq == want.b_seq);
    CHECK(chk.array->c_seq == want.c_seq);

    auto cr = delsarte_cover(g, built->expected_params, /*check_drg=*/false);
    REQUIRE(cr.ok());
    for (const auto& line : cr.cover->lines) CHECK(line.size() == 15);
    for (int v = 0; v < g.n(); ++v)
        CHECK(cr.cover->lines_through[static_cast<size_t>(v)].size() == 7);

    // alpha = b here: the off-line common neighbourhood is recorded, with no
    // claim attached to it
    DualPaschResult dp = dual_pasch_check(g, *cr.cover);
    CHECK(dp.off_line_min >= 0);
    MESSAGE("alpha = b instance: dual Pasch ", dp.ok ? "holds" : "fails",
            ", off-line size range [", dp.off_line_min, ", ", dp.off_line_max, "]");
}
