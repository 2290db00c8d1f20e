// Acceptance suite: every criterion prints exactly one PASS/FAIL line with
// its runtime against the pinned budget. The CLI binary path is argv[1].

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "drg/bounds.hpp"
#include "drg/cliques.hpp"
#include "drg/families.hpp"
#include "drg/geometry.hpp"
#include "drg/graph.hpp"
#include "drg/spectrum.hpp"

using namespace drg;

namespace {

std::string g_cli_path;

std::string run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    pclose(pipe);
    return out;
}

struct InstanceSpec {
    std::string name;
    std::string family;
    std::vector<long> args;
};

const std::vector<InstanceSpec>& instance_list() {
    static const std::vector<InstanceSpec> v = {
        {"H(3,3)", "hamming", {3, 3}},
        {"J(6,3)", "johnson", {6, 3}},
        {"J_2(4,2)", "grassmann", {2, 4, 2}},
        {"J_2(6,3)", "grassmann", {2, 6, 3}},
        {"H_2(2,2)", "bilinear", {2, 2, 2}},
        {"H_2(3,3)", "bilinear", {2, 3, 3}},
        {"halved 6-cube", "halved-cube", {6}},
    };
    return v;
}

bool criterion1(std::string& why) {
    std::string out = run_cli("params --D 3 --b 1 --alpha 4 --beta 9");
    if (out.find("{27,10,1;1,10,27}") == std::string::npos) {
        why = "CLI output lacks the expected intersection array";
        return false;
    }
    auto gos = build_gosset();  // constructor runs its own array self-check
    if (!gos.ok()) {
        why = gos.error;
        return false;
    }
    if (gos->graph.n() != 56) {
        why = "wrong vertex count";
        return false;
    }
    return true;
}

bool criterion2(std::string& why) {
    for (const InstanceSpec& spec : instance_list()) {
        auto fi = build_family(spec.family, spec.args);
        if (!fi.ok()) {
            why = spec.name + ": " + fi.error;
            return false;
        }
        auto chk = check_distance_regular(fi->graph);
        if (!chk.ok()) {
            why = spec.name + ": " + chk.witness->to_string();
            return false;
        }
        IntersectionArray want = intersection_array(fi->expected_params);
        if (chk.array->b_seq != want.b_seq || chk.array->c_seq != want.c_seq) {
            why = spec.name + ": extracted " + chk.array->to_string() + ", formulas give " +
                  want.to_string();
            return false;
        }
        bool has = false;
        for (const ClassicalParams& p : recognize_classical(*chk.array))
            if (p.D == fi->expected_params.D && p.b == fi->expected_params.b &&
                p.alpha == fi->expected_params.alpha && p.beta == fi->expected_params.beta)
                has = true;
        if (!has) {
            why = spec.name + ": recognizer does not recover the expected tuple";
            return false;
        }
    }
    return true;
}

bool criterion3(std::string& why) {
    std::mt19937_64 rng(424243);
    int done = 0;
    while (done < 200) {
        int D = 3 + static_cast<int>(rng() % 4);
        long b = 2 + static_cast<long>(rng() % 4);
        long aden = 1 + static_cast<long>(rng() % 3);
        long anum = static_cast<long>(rng() % static_cast<unsigned long>(b * aden + 1));
        ClassicalParams p{D, Rat(b), Rat(anum, aden), 0};
        Rat r = p.r();
        long bden = 1 + static_cast<long>(rng() % 8);
        Rat lo = p.alpha * r, hi = 4 * pow_rat(Rat(b), 3) * r;
        Int span = floor_rat((hi - lo) * bden);
        if (span < 2) continue;
        std::uniform_int_distribution<long long> pick(1, static_cast<long long>(span));
        p.beta = lo + Rat(pick(rng), bden);
        if (p.beta <= lo || p.beta > hi) continue;
        auto closed = standard_sequence_closed_form(p);
        auto rec = standard_sequence(intersection_array(p), -r);
        if (!closed.ok() || !rec.ok()) {
            why = "sequence construction failed: " + closed.error + rec.error;
            return false;
        }
        if (closed->u != rec->u) {
            why = "closed form differs from the recurrence at tuple " + std::to_string(D) + "," +
                  rat_str(p.b) + "," + rat_str(p.alpha) + "," + rat_str(p.beta);
            return false;
        }
        ++done;
    }
    return true;
}

bool criterion4(std::string& why) {
    for (const InstanceSpec& spec : instance_list()) {
        auto fi = build_family(spec.family, spec.args);
        if (!fi.ok()) {
            why = spec.name + ": " + fi.error;
            return false;
        }
        IntersectionArray arr = intersection_array(fi->expected_params);
        auto eig = eigenvalues(fi->expected_params);
        auto sp = spectrum_oracle(arr);
        if (!eig.ok() || !sp.ok() || !sp->residual.empty()) {
            why = spec.name + ": spectrum computation failed";
            return false;
        }
        std::vector<Rat> roots;
        for (auto& [th, m] : sp->eigs) roots.push_back(th);
        std::vector<Rat> want = *eig;
        std::sort(want.begin(), want.end(), std::greater<Rat>());
        if (roots != want) {
            why = spec.name + ": oracle roots differ from the eigenvalue formula";
            return false;
        }
        if (fi->graph.n() <= 600) {
            std::vector<Rat> mults;
            Rat total = 0;
            for (const Rat& th : *eig) {
                auto m = multiplicity(arr, th);
                if (!m.ok()) {
                    why = spec.name + ": multiplicity failed";
                    return false;
                }
                mults.push_back(*m);
                total += *m;
            }
            if (total != fi->graph.n()) {
                why = spec.name + ": multiplicities do not sum to n";
                return false;
            }
            auto adj = verify_adjacency_spectrum(fi->graph, *eig, mults);
            if (!adj.ok) {
                why = spec.name + ": " + adj.detail;
                return false;
            }
        }
    }
    return true;
}

struct FlagshipData {
    FamilyInstance fi;
    ClassicalParams p{3, Rat(2), Rat(1), Rat(7)};
    CliqueCover cover;
    AssemblySystem asys;
    DistTable dist;
    bool ready = false;
    std::string error;
};

FlagshipData& flagship() {
    static FlagshipData f = [] {
        FlagshipData d;
        auto built = build_bilinear_forms(2, 3, 3);
        if (!built.ok()) {
            d.error = built.error;
            return d;
        }
        d.fi = std::move(*built);
        auto cr = delsarte_cover(d.fi.graph, d.p);
        if (!cr.ok()) {
            d.error = "no cover: " + cr.detail;
            return d;
        }
        d.cover = std::move(*cr.cover);
        auto ar = assemblies(d.fi.graph, d.p, d.cover);
        if (!ar.ok()) {
            d.error = "no assemblies: " + ar.witness;
            return d;
        }
        d.asys = std::move(*ar.system);
        d.dist = all_pairs_distances(d.fi.graph);
        d.ready = true;
        return d;
    }();
    return f;
}

bool criterion5(std::string& why) {
    FlagshipData& f = flagship();
    if (!f.ready) {
        why = f.error;
        return false;
    }
    for (int v = 0; v < f.fi.graph.n(); ++v)
        if (f.cover.lines_through[static_cast<size_t>(v)].size() != 7) {
            why = "vertex " + std::to_string(v) + " is not on exactly 7 lines";
            return false;
        }
    PhiReport pr = phi_check(f.fi.graph, f.p, f.cover, f.dist);
    if (!pr.ok) {
        why = pr.witness;
        return false;
    }
    if (pr.phi_expected != std::vector<Rat>{1, 2, 4}) {
        why = "phi constants are not (1, 2, 4)";
        return false;
    }
    return true;
}

bool criterion6(std::string& why) {
    FlagshipData& f = flagship();
    if (!f.ready) {
        why = f.error;
        return false;
    }
    DualPaschResult dp = dual_pasch_check(f.fi.graph, f.cover);
    if (!dp.ok) {
        why = dp.to_string();
        return false;
    }
    if (f.asys.assemblies.size() != 448) {
        why = "expected 448 assemblies";
        return false;
    }
    for (const auto& M : f.asys.assemblies)
        if (M.size() != 8) {
            why = "assembly of order != 8";
            return false;
        }
    for (int v = 0; v < f.fi.graph.n(); ++v)
        if (f.asys.through[static_cast<size_t>(v)].size() != 7) {
            why = "vertex not in exactly 7 assemblies";
            return false;
        }
    LocalGridResult lg = local_grid_check(f.fi.graph, f.p, f.cover, f.asys);
    if (!lg.ok) {
        why = lg.witness;
        return false;
    }
    if (lg.cells_per_vertex != 49) {
        why = "local graphs are not 7x7 grids";
        return false;
    }
    CiSubgridResult cs = ci_subgrid_check(f.fi.graph, f.p, f.cover, f.asys, f.dist);
    if (!cs.ok) {
        why = cs.witness;
        return false;
    }
    long samples = 0;
    for (size_t ai = 0; ai < f.asys.assemblies.size() && samples < 120; ai += 3)
        for (int x = 0; x < f.fi.graph.n() && samples < 120; x += 5) {
            int dxM = 255;
            for (int y : f.asys.assemblies[ai])
                dxM = std::min(dxM,
                               static_cast<int>(f.dist[static_cast<size_t>(x)][static_cast<size_t>(y)]));
            if (dxM != 2) continue;
            DesignResult dr = design_extract(f.fi.graph, f.p, f.cover, f.asys, f.dist,
                                             static_cast<int>(ai), x);
            if (!dr.ok()) {
                why = "design at assembly " + std::to_string(ai) + ", vertex " +
                      std::to_string(x) + ": " + dr.witness;
                return false;
            }
            if (dr.design->v != 4 || dr.design->k_blk != 2 || dr.design->blocks.size() != 6) {
                why = "extracted design is not 2-(4,2,1)";
                return false;
            }
            ++samples;
        }
    if (samples < 100) {
        why = "only " + std::to_string(samples) + " design samples available";
        return false;
    }
    return true;
}

bool criterion7(std::string& why) {
    for (const CatalogEntry& e : family_catalog()) {
        ClassificationOutcome oc = classify(e.p);
        if (oc.has(CaseTag::Infeasible)) {
            why = "catalog tuple misclassified as infeasible: " + e.name;
            return false;
        }
    }
    if (!classify(ClassicalParams{3, Rat(2), Rat(2), Rat(30)}).has(CaseTag::Item7Region)) {
        why = "twisted Grassmann parameters (3,2,2,30) not in the small-beta region";
        return false;
    }

    // strictness pins at lhs = rhs
    ClassicalParams p{3, Rat(2), Rat(1), Rat(0)};
    p.beta = thm_spls_sufficient(p).rhs;
    if (!thm_spls_sufficient(p).holds) {  // non-strict >=
        why = "SPLS-sufficient bound must include its boundary";
        return false;
    }
    for (size_t i = 0; i < 3; ++i) {
        ClassicalParams q{3, Rat(2), Rat(1), Rat(0)};
        q.beta = thm_geometric_conditions(ClassicalParams{3, Rat(2), Rat(1), Rat(1)}, 9)[i].rhs;
        if (thm_geometric_conditions(q, 9)[i].holds) {  // strict >
            why = "geometricity condition " + std::to_string(i + 1) +
                  " must exclude its boundary";
            return false;
        }
    }
    ClassicalParams t6{3, Rat(2), Rat(1), Rat(0)};
    t6.beta = thm_betabound(t6).rhs;
    if (!thm_betabound(t6).holds) {  // non-strict >=
        why = "beta bound must include its boundary";
        return false;
    }
    ClassicalParams c1{3, Rat(2), Rat(0), Rat(0)};
    c1.beta = corollary_alpha_zero(ClassicalParams{3, Rat(2), Rat(0), Rat(1)})->rhs;
    if (corollary_alpha_zero(c1)->holds) {  // strict <
        why = "alpha = 0 cap must exclude its boundary";
        return false;
    }
    ClassicalParams l13{3, Rat(2), Rat(1), Rat(0)};
    l13.beta = dual_pasch_bound(ClassicalParams{3, Rat(2), Rat(1), Rat(1)})->rhs;
    if (dual_pasch_bound(l13)->holds) {  // strict >
        why = "dual Pasch bound must exclude its boundary";
        return false;
    }
    return true;
}

bool criterion8(std::string& why) {
    FlagshipData& f = flagship();
    if (!f.ready) {
        why = f.error;
        return false;
    }
    std::mt19937_64 rng(0x5EED);
    auto edges = f.fi.graph.edges();
    for (int t = 0; t < 50; ++t) {
        Graph g = f.fi.graph;
        auto [u, v] = edges[rng() % edges.size()];
        g.remove_edge(u, v);
        auto chk = check_distance_regular(g);
        if (chk.ok() || !chk.witness || chk.witness->to_string().empty()) {
            why = "deletion of (" + std::to_string(u) + "," + std::to_string(v) +
                  ") left the distance-regularity check green";
            return false;
        }
    }
    int added = 0;
    while (added < 50) {
        Graph g = f.fi.graph;
        int u = static_cast<int>(rng() % static_cast<unsigned>(g.n()));
        int v = static_cast<int>(rng() % static_cast<unsigned>(g.n()));
        if (u == v || g.adjacent(u, v)) continue;
        g.add_edge(u, v);
        auto chk = check_distance_regular(g);
        if (chk.ok()) {
            why = "addition left the distance-regularity check green";
            return false;
        }
        // the clique-cover route must also refute additions
        auto cr = delsarte_cover(g, f.p, /*check_drg=*/false);
        bool refuted = !cr.ok() && (cr.witness_u >= 0 || !cr.detail.empty());
        if (!refuted) {
            DualPaschResult dp = dual_pasch_check(g, *cr.cover);
            refuted = !dp.ok;
        }
        if (!refuted) {
            why = "addition of (" + std::to_string(u) + "," + std::to_string(v) +
                  ") not refuted by the cover or dual Pasch route";
            return false;
        }
        ++added;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    g_cli_path = argc > 1 ? argv[1] : "./tools/drg";
    struct Row {
        int id;
        const char* what;
        double limit;
        std::function<bool(std::string&)> fn;
    };
    std::vector<Row> rows = {
        {1, "Gosset round trip (CLI array + construction self-check)", 5.0, criterion1},
        {2, "family arrays match the closed forms and recognizer round trips", 60.0, criterion2},
        {3, "closed-form standard sequence equals the recurrence on 200 random tuples", 1.0,
         criterion3},
        {4, "spectrum oracle and exact adjacency spectra with multiplicities", 120.0, criterion4},
        {5, "bilinear flagship is geometric: 7 lines per vertex, phi = (1,2,4)", 60.0,
         criterion5},
        {6, "assembly suite: dual Pasch, 448 assemblies, 7x7 local grids, sub-grids, designs",
         600.0, criterion6},
        {7, "classifier consistency on the catalog and strictness boundary pins", 5.0,
         criterion7},
        {8, "perturbation sensitivity: 50 deletions + 50 additions all refuted", 600.0,
         criterion8},
    };
    bool all = true;
    for (Row& row : rows) {
        std::string why;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = row.fn(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > row.limit) {
            ok = false;
            why = "time budget exceeded";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << row.id << ": " << (ok ? "PASS" : "FAIL") << " (" << secs
             << "s / " << row.limit << "s) " << row.what;
        if (!ok) line << " -- " << why;
        std::cout << line.str() << std::endl;
        all = all && ok;
    }
    std::cout << (all ? "acceptance: ALL CRITERIA PASS" : "acceptance: FAILURES PRESENT")
              << std::endl;
    return all ? 0 : 1;
}
