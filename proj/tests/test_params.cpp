#include <doctest.h>

#include <random>

#include "drg/params.hpp"

using namespace drg;

namespace {

ClassicalParams cp(int D, long b, const Rat& alpha, const Rat& beta) {
    return ClassicalParams{D, Rat(b), alpha, beta};
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("bracket: closed form and b = 1 branch") {
    CHECK(bracket(0, Rat(2)) == 0);
    CHECK(bracket(0, Rat(17, 3)) == 0);
    CHECK(bracket(3, Rat(2)) == 7);  // 1 + 2 + 4
    CHECK(bracket(3, Rat(1)) == 3);
    CHECK(bracket(4, Rat(3)) == 40);
    CHECK(bracket(2, Rat(1, 2)) == Rat(3, 2));
    CHECK(cp(3, 2, 1, 7).r() == 7);
    CHECK_THROWS(bracket(-1, Rat(2)));
}

TEST_CASE("intersection_array: frozen family examples") {
    // Gosset parameters
    IntersectionArray gos = intersection_array(cp(3, 1, 4, 9));
    CHECK(gos.b_seq == rats({27, 10, 1}));
    CHECK(gos.c_seq == rats({1, 10, 27}));
    CHECK(gos.to_string() == "{27,10,1;1,10,27}");
    CHECK(gos.n == 56);
    CHECK(gos.feasible());
    CHECK(gos.integral());

    // 3x3 bilinear forms over F_2
    IntersectionArray bil = intersection_array(cp(3, 2, 1, 7));
    CHECK(bil.b_seq == rats({49, 36, 16}));
    CHECK(bil.c_seq == rats({1, 6, 28}));
    CHECK(bil.a_seq == rats({12, 27, 21}));
    CHECK(bil.n == 512);
    CHECK(bil.k_dist == rats({1, 49, 294, 168}));

    // Hamming cube over a ternary alphabet
    IntersectionArray ham = intersection_array(cp(3, 1, 0, 2));
    CHECK(ham.b_seq == rats({6, 4, 2}));
    CHECK(ham.c_seq == rats({1, 2, 3}));
    CHECK(ham.n == 27);

    // c_2 = (b+1)(alpha+1) throughout
    for (long b = 2; b <= 4; ++b)
        for (long a = 0; a <= b; ++a) {
            ClassicalParams p = cp(3, b, a, 50);
            CHECK(intersection_array(p).c(2) == (p.b + 1) * (p.alpha + 1));
        }
    // k = beta * r
    CHECK(bil.k == Rat(7) * cp(3, 2, 1, 7).r());
}

TEST_CASE("intersection_array: infeasibility is flagged, not thrown") {
    IntersectionArray bad = intersection_array(cp(3, 1, 2, 4));  // b_2 = 0
    CHECK(!bad.feasible());
    CHECK(!bad.issues.empty());

    IntersectionArray neg = intersection_array(cp(3, 2, 1, -3));
    CHECK(!neg.feasible());

    IntersectionArray frac = intersection_array(cp(3, 2, Rat(1, 2), 7));
    CHECK(!frac.integral());  // c_2 = 9/2
}

TEST_CASE("eigenvalues: formula against frozen values and ordering") {
    auto e1 = eigenvalues(cp(3, 2, 1, 7));
    REQUIRE(e1.ok());
    CHECK(*e1 == rats({49, 17, 1, -7}));

    auto e2 = eigenvalues(cp(3, 1, 4, 9));
    REQUIRE(e2.ok());
    CHECK(*e2 == rats({27, 9, -1, -3}));

    // theta_D = -r, strictly decreasing for b >= 1
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int D = 3 + static_cast<int>(rng() % 4);
        long b = 1 + static_cast<long>(rng() % 4);
        long a = static_cast<long>(rng() % (static_cast<unsigned long>(b) + 1));
        long beta = 1 + static_cast<long>(rng() % 300);
        ClassicalParams p = cp(D, b, a, beta);
        auto eig = eigenvalues(p);
        REQUIRE(eig.ok());
        CHECK(eig->front() == intersection_array(p).k);
        CHECK(eig->back() == -p.r());
        if (intersection_array(p).feasible())
            for (size_t i = 0; i + 1 < eig->size(); ++i) CHECK((*eig)[i] > (*eig)[i + 1]);
    }
    CHECK(!eigenvalues(cp(3, 0, 1, 7)).ok());
}

TEST_CASE("standard_sequence: recurrence values") {
    IntersectionArray arr = intersection_array(cp(3, 2, 1, 7));
    auto seq = standard_sequence(arr, Rat(-7));
    REQUIRE(seq.ok());
    CHECK(seq->u == std::vector<Rat>{1, Rat(-1, 7), Rat(1, 21), Rat(-1, 21)});

    // theta = k gives the all-ones sequence since c_i + a_i + b_i = k
    auto ones = standard_sequence(arr, arr.k);
    REQUIRE(ones.ok());
    for (const Rat& u : ones->u) CHECK(u == 1);

    // u_1 = theta / k always
    auto s5 = standard_sequence(arr, Rat(5));
    REQUIRE(s5.ok());
    CHECK(s5->u[1] == Rat(5) / arr.k);

    IntersectionArray zero = intersection_array(cp(3, 1, 2, 4));  // b_2 = 0
    CHECK(!standard_sequence(zero, Rat(-3)).ok());
}

TEST_CASE("standard_sequence_closed_form: frozen values and error paths") {
    auto seq = standard_sequence_closed_form(cp(3, 2, 1, 7));
    REQUIRE(seq.ok());
    CHECK(seq->theta == -7);
    CHECK(seq->u[1] == Rat(-1, 7));   // empty product
    CHECK(seq->u[2] == Rat(1, 21));   // (1+alpha)/(beta(beta-alpha))
    CHECK(seq->u[3] == Rat(-1, 21));

    CHECK(!standard_sequence_closed_form(cp(3, 1, 1, 5)).ok());   // b < 2
    CHECK(!standard_sequence_closed_form(cp(3, 2, 1, 0)).ok());   // beta = 0
    auto degenerate = standard_sequence_closed_form(cp(3, 2, 2, 6));  // beta = alpha[2]
    CHECK(!degenerate.ok());
    CHECK(degenerate.error.find("[2]") != std::string::npos);
}

TEST_CASE("standard sequence: closed form equals recurrence on 200 random tuples") {
    std::mt19937_64 rng(20250810);
    int done = 0;
    while (done < 200) {
        int D = 3 + static_cast<int>(rng() % 4);     // 3..6
        long b = 2 + static_cast<long>(rng() % 4);   // 2..5
        long aden = 1 + static_cast<long>(rng() % 3);
        long anum = static_cast<long>(rng() % static_cast<unsigned long>(b * aden + 1));
        Rat alpha(anum, aden);                        // 0 <= alpha <= b
        ClassicalParams p{D, Rat(b), alpha, 0};
        Rat r = p.r();
        // beta rational in (alpha r, 4 b^3 r]
        long bden = 1 + static_cast<long>(rng() % 8);
        Rat lo = alpha * r, hi = 4 * pow_rat(Rat(b), 3) * r;
        Int span = floor_rat((hi - lo) * bden);
        if (span < 2) continue;
        std::uniform_int_distribution<long long> pick(1, static_cast<long long>(span));
        p.beta = lo + Rat(pick(rng), bden);
        if (p.beta <= lo || p.beta > hi) continue;

        auto closed = standard_sequence_closed_form(p);
        REQUIRE(closed.ok());
        auto rec = standard_sequence(intersection_array(p), -r);
        REQUIRE(rec.ok());
        CHECK(closed->u == rec->u);
        ++done;
    }
    CHECK(done == 200);
}

TEST_CASE("multiplicity: Biggs formula basics") {
    IntersectionArray bil = intersection_array(cp(3, 2, 1, 7));
    auto at_k = multiplicity(bil, bil.k);
    REQUIRE(at_k.ok());
    CHECK(*at_k == 1);

    auto m = multiplicity(bil, Rat(-7));
    REQUIRE(m.ok());
    CHECK(*m == 168);
    CHECK(is_integer(*m));

    IntersectionArray gos = intersection_array(cp(3, 1, 4, 9));
    auto mg = multiplicity(gos, Rat(-3));
    REQUIRE(mg.ok());
    CHECK(*mg == 21);

    // multiplicities over the whole spectrum sum to n
    auto eig = eigenvalues(cp(3, 2, 1, 7));
    Rat total = 0;
    for (const Rat& th : *eig) total += *multiplicity(bil, th);
    CHECK(total == bil.n);
}

TEST_CASE("weighted orthogonality of standard sequences") {
    for (ClassicalParams p : {cp(3, 2, 1, 7), cp(3, 1, 4, 9), cp(4, 2, 2, 30)}) {
        IntersectionArray arr = intersection_array(p);
        auto eig = eigenvalues(p);
        REQUIRE(eig.ok());
        for (size_t i = 0; i < eig->size(); ++i)
            for (size_t j = i + 1; j < eig->size(); ++j) {
                auto si = standard_sequence(arr, (*eig)[i]);
                auto sj = standard_sequence(arr, (*eig)[j]);
                REQUIRE(si.ok());
                REQUIRE(sj.ok());
                Rat dot = 0;
                for (int l = 0; l <= arr.D; ++l)
                    dot += arr.k_dist[static_cast<size_t>(l)] * si->u[static_cast<size_t>(l)] *
                           sj->u[static_cast<size_t>(l)];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("delsarte_clique_data: frozen profile and identities") {
    auto prof = delsarte_clique_data(cp(3, 2, 1, 7));
    REQUIRE(prof.ok());
    CHECK(prof->delsarte_order == 8);
    CHECK(prof->phi == rats({1, 2, 4}));
    CHECK(prof->tau == rats({1, 3, 7}));
    CHECK(prof->lines_per_vertex == 7);
    CHECK(prof->has_assemblies);
    CHECK(prof->assembly_order == 8);
    CHECK(prof->assemblies_per_vertex == 7);

    auto nozero = delsarte_clique_data(cp(3, 2, 0, 5));
    REQUIRE(nozero.ok());
    CHECK(!nozero->has_assemblies);
    CHECK(!nozero->note.empty());

    CHECK(!delsarte_clique_data(cp(3, 1, 1, 5)).ok());

    // phi_1 = 1 + alpha; and Eq.-style consistency c_i = tau_i phi_{i-1},
    // b_i = -(theta_min + tau_i)(1 + k/(-theta_min) - phi_i)
    for (long b = 2; b <= 5; ++b)
        for (long a = 0; a <= b; ++a)
            for (long beta : {5L, 19L, 100L}) {
                ClassicalParams p = cp(4, b, a, beta);
                auto gp = delsarte_clique_data(p);
                REQUIRE(gp.ok());
                CHECK(gp->phi[1] == 1 + p.alpha);
                IntersectionArray arr = intersection_array(p);
                Rat theta_min = -p.r();
                for (int i = 1; i <= p.D; ++i)
                    CHECK(arr.c(i) == gp->tau[static_cast<size_t>(i - 1)] *
                                          gp->phi[static_cast<size_t>(i - 1)]);
                for (int i = 1; i <= p.D - 1; ++i)
                    CHECK(arr.b(i) ==
                          -(theta_min + gp->tau[static_cast<size_t>(i - 1)]) *
                              (1 + arr.k / (-theta_min) - gp->phi[static_cast<size_t>(i)]));
            }
}

TEST_CASE("recognize_classical: round trips") {
    IntersectionArray gos = intersection_array(cp(3, 1, 4, 9));
    auto found = recognize_classical(gos);
    bool has = false;
    for (const auto& p : found)
        if (p.D == 3 && p.b == 1 && p.alpha == 4 && p.beta == 9) has = true;
    CHECK(has);

    auto ham = recognize_classical(intersection_array(cp(3, 1, 0, 2)));
    has = false;
    for (const auto& p : ham)
        if (p.b == 1 && p.alpha == 0 && p.beta == 2) has = true;
    CHECK(has);

    // 3-cube = binary Hamming graph
    IntersectionArray cube;
    cube.D = 3;
    cube.b_seq = rats({3, 2, 1});
    cube.c_seq = rats({1, 2, 3});
    cube.k = 3;
    cube.a_seq = rats({0, 0, 0});
    cube.k_dist = rats({1, 3, 3, 1});
    cube.n = 8;
    cube.kdist_ok = true;
    has = false;
    for (const auto& p : recognize_classical(cube))
        if (p.b == 1 && p.alpha == 0 && p.beta == 1) has = true;
    CHECK(has);

    // not classical: the pentagon
    IntersectionArray penta;
    penta.D = 2;
    penta.b_seq = rats({2, 1});
    penta.c_seq = rats({1, 1});
    penta.k = 2;
    penta.a_seq = rats({0, 1});
    penta.k_dist = rats({1, 2, 2});
    penta.n = 5;
    penta.kdist_ok = true;
    CHECK(recognize_classical(penta).empty());
}

TEST_CASE("recognize_classical: forward round trip over a tuple grid") {
    for (long b = 1; b <= 3; ++b)
        for (long a = 0; a <= b; ++a)
            for (long beta : {3L, 7L, 12L}) {
                ClassicalParams p = cp(3, b, a, beta);
                IntersectionArray arr = intersection_array(p);
                if (!arr.feasible() || !arr.integral()) continue;
                bool has = false;
                for (const auto& q : recognize_classical(arr))
                    if (q.D == p.D && q.b == p.b && q.alpha == p.alpha && q.beta == p.beta)
                        has = true;
                CHECK(has);
            }
}

TEST_CASE("validate: structural constraints for D >= 3") {
    CHECK(validate(cp(3, 2, 1, 7)).empty());
    CHECK(!validate(cp(3, 0, 1, 7)).empty());
    CHECK(!validate(cp(3, -1, 1, 7)).empty());
    CHECK(!validate(ClassicalParams{3, Rat(3, 2), Rat(1), Rat(7)}).empty());
    CHECK(!validate(cp(3, 2, -1, 7)).empty());
    CHECK(validate(cp(2, 0, 1, 7)).empty());  // constraints bind only from D = 3
}

TEST_CASE("rational parsing") {
    CHECK(*parse_rational("3/4") == Rat(3, 4));
    CHECK(*parse_rational("-6/4") == Rat(-3, 2));
    CHECK(*parse_rational("17") == 17);
    CHECK(!parse_rational("x").has_value());
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("1/2/3").has_value());
    CHECK(rat_str(Rat(-3, 2)) == "-3/2");
    CHECK(rat_str(Rat(5)) == "5");
}
