#include "drg/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drg {

std::string family_str(Family f) {
    switch (f) {
        case Family::Hamming: return "hamming";
        case Family::Johnson: return "johnson";
        case Family::Grassmann: return "grassmann";
        case Family::BilinearForms: return "bilinear";
        case Family::HalvedCube: return "halved-cube";
        case Family::Gosset: return "gosset";
    }
    return "?";
}

namespace {

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// q^e with overflow guard against the cap comparison.
long checked_pow(long q, int e, long cap) {
    long v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > cap / q + 1) return cap + 1;
        v *= q;
    }
    return v;
}

long binom_long(int n, int k) {
    if (k < 0 || k > n) return 0;
    long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

}  // namespace

Fallible<FamilyInstance> build_hamming(int D, long q, long cap) {
    if (D < 1 || q < 2) return Fallible<FamilyInstance>::failure("hamming: D >= 1, q >= 2 required");
    long n = checked_pow(q, D, cap);
    if (n > cap)
        return Fallible<FamilyInstance>::failure("hamming: q^D exceeds vertex cap of " +
                                                 std::to_string(cap));
    FamilyInstance fi;
    fi.family = Family::Hamming;
    fi.args = {D, q};
    fi.graph = Graph(static_cast<int>(n));
    std::vector<long> word(static_cast<size_t>(D), 0);
    for (long v = 0; v < n; ++v) {
        long t = v;
        std::ostringstream lbl;
        for (int i = 0; i < D; ++i) {
            word[static_cast<size_t>(i)] = t % q;
            t /= q;
            lbl << (i ? "," : "") << word[static_cast<size_t>(i)];
        }
        fi.graph.labels.push_back(lbl.str());
        long base = 1;
        for (int i = 0; i < D; ++i) {
            for (long c = 0; c < q; ++c) {
                if (c == word[static_cast<size_t>(i)]) continue;
                long u = v + (c - word[static_cast<size_t>(i)]) * base;
                if (u < v) fi.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
            }
            base *= q;
        }
    }
    fi.expected_params = ClassicalParams{D, Rat(1), Rat(0), Rat(q - 1)};
    return Fallible<FamilyInstance>::success(std::move(fi));
}

Fallible<FamilyInstance> build_johnson(int n, int D, long cap) {
    if (D < 1 || 2 * D > n)
        return Fallible<FamilyInstance>::failure("johnson: need 1 <= D and 2D <= n");
    if (n > 62 || binom_long(n, D) > cap)
        return Fallible<FamilyInstance>::failure("johnson: C(n,D) exceeds vertex cap");
    // lexicographic enumeration of D-subsets as sorted index tuples
    std::vector<std::uint64_t> masks;
    std::vector<int> comb(static_cast<size_t>(D));
    std::iota(comb.begin(), comb.end(), 0);
    std::map<std::uint64_t, int> index;
    for (;;) {
        std::uint64_t m = 0;
        for (int c : comb) m |= (1ULL << c);
        index[m] = static_cast<int>(masks.size());
        masks.push_back(m);
        int i = D - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - D + i) --i;
        if (i < 0) break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < D; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
    FamilyInstance fi;
    fi.family = Family::Johnson;
    fi.args = {n, D};
    fi.graph = Graph(static_cast<int>(masks.size()));
    for (size_t v = 0; v < masks.size(); ++v) {
        std::uint64_t m = masks[v];
        std::ostringstream lbl;
        lbl << "{";
        bool fst = true;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) {
                lbl << (fst ? "" : ",") << i;
                fst = false;
            }
        lbl << "}";
        fi.graph.labels.push_back(lbl.str());
        for (int a = 0; a < n; ++a) {
            if (!(m >> a & 1)) continue;
            for (int b = 0; b < n; ++b) {
                if (m >> b & 1) continue;
                std::uint64_t m2 = (m ^ (1ULL << a)) | (1ULL << b);
                auto it = index.find(m2);
                if (it != index.end() && it->second < static_cast<int>(v))
                    fi.graph.add_edge(it->second, static_cast<int>(v));
            }
        }
    }
    fi.expected_params = ClassicalParams{D, Rat(1), Rat(1), Rat(n - D)};
    return Fallible<FamilyInstance>::success(std::move(fi));
}

namespace {

// Row-reduce an m x n matrix over F_q in place; returns the rank.
int rank_mod_q(std::vector<std::vector<int>>& rows, long q) {
    int m = static_cast<int>(rows.size());
    int n = m ? static_cast<int>(rows[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int r = rank; r < m; ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
        // normalize pivot to 1
        long inv = 1;
        long pv = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (long t = 1; t < q; ++t)
            if (pv * t % q == 1) {
                inv = t;
                break;
            }
        for (int c = col; c < n; ++c)
            rows[static_cast<size_t>(rank)][static_cast<size_t>(c)] =
                static_cast<int>(rows[static_cast<size_t>(rank)][static_cast<size_t>(c)] * inv % q);
        for (int r = 0; r < m; ++r) {
            if (r == rank) continue;
            long f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (!f) continue;
            for (int c = col; c < n; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<int>(
                    ((rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                      f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)]) % q + q * q) % q);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

Fallible<FamilyInstance> build_grassmann(long q, int n, int D, long cap) {
    if (!is_prime(q)) return Fallible<FamilyInstance>::failure("grassmann: q must be prime");
    if (D < 1 || 2 * D > n) return Fallible<FamilyInstance>::failure("grassmann: need 2D <= n");
    Rat count = 1;  // Gaussian binomial [n choose D]_q
    for (int i = 0; i < D; ++i)
        count *= (pow_rat(Rat(q), static_cast<unsigned>(n - i)) - 1) /
                 (pow_rat(Rat(q), static_cast<unsigned>(D - i)) - 1);
    if (count > cap)
        return Fallible<FamilyInstance>::failure("grassmann: subspace count " + rat_str(count) +
                                                 " exceeds vertex cap");

    // Every D-dim subspace has a unique RREF basis: pick pivot columns, then
    // sweep the free positions (right of the pivot, not a pivot column).
    std::vector<std::vector<std::vector<int>>> spaces;
    std::vector<int> pivots(static_cast<size_t>(D));
    std::iota(pivots.begin(), pivots.end(), 0);
    for (;;) {
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < D; ++i)
            for (int j = pivots[static_cast<size_t>(i)] + 1; j < n; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                    free_pos.emplace_back(i, j);
        long total = checked_pow(q, static_cast<int>(free_pos.size()), cap + 1);
        for (long code = 0; code < total; ++code) {
            std::vector<std::vector<int>> rows(
                static_cast<size_t>(D), std::vector<int>(static_cast<size_t>(n), 0));
            for (int i = 0; i < D; ++i)
                rows[static_cast<size_t>(i)][static_cast<size_t>(pivots[static_cast<size_t>(i)])] = 1;
            long t = code;
            for (auto [i, j] : free_pos) {
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(t % q);
                t /= q;
            }
            spaces.push_back(std::move(rows));
        }
        int i = D - 1;
        while (i >= 0 && pivots[static_cast<size_t>(i)] == n - D + i) --i;
        if (i < 0) break;
        ++pivots[static_cast<size_t>(i)];
        for (int j = i + 1; j < D; ++j)
            pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
    }

    FamilyInstance fi;
    fi.family = Family::Grassmann;
    fi.args = {q, n, D};
    fi.graph = Graph(static_cast<int>(spaces.size()));
    for (const auto& rows : spaces) {
        std::ostringstream lbl;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r) lbl << "|";
            for (int x : rows[r]) lbl << x;
        }
        fi.graph.labels.push_back(lbl.str());
    }
    std::vector<std::vector<int>> stacked(static_cast<size_t>(2 * D),
                                          std::vector<int>(static_cast<size_t>(n)));
    for (size_t u = 0; u < spaces.size(); ++u)
        for (size_t v = u + 1; v < spaces.size(); ++v) {
            for (int i = 0; i < D; ++i) {
                stacked[static_cast<size_t>(i)] = spaces[u][static_cast<size_t>(i)];
                stacked[static_cast<size_t>(D + i)] = spaces[v][static_cast<size_t>(i)];
            }
            // dim(U + V) = D + 1 exactly when dim(U ∩ V) = D - 1
            if (rank_mod_q(stacked, q) == D + 1)
                fi.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    fi.expected_params = ClassicalParams{D, Rat(q), Rat(q), bracket(n - D + 1, Rat(q)) - 1};
    return Fallible<FamilyInstance>::success(std::move(fi));
}

Fallible<FamilyInstance> build_bilinear_forms(long q, int d, int e, long cap) {
    if (!is_prime(q)) return Fallible<FamilyInstance>::failure("bilinear: q must be prime");
    if (d < 1 || d > e) return Fallible<FamilyInstance>::failure("bilinear: need 1 <= d <= e");
    long n = checked_pow(q, d * e, cap);
    if (n > cap) return Fallible<FamilyInstance>::failure("bilinear: q^(d*e) exceeds vertex cap");

    // rank-1 difference patterns u v^T, u normalized to leading coefficient 1
    std::vector<std::vector<int>> rank1;
    long du = checked_pow(q, d, cap + 1), dv = checked_pow(q, e, cap + 1);
    for (long uc = 1; uc < du; ++uc) {
        std::vector<int> u(static_cast<size_t>(d));
        long t = uc;
        for (int i = 0; i < d; ++i) {
            u[static_cast<size_t>(i)] = static_cast<int>(t % q);
            t /= q;
        }
        int lead = 0;
        while (u[static_cast<size_t>(lead)] == 0) ++lead;
        if (u[static_cast<size_t>(lead)] != 1) continue;  // one representative per direction
        for (long vc = 1; vc < dv; ++vc) {
            std::vector<int> v(static_cast<size_t>(e));
            t = vc;
            for (int j = 0; j < e; ++j) {
                v[static_cast<size_t>(j)] = static_cast<int>(t % q);
                t /= q;
            }
            std::vector<int> m(static_cast<size_t>(d * e));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < e; ++j)
                    m[static_cast<size_t>(i * e + j)] =
                        u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)] % static_cast<int>(q);
            rank1.push_back(std::move(m));
        }
    }

    FamilyInstance fi;
    fi.family = Family::BilinearForms;
    fi.args = {q, d, e};
    fi.graph = Graph(static_cast<int>(n));
    std::vector<int> entries(static_cast<size_t>(d * e));
    for (long v = 0; v < n; ++v) {
        long t = v;
        std::ostringstream lbl;
        for (int i = 0; i < d * e; ++i) {
            entries[static_cast<size_t>(i)] = static_cast<int>(t % q);
            t /= q;
            lbl << entries[static_cast<size_t>(i)];
        }
        fi.graph.labels.push_back(lbl.str());
        for (const auto& m : rank1) {
            long u = 0, base = 1;
            for (int i = 0; i < d * e; ++i) {
                u += ((entries[static_cast<size_t>(i)] + m[static_cast<size_t>(i)]) %
                      static_cast<int>(q)) * base;
                base *= q;
            }
            if (u < v) fi.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    fi.expected_params =
        ClassicalParams{d, Rat(q), Rat(q - 1), pow_rat(Rat(q), static_cast<unsigned>(e)) - 1};
    return Fallible<FamilyInstance>::success(std::move(fi));
}

Fallible<FamilyInstance> build_halved_cube(int n, long cap) {
    if (n < 3) return Fallible<FamilyInstance>::failure("halved-cube: n >= 3 required");
    if (n > 40 || (1L << (n - 1)) > cap)
        return Fallible<FamilyInstance>::failure("halved-cube: 2^(n-1) exceeds vertex cap");
    std::vector<long> verts;
    std::vector<int> index(static_cast<size_t>(1L << n), -1);
    for (long m = 0; m < (1L << n); ++m)
        if (__builtin_popcountll(static_cast<unsigned long long>(m)) % 2 == 0) {
            index[static_cast<size_t>(m)] = static_cast<int>(verts.size());
            verts.push_back(m);
        }
    FamilyInstance fi;
    fi.family = Family::HalvedCube;
    fi.args = {n};
    fi.graph = Graph(static_cast<int>(verts.size()));
    for (size_t v = 0; v < verts.size(); ++v) {
        std::ostringstream lbl;
        for (int i = 0; i < n; ++i) lbl << ((verts[v] >> i) & 1);
        fi.graph.labels.push_back(lbl.str());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                long m2 = verts[v] ^ (1L << a) ^ (1L << b);
                int u = index[static_cast<size_t>(m2)];
                if (u >= 0 && u < static_cast<int>(v)) fi.graph.add_edge(u, static_cast<int>(v));
            }
    }
    auto drg = check_distance_regular(fi.graph);
    if (!drg.ok())
        return Fallible<FamilyInstance>::failure("halved-cube: extraction failed: " +
                                                 drg.witness->to_string());
    for (const ClassicalParams& p : recognize_classical(*drg.array))
        if (p.b == 1 && p.alpha == 2) {
            fi.expected_params = p;
            return Fallible<FamilyInstance>::success(std::move(fi));
        }
    return Fallible<FamilyInstance>::failure("halved-cube: no (b, alpha) = (1, 2) tuple matches");
}

Fallible<FamilyInstance> build_gosset() {
    // Two copies of the 28 duads of an 8-set; see header.
    std::vector<std::pair<int, int>> duads;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) duads.emplace_back(i, j);
    FamilyInstance fi;
    fi.family = Family::Gosset;
    fi.graph = Graph(56);
    auto meet = [](std::pair<int, int> a, std::pair<int, int> b) {
        return a.first == b.first || a.first == b.second || a.second == b.first ||
               a.second == b.second;
    };
    for (int copy = 0; copy < 2; ++copy)
        for (size_t i = 0; i < duads.size(); ++i) {
            std::ostringstream lbl;
            lbl << (copy ? "B{" : "A{") << duads[i].first << "," << duads[i].second << "}";
            fi.graph.labels.push_back(lbl.str());
        }
    for (size_t i = 0; i < duads.size(); ++i)
        for (size_t j = i + 1; j < duads.size(); ++j) {
            if (meet(duads[i], duads[j])) {
                fi.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
                fi.graph.add_edge(static_cast<int>(28 + i), static_cast<int>(28 + j));
            } else {
                fi.graph.add_edge(static_cast<int>(i), static_cast<int>(28 + j));
                fi.graph.add_edge(static_cast<int>(j), static_cast<int>(28 + i));
            }
        }
    fi.expected_params = ClassicalParams{3, Rat(1), Rat(4), Rat(9)};

    // the array is the contract; the duad model is replaceable
    auto drg = check_distance_regular(fi.graph);
    IntersectionArray want = intersection_array(fi.expected_params);
    if (!drg.ok() || drg.array->b_seq != want.b_seq || drg.array->c_seq != want.c_seq)
        return Fallible<FamilyInstance>::failure(
            "gosset: construction model failed its self-check against {27,10,1;1,10,27}" +
            (drg.ok() ? ", got " + drg.array->to_string() : ": " + drg.witness->to_string()));
    return Fallible<FamilyInstance>::success(std::move(fi));
}

Fallible<FamilyInstance> build_family(const std::string& name, const std::vector<long>& args,
                                      long cap) {
    auto need = [&](size_t k) { return args.size() == k; };
    if (name == "hamming" && need(2))
        return build_hamming(static_cast<int>(args[0]), args[1], cap);
    if (name == "johnson" && need(2))
        return build_johnson(static_cast<int>(args[0]), static_cast<int>(args[1]), cap);
    if (name == "grassmann" && need(3))
        return build_grassmann(args[0], static_cast<int>(args[1]), static_cast<int>(args[2]), cap);
    if (name == "bilinear" && need(3))
        return build_bilinear_forms(args[0], static_cast<int>(args[1]),
                                    static_cast<int>(args[2]), cap);
    if (name == "halved-cube" && need(1)) return build_halved_cube(static_cast<int>(args[0]), cap);
    if (name == "gosset" && need(0)) return build_gosset();
    return Fallible<FamilyInstance>::failure("unknown family '" + name +
                                             "' or wrong argument count");
}

std::vector<CatalogEntry> family_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](std::string name, int D, long b, Rat alpha, Rat beta) {
        cat.push_back(CatalogEntry{std::move(name), ClassicalParams{D, Rat(b), alpha, beta}});
    };
    for (int D = 3; D <= 6; ++D)
        for (long q = 2; q <= 5; ++q)
            add("hamming H(" + std::to_string(D) + "," + std::to_string(q) + ")", D, 1, 0, q - 1);
    for (int D = 4; D <= 6; D += 2) add("doob diameter " + std::to_string(D), D, 1, 0, 3);
    for (int D = 3; D <= 5; ++D)
        for (int n = 2 * D; n <= 2 * D + 4; ++n)
            add("johnson J(" + std::to_string(n) + "," + std::to_string(D) + ")", D, 1, 1, n - D);
    for (int D = 3; D <= 5; ++D) {
        add("halved " + std::to_string(2 * D) + "-cube", D, 1, 2, 2 * D - 1);
        add("halved " + std::to_string(2 * D + 1) + "-cube", D, 1, 2, 2 * D + 1);
    }
    add("gosset", 3, 1, 4, 9);
    for (long q : {2L, 3L})
        for (int D = 3; D <= 4; ++D)
            for (int n = 2 * D; n <= 2 * D + 2; ++n)
                add("grassmann J_" + std::to_string(q) + "(" + std::to_string(n) + "," +
                        std::to_string(D) + ")",
                    D, q, q, bracket(n - D + 1, Rat(q)) - 1);
    for (long q : {2L, 3L})
        for (int d = 3; d <= 4; ++d)
            for (int e = d; e <= d + 2; ++e)
                add("bilinear H_" + std::to_string(q) + "(" + std::to_string(d) + "," +
                        std::to_string(e) + ")",
                    d, q, q - 1, pow_rat(Rat(q), static_cast<unsigned>(e)) - 1);
    for (int D = 3; D <= 5; ++D) {
        for (long b : {2L, 3L, 4L, 5L}) {
            add("dual polar (b=" + std::to_string(b) + ", beta=1) D=" + std::to_string(D), D, b,
                0, 1);
            add("dual polar (b=" + std::to_string(b) + ", beta=b) D=" + std::to_string(D), D, b,
                0, b);
        }
        add("dual polar (b=4, beta=2) D=" + std::to_string(D), D, 4, 0, 2);
        add("dual polar (b=4, beta=8) D=" + std::to_string(D), D, 4, 0, 8);
    }
    for (long b : {2L, 3L})
        for (int D = 3; D <= 4; ++D) {
            ClassicalParams tmp{D, Rat(b), Rat(b), Rat(0)};
            add("twisted grassmann (b=" + std::to_string(b) + ") D=" + std::to_string(D), D, b,
                b, b * b * tmp.r() + b);
        }
    return cat;
}

}  // namespace drg
