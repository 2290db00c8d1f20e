#include "drg/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace drg {

namespace {

using Poly = std::vector<Rat>;  // coefficients, constant term first

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Divide p by (x - root); remainder must be zero.
Poly poly_deflate(const Poly& p, const Rat& root) {
    Poly q(p.size() - 1, Rat(0));
    Rat carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        q[i - 1] = p[i] + carry;
        carry = q[i - 1] * root;
    }
    return q;
}

std::string poly_str(const Poly& p) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
    os << "]";
    return os.str();
}

// All rational roots of p (with multiplicity, though Jacobi-type matrices
// give simple roots). Candidates: t = u/v with u | constant and v | leading
// coefficient of the primitive integer form; integer candidates are scanned
// through the Cauchy bound with a divisibility pre-filter.
std::vector<Rat> rational_roots(Poly p) {
    std::vector<Rat> roots;
    // strip zero roots
    while (p.size() > 1 && p[0] == 0) {
        roots.push_back(0);
        p.erase(p.begin());
    }
    if (p.size() <= 1) return roots;

    for (;;) {
        if (p.size() <= 1) break;
        // clear denominators
        Int lcm = 1;
        for (const Rat& c : p) lcm = boost::multiprecision::lcm(lcm, Int(denominator(c)));
        std::vector<Int> ip;
        for (const Rat& c : p) ip.push_back(numerator(Rat(c * lcm)));
        if (ip[0] == 0) {  // became reducible by x after deflation
            roots.push_back(0);
            p.erase(p.begin());
            continue;
        }
        // Cauchy bound: all roots have |t| <= 1 + max |a_i / a_deg|
        Rat lead = p.back();
        Rat maxratio = 0;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            maxratio = std::max(maxratio, Rat(abs(Rat(p[i] / lead))));
        Int bound = floor_rat(Rat(1 + maxratio)) + 1;
        if (bound > 2'000'000) bound = 2'000'000;  // desk-scale scan cap

        bool found = false;
        for (Int t = -bound; t <= bound && !found; ++t) {
            if (t == 0) continue;
            if (ip[0] % t != 0) continue;
            if (poly_eval(p, Rat(t)) == 0) {
                roots.push_back(Rat(t));
                p = poly_deflate(p, Rat(t));
                found = true;
            }
        }
        if (found) continue;

        // non-integer rational candidates: v | leading coefficient
        Int leadi = ip.back();
        if (leadi < 0) leadi = -leadi;
        if (leadi <= 1'000'000) {
            for (Int v = 2; v <= leadi && !found; ++v) {
                if (leadi % v != 0) continue;
                Int ubound = bound * v;
                if (ubound > 4'000'000) ubound = 4'000'000;
                for (Int u = -ubound; u <= ubound && !found; ++u) {
                    if (u == 0 || ip[0] % u != 0) continue;
                    if (boost::multiprecision::gcd(abs(u), v) != 1) continue;
                    Rat cand(u, v);
                    if (poly_eval(p, cand) == 0) {
                        roots.push_back(cand);
                        p = poly_deflate(p, cand);
                        found = true;
                    }
                }
            }
        }
        if (!found) break;  // remaining roots are irrational
    }
    if (p.size() > 1) {
        roots.push_back(Rat(0));   // marker unused; residual is reported by caller
        roots.pop_back();
    }
    return roots;
}

}  // namespace

Fallible<SpectrumResult> spectrum_oracle(const IntersectionArray& arr) {
    if (!arr.kdist_ok || !arr.feasible())
        return Fallible<SpectrumResult>::failure("spectrum_oracle: infeasible array");
    const int D = arr.D;
    // chi_i = det(xI - T_i) over leading principal minors:
    //   chi_{i+1} = (x - a_i) chi_i - b_{i-1} c_i chi_{i-1}
    Poly prev{Rat(1)};            // chi_0
    Poly cur{-Rat(0), Rat(1)};    // chi_1 = x - a_0 with a_0 = 0
    for (int i = 1; i <= D; ++i) {
        Poly x_minus_a{-arr.a(i), Rat(1)};
        Poly t = poly_mul(x_minus_a, cur);
        Poly corr = poly_mul(Poly{arr.b(i - 1) * arr.c(i)}, prev);
        Poly next = poly_sub(t, corr);
        prev = std::move(cur);
        cur = std::move(next);
    }

    Poly remaining = cur;
    std::vector<Rat> roots = rational_roots(cur);
    for (const Rat& r : roots) remaining = poly_deflate(remaining, r);

    SpectrumResult sr;
    std::sort(roots.begin(), roots.end(), std::greater<Rat>());
    for (const Rat& r : roots) {
        auto m = multiplicity(arr, r);
        sr.eigs.emplace_back(r, m.ok() ? *m : Rat(-1));
    }
    if (remaining.size() > 1)
        sr.residual = "non-rational roots of p(x) remain, p = " + poly_str(remaining);
    return Fallible<SpectrumResult>::success(std::move(sr));
}

AdjacencySpectrumCheck verify_adjacency_spectrum(const Graph& g, const std::vector<Rat>& thetas,
                                                 const std::vector<Rat>& mults) {
    AdjacencySpectrumCheck out;
    const int n = g.n();
    const size_t t = thetas.size();
    if (t == 0 || mults.size() != t) {
        out.detail = "need matching nonempty eigenvalue/multiplicity lists";
        return out;
    }
    std::vector<long> th;
    for (const Rat& x : thetas) {
        if (!is_integer(x)) {
            out.detail = "non-integer eigenvalue " + rat_str(x) + " not supported";
            return out;
        }
        th.push_back(static_cast<long>(to_int(x)));
    }
    // entry magnitudes are bounded by the product of row sums k + |theta|
    Int magnitude = 1;
    long k = n ? g.degree(0) : 0;
    for (long v : th) magnitude *= Int(k + std::abs(v));
    if (n > 600 || magnitude > Int("4000000000000000000")) {
        out.detail = "graph too large for exact integer verification";
        return out;
    }

    using Mat = std::vector<std::vector<long long>>;
    auto mat_mul = [&](const Mat& A, const Mat& B) {
        Mat C(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                long long a = A[static_cast<size_t>(i)][static_cast<size_t>(l)];
                if (!a) continue;
                const auto& Bl = B[static_cast<size_t>(l)];
                auto& Ci = C[static_cast<size_t>(i)];
                for (int j = 0; j < n; ++j) Ci[static_cast<size_t>(j)] += a * Bl[static_cast<size_t>(j)];
            }
        return C;
    };
    auto factor = [&](long theta) {
        Mat M(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) {
            g.row(i).for_each([&](int j) { M[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1; });
            M[static_cast<size_t>(i)][static_cast<size_t>(i)] -= theta;
        }
        return M;
    };

    // prefix[i] = (A - th_0) ... (A - th_{i-1}); suffix[i] = (A - th_i) ... (A - th_{t-1})
    std::vector<Mat> prefix(t + 1), suffix(t + 1);
    prefix[0] = Mat();  // identity stand-in handled below
    for (size_t i = 0; i < t; ++i) {
        Mat f = factor(th[i]);
        prefix[i + 1] = (i == 0) ? f : mat_mul(prefix[i], f);
    }
    for (size_t i = t; i-- > 0;) {
        Mat f = factor(th[i]);
        suffix[i] = (i + 1 == t) ? f : mat_mul(f, suffix[i + 1]);
    }

    // minimal polynomial annihilates A exactly when the spectrum is within thetas
    for (const auto& row : prefix[t])
        for (long long v : row)
            if (v != 0) {
                out.detail = "prod (A - theta_i I) is nonzero: extra eigenvalue present";
                return out;
            }

    Rat total = 0;
    for (size_t i = 0; i < t; ++i) {
        // tr(prefix_i * suffix_{i+1}) without forming the product
        Int tr = 0;
        if (i == 0) {
            for (int d = 0; d < n; ++d)
                tr += suffix[1].empty() ? Int(1)
                                        : Int(suffix[1][static_cast<size_t>(d)][static_cast<size_t>(d)]);
            if (t == 1)
                tr = n;  // empty product is the identity
        } else if (i + 1 == t) {
            for (int d = 0; d < n; ++d)
                tr += Int(prefix[i][static_cast<size_t>(d)][static_cast<size_t>(d)]);
        } else {
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    tr += Int(prefix[i][static_cast<size_t>(r)][static_cast<size_t>(c)]) *
                          Int(suffix[i + 1][static_cast<size_t>(c)][static_cast<size_t>(r)]);
        }
        Int denom = 1;
        for (size_t j = 0; j < t; ++j)
            if (j != i) denom *= Int(th[i] - th[j]);
        Rat m = Rat(tr) / Rat(denom);
        out.multiplicities.push_back(m);
        if (m != mults[i]) {
            out.detail = "multiplicity of eigenvalue " + std::to_string(th[i]) + " is " +
                         rat_str(m) + ", expected " + rat_str(mults[i]);
            return out;
        }
        if (m < 1 || !is_integer(m)) {
            out.detail = "eigenvalue " + std::to_string(th[i]) + " has non-positive multiplicity";
            return out;
        }
        total += m;
    }
    if (total != n) {
        out.detail = "multiplicities sum to " + rat_str(total) + ", not n = " + std::to_string(n);
        return out;
    }
    out.ok = true;
    out.detail = "spectrum verified, multiplicities sum to n";
    return out;
}

}  // namespace drg
