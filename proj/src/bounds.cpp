#include "drg/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace drg {

std::string relation_str(Relation r) {
    switch (r) {
        case Relation::Less: return "<";
        case Relation::LessEq: return "<=";
        case Relation::Greater: return ">";
        case Relation::GreaterEq: return ">=";
        case Relation::Divides: return "divides";
        case Relation::Integer: return "integer";
    }
    return "?";
}

bool eval_relation(const Rat& lhs, Relation rel, const Rat& rhs) {
    switch (rel) {
        case Relation::Less: return lhs < rhs;
        case Relation::LessEq: return lhs <= rhs;
        case Relation::Greater: return lhs > rhs;
        case Relation::GreaterEq: return lhs >= rhs;
        case Relation::Divides:
            return lhs != 0 && is_integer(lhs) && is_integer(rhs) && is_integer(rhs / lhs);
        case Relation::Integer: return is_integer(lhs);
    }
    return false;
}

BoundCheck make_check(std::string name, const Rat& lhs, Relation rel, const Rat& rhs,
                      std::string note) {
    BoundCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = rel;
    c.holds = eval_relation(lhs, rel, rhs);
    c.note = std::move(note);
    return c;
}

BoundCheck claw_bound(const Rat& k, const Rat& a1, const Rat& c2, long s) {
    if (s < 1) throw std::invalid_argument("claw_bound: s >= 1 required");
    Rat lhs = Rat(s + 1) * (a1 + 1) - k;
    Rat rhs = (c2 - 1) * Rat(s) * Rat(s + 1) / 2;
    return make_check("claw_bound", lhs, Relation::Greater, rhs,
                      "holds => no induced (s+1)-claw, s = " + std::to_string(s));
}

MetschConditions metsch_conditions(const Rat& k, const Rat& a1, const Rat& c2, long s) {
    if (s < 1) throw std::invalid_argument("metsch_conditions: s >= 1 required");
    MetschConditions mc;
    mc.claw = claw_bound(k, a1, c2, s);
    mc.local_growth = make_check("metsch_local_growth", a1 + 1, Relation::Greater,
                                 (c2 - 1) * Rat(2 * s - 1),
                                 "s = " + std::to_string(s));
    mc.line_threshold = a1 + 2 - (c2 - 1) * Rat(s - 1);
    return mc;
}

std::vector<BoundCheck> spls_conditions(const ClassicalParams& p, long c, long s) {
    if (c < 1 || s < 2) throw std::invalid_argument("spls_conditions: c >= 1 and s >= 2 required");
    IntersectionArray arr = intersection_array(p);
    const Rat a1 = arr.a(1);
    const Rat c2 = p.D >= 2 ? arr.c(2) : Rat(0);
    std::vector<BoundCheck> out;
    out.push_back(make_check("spls_a1_growth", a1, Relation::GreaterEq,
                             Rat(2 * s - 1) * Rat(c - 1)));
    out.push_back(make_check("spls_c_cap", Rat(c), Relation::LessEq, c2));
    out.push_back(make_check("spls_line_floor", a1 + 2 - Rat(c - 1) * Rat(s - 1),
                             Relation::GreaterEq, Rat(s) * Rat(c - 1) + 2));
    out.push_back(make_check("spls_s_at_least_r", Rat(s), Relation::GreaterEq, p.r()));
    return out;
}

SigmaBound sigma_lower_bound(const ClassicalParams& p) {
    if (p.b < 1) throw std::invalid_argument("sigma_lower_bound: b >= 1 required");
    IntersectionArray arr = intersection_array(p);
    const Rat a1 = arr.a(1);
    const Rat c2 = p.D >= 2 ? arr.c(2) : Rat(1);
    Int sigma = floor_rat(p.r());
    if (Rat(sigma) < p.r()) ++sigma;  // sigma >= -theta_min = r
    for (;;) {
        Rat lhs = Rat(sigma) * (a1 + 1) - arr.k;
        Rat rhs = (c2 - 1) * binom2(Rat(sigma));
        if (lhs <= rhs) {
            SigmaBound sb;
            sb.sigma = sigma;
            sb.check = make_check("sigma_lower_bound", lhs, Relation::LessEq, rhs,
                                  "sigma = " + sb.sigma.str());
            return sb;
        }
        ++sigma;
        if (sigma > floor_rat(p.r()) + 10'000'000)
            throw std::runtime_error("sigma_lower_bound: no admissible sigma in range");
    }
}

BoundCheck thm_spls_sufficient(const ClassicalParams& p) {
    Rat rhs = Rat(1, 3) * (8 * p.alpha * p.b + 8 * p.b + 5 * p.alpha) * p.r();
    return make_check("spls_sufficient", p.beta, Relation::GreaterEq, rhs,
                      "holds => SPLS(floor(4r/3)) and alpha integral in [0, b]");
}

std::vector<BoundCheck> thm_geometric_conditions(const ClassicalParams& p, long s) {
    if (p.b < 2 || p.D < 3 || s < 2)
        throw std::invalid_argument("thm_geometric_conditions: b >= 2, D >= 3, s >= 2 required");
    const Rat r = p.r(), b = p.b, a = p.alpha;
    Rat rhs1 = (b + 2) * (b + 1) * Rat(s - 1) - (b * (b + 1) + r - 1) * a;
    Rat rhs2 = ((b + 1) * (b * b + b + 1) - 2) * (Rat(s) - b) - a * (b + 1) * r +
               a * (b + 1) * (b + 1);
    Rat rhs3 = ((b + 1) * (b * b + b + 1) - 2 + b) * (Rat(s) - b) - a * (r - 1) + b * b - b;
    return {
        make_check("geometric_cond1", p.beta, Relation::Greater, rhs1),
        make_check("geometric_cond2", p.beta, Relation::Greater, rhs2),
        make_check("geometric_cond3", p.beta, Relation::Greater, rhs3),
    };
}

Rat betabound_arg1_statement_form(const ClassicalParams& p) {
    return (2 * p.b + 4) / (2 * p.b + 3) * p.r() * (p.b + 2) *
           (p.alpha * p.b + p.b + p.alpha);
}

Rat betabound_arg1_canonical(const ClassicalParams& p) {
    return 2 * (p.b + 2) * (p.b + 2) * (p.alpha * p.b + p.b + p.alpha) * p.r() /
           (2 * p.b + 3);
}

static Rat betabound_arg2(const ClassicalParams& p) {
    return 2 * (p.b + 2) * ((p.b + 1) * (p.b * p.b + p.b + 2) - 3) * p.r() / (2 * p.b + 3);
}

BoundCheck thm_betabound(const ClassicalParams& p) {
    Rat rhs = std::max(betabound_arg1_canonical(p), betabound_arg2(p));
    return make_check("betabound_geometric", p.beta, Relation::GreaterEq, rhs,
                      "holds => geometric");
}

Fallible<BoundCheck> corollary_alpha_zero(const ClassicalParams& p) {
    if (p.b < 2 || p.alpha != 0 || p.D < 3)
        return Fallible<BoundCheck>::failure(
            "corollary_alpha_zero requires b >= 2, alpha = 0, D >= 3");
    Rat rhs = 2 * (p.b + 2) / (2 * p.b + 3) *
              (p.b * p.b * p.b + 2 * p.b * p.b + 3 * p.b - 1) * p.r();
    return Fallible<BoundCheck>::success(make_check(
        "alpha_zero_beta_cap", p.beta, Relation::Less, rhs, "violation => infeasible"));
}

Fallible<std::vector<BoundCheck>> metsch_legacy_bounds(const ClassicalParams& p) {
    if (p.b < 2)
        return Fallible<std::vector<BoundCheck>>::failure("metsch_legacy_bounds: b >= 2 required");
    std::vector<BoundCheck> out;
    if (p.alpha == p.b - 1) {
        Rat rhs = Rat(1) / (2 * p.b - 1) *
                  (2 * pow_rat(p.b, 4) + 2 * pow_rat(p.b, 3) + 2 * p.b * p.b + p.b - 1) * p.r();
        out.push_back(make_check("legacy_alpha_bminus1", p.beta, Relation::Less, rhs,
                                 "violation => bilinear forms graph"));
    } else if (p.alpha == p.b) {
        Rat rhs = Rat(8, 3) * (p.b * p.b + 2 * p.b) * p.r();
        out.push_back(make_check("legacy_alpha_b", p.beta, Relation::Less, rhs,
                                 "violation => Grassmann graph"));
    } else {
        return Fallible<std::vector<BoundCheck>>::failure(
            "metsch_legacy_bounds: alpha must be b-1 or b");
    }
    return Fallible<std::vector<BoundCheck>>::success(std::move(out));
}

Fallible<BoundCheck> dual_pasch_bound(const ClassicalParams& p) {
    if (p.b < 2 || p.D < 3 || p.alpha < 1 || p.alpha > p.b - 1)
        return Fallible<BoundCheck>::failure(
            "dual_pasch_bound requires b >= 2, 1 <= alpha <= b-1, D >= 3");
    Rat rhs = (p.r() - p.alpha - 1) * p.alpha * p.b + p.alpha;
    return Fallible<BoundCheck>::success(make_check("dual_pasch_bound", p.beta,
                                                    Relation::Greater, rhs,
                                                    "holds => dual Pasch axiom"));
}

std::vector<BoundCheck> item8_conditions(const ClassicalParams& p) {
    if (p.b < 2) throw std::invalid_argument("item8_conditions: b >= 2 required");
    std::vector<BoundCheck> out;
    out.push_back(make_check("item8_b_min", p.b, Relation::GreaterEq, Rat(3)));
    out.push_back(make_check("item8_alpha_integer", p.alpha, Relation::Integer, Rat(0)));
    BoundCheck range = make_check("item8_alpha_range", p.alpha, Relation::GreaterEq, Rat(1));
    range.holds = range.holds && p.alpha <= p.b - 2;
    range.note = "1 <= alpha <= b-2";
    out.push_back(range);
    out.push_back(make_check("item8_divisibility", p.alpha + 1, Relation::Divides,
                             p.b * (p.b + 1)));
    out.push_back(make_check("item8_beta_min", p.beta, Relation::GreaterEq, p.alpha * p.r(),
                             "assemblies fit below the clique bound"));
    BoundCheck apv = make_check("item8_assemblies_per_vertex",
                                p.alpha == 0 ? Rat(0) : p.beta / p.alpha,
                                Relation::Integer, Rat(0), "beta/alpha assemblies per vertex");
    if (p.alpha == 0) apv.holds = false;
    out.push_back(apv);
    return out;
}

std::string tag_str(CaseTag t) {
    switch (t) {
        case CaseTag::Johnson: return "Johnson";
        case CaseTag::HammingOrDoob: return "HammingOrDoob";
        case CaseTag::HalvedCube: return "HalvedCube";
        case CaseTag::Gosset: return "Gosset";
        case CaseTag::GrassmannForced: return "GrassmannForced";
        case CaseTag::BilinearFormsForced: return "BilinearFormsForced";
        case CaseTag::Item7Region: return "Item7Region";
        case CaseTag::Item8Candidate: return "Item8Candidate";
        case CaseTag::Infeasible: return "Infeasible";
        case CaseTag::OutsideScope_bNegative: return "OutsideScope_bNegative";
    }
    return "?";
}

ClassificationOutcome classify(const ClassicalParams& p) {
    if (p.D < 3) throw std::invalid_argument("classify: D >= 3 required");
    ClassificationOutcome out;

    BoundCheck b_int = make_check("b_integer", p.b, Relation::Integer, Rat(0),
                                  "b must be an integer, b not in {0, -1}");
    out.evidence.push_back(b_int);
    if (!b_int.holds || p.b == 0 || p.b == -1) {
        out.tags.insert(CaseTag::Infeasible);
        out.notes.push_back("no tuple with this b admits a graph");
        return out;
    }
    if (p.b <= -2) {
        out.tags.insert(CaseTag::OutsideScope_bNegative);
        out.notes.push_back("b <= -2 regime is outside this classification");
        return out;
    }

    // b >= 1 from here on
    BoundCheck a_nonneg = make_check("alpha_nonnegative", p.alpha, Relation::GreaterEq, Rat(0));
    out.evidence.push_back(a_nonneg);
    if (!a_nonneg.holds) {
        out.tags.insert(CaseTag::Infeasible);
        return out;
    }

    // positivity of the intersection numbers is required for a graph of
    // diameter D to exist at all; integrality is reported separately by the
    // parameter computations and does not enter the case analysis
    IntersectionArray arr = intersection_array(p);
    bool positive = true;
    for (const Rat& v : arr.b_seq) positive = positive && v > 0;
    for (const Rat& v : arr.c_seq) positive = positive && v > 0;
    for (const Rat& v : arr.a_seq) positive = positive && v >= 0;
    if (!positive) {
        out.tags.insert(CaseTag::Infeasible);
        out.notes.push_back("intersection array has non-positive entries");
        for (const std::string& s : arr.issues) out.notes.push_back(s);
        return out;
    }

    if (p.b == 1) {
        if (p.alpha == 0) {
            out.tags.insert(CaseTag::HammingOrDoob);
        } else if (p.alpha == 1) {
            out.tags.insert(CaseTag::Johnson);
        } else if (p.alpha == 2) {
            out.tags.insert(CaseTag::HalvedCube);
        } else if (p.alpha == 4 && p.beta == 9 && p.D == 3) {
            out.tags.insert(CaseTag::Gosset);
        } else {
            out.tags.insert(CaseTag::Infeasible);
            out.notes.push_back("no b = 1 family matches (Terwilliger's classification)");
        }
        return out;
    }

    // b >= 2
    if (p.alpha == 0) {
        auto cor = corollary_alpha_zero(p);
        out.evidence.push_back(*cor);
        out.tags.insert(cor->holds ? CaseTag::Item7Region : CaseTag::Infeasible);
        return out;
    }
    if (p.alpha == p.b - 1 || p.alpha == p.b) {
        auto legacy = metsch_legacy_bounds(p);
        for (const BoundCheck& c : (*legacy)) out.evidence.push_back(c);
        if ((*legacy)[0].holds) {
            out.tags.insert(CaseTag::Item7Region);
        } else {
            out.tags.insert(p.alpha == p.b ? CaseTag::GrassmannForced
                                           : CaseTag::BilinearFormsForced);
        }
        return out;
    }

    if (!is_integer(p.alpha)) {
        BoundCheck t3 = thm_spls_sufficient(p);
        out.evidence.push_back(t3);
        if (t3.holds) {
            out.tags.insert(CaseTag::Infeasible);
            out.notes.push_back("beta large enough to force integral alpha, but alpha is not an integer");
            return out;
        }
        // below the forcing bound the small-beta region applies
        BoundCheck item7 = make_check("item7_beta_cap", p.beta, Relation::Less,
                                      std::max(betabound_arg1_canonical(p), betabound_arg2(p)));
        out.evidence.push_back(item7);
        out.tags.insert(CaseTag::Item7Region);
        return out;
    }

    BoundCheck item7 = make_check("item7_beta_cap", p.beta, Relation::Less,
                                  std::max(betabound_arg1_canonical(p), betabound_arg2(p)));
    out.evidence.push_back(item7);
    if (item7.holds) {
        out.tags.insert(CaseTag::Item7Region);
        return out;
    }
    std::vector<BoundCheck> i8 = item8_conditions(p);
    bool all = true;
    for (const BoundCheck& c : i8) {
        out.evidence.push_back(c);
        all = all && c.holds;
    }
    out.tags.insert(all ? CaseTag::Item8Candidate : CaseTag::Infeasible);
    if (!all) out.notes.push_back("beta above the item-7 cap but the grid-local case is excluded");
    return out;
}

std::vector<ScanRow> scan(const ScanRanges& ranges) {
    if (ranges.D_lo < 3) throw std::invalid_argument("scan: D range must start at >= 3");
    if (ranges.beta_step <= 0) throw std::invalid_argument("scan: beta_step must be > 0");
    std::vector<Rat> alphas = ranges.alphas;
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    std::vector<ScanRow> rows;
    for (int D = ranges.D_lo; D <= ranges.D_hi; ++D)
        for (long b = ranges.b_lo; b <= ranges.b_hi; ++b)
            for (const Rat& alpha : alphas)
                for (Rat beta = ranges.beta_lo; beta <= ranges.beta_hi;
                     beta += ranges.beta_step) {
                    ClassicalParams p{D, Rat(b), alpha, beta};
                    rows.push_back(ScanRow{p, classify(p)});
                }
    return rows;
}

}  // namespace drg
