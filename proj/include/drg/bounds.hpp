#pragma once

// Inequalities, divisibility conditions and the case analysis for
// classical-parameter tuples. Every check is decided by exact rational
// comparison; there is no tolerance anywhere in this module.

#include <set>
#include <string>
#include <vector>

#include "drg/params.hpp"

namespace drg {

enum class Relation { Less, LessEq, Greater, GreaterEq, Divides, Integer };

std::string relation_str(Relation r);
bool eval_relation(const Rat& lhs, Relation rel, const Rat& rhs);

struct BoundCheck {
    std::string name;
    Rat lhs;
    Rat rhs;
    Relation relation = Relation::LessEq;
    bool holds = false;
    std::string note;
};

BoundCheck make_check(std::string name, const Rat& lhs, Relation rel, const Rat& rhs,
                      std::string note = "");

/// Claw bound: holds iff (s+1)(a1+1) - k > (c2-1) C(s+1,2); then the graph
/// has no induced (s+1)-claw.
BoundCheck claw_bound(const Rat& k, const Rat& a1, const Rat& c2, long s);

struct MetschConditions {
    BoundCheck claw;          // same inequality as claw_bound
    BoundCheck local_growth;  // a1 + 1 > (c2-1)(2s-1)
    Rat line_threshold;       // a1 + 2 - (c2-1)(s-1)
};

/// Line-construction conditions: both checks holding makes the graph the
/// point graph of a partial linear space whose lines are the maximal
/// cliques with at least `line_threshold` vertices, at most s per vertex.
MetschConditions metsch_conditions(const Rat& k, const Rat& a1, const Rat& c2, long s);

/// Requirements on (c, s) for the strengthened partial-linear-space
/// property of a tuple: growth of a1, c <= c2, line-size floor, s >= r.
std::vector<BoundCheck> spls_conditions(const ClassicalParams& p, long c, long s);

struct SigmaBound {
    Int sigma;         // smallest admissible line count per vertex
    BoundCheck check;  // sigma(a1+1) - k <= (c2-1) C(sigma,2) at that sigma
};

/// Smallest integer sigma >= r satisfying the clique-cover counting
/// inequality; any s for which the SPLS(s) property can hold is >= sigma.
SigmaBound sigma_lower_bound(const ClassicalParams& p);

/// beta >= (1/3)(8 alpha b + 8 b + 5 alpha) r forces the SPLS(floor(4r/3))
/// property (and integrality of alpha).
BoundCheck thm_spls_sufficient(const ClassicalParams& p);

/// The three strict lower bounds on beta which, together with SPLS(s),
/// force the graph to be geometric.
std::vector<BoundCheck> thm_geometric_conditions(const ClassicalParams& p, long s);

/// beta >= max{ 2(b+2)^2(alpha b + b + alpha) r/(2b+3),
///              2(b+2)((b+1)(b^2+b+2)-3) r/(2b+3) } forces geometric.
BoundCheck thm_betabound(const ClassicalParams& p);

/// The two algebraically equal renderings of the first max-argument above;
/// pinned equal by a unit test to guard against transcription drift.
Rat betabound_arg1_statement_form(const ClassicalParams& p);  // (2b+4)/(2b+3) r (b+2)(ab+b+a)
Rat betabound_arg1_canonical(const ClassicalParams& p);       // 2(b+2)^2(ab+b+a) r/(2b+3)

/// alpha = 0 only: beta < 2(b+2)(b^3+2b^2+3b-1) r/(2b+3) must hold;
/// a violation means no such graph exists.
Fallible<BoundCheck> corollary_alpha_zero(const ClassicalParams& p);

/// alpha in {b-1, b} only. Violation forces a bilinear forms graph
/// (alpha = b-1) or a Grassmann graph (alpha = b).
Fallible<std::vector<BoundCheck>> metsch_legacy_bounds(const ClassicalParams& p);

/// beta > (r - alpha - 1) alpha b + alpha makes a geometric graph satisfy
/// the dual Pasch axiom. Requires b >= 2, 1 <= alpha <= b-1, D >= 3.
Fallible<BoundCheck> dual_pasch_bound(const ClassicalParams& p);

/// Necessary conditions for the grid-local case: b >= 3, alpha integral in
/// [1, b-2], (alpha+1) | b(b+1), beta >= alpha r, beta/alpha integral.
std::vector<BoundCheck> item8_conditions(const ClassicalParams& p);

enum class CaseTag {
    Johnson,
    HammingOrDoob,
    HalvedCube,
    Gosset,
    GrassmannForced,
    BilinearFormsForced,
    Item7Region,
    Item8Candidate,
    Infeasible,
    OutsideScope_bNegative,
};

std::string tag_str(CaseTag t);

struct ClassificationOutcome {
    std::set<CaseTag> tags;
    std::vector<BoundCheck> evidence;
    std::vector<std::string> notes;

    bool has(CaseTag t) const { return tags.count(t) > 0; }
};

/// Case analysis over (D, b, alpha, beta), D >= 3. Every branch decision
/// appends the bound checks that drove it.
ClassificationOutcome classify(const ClassicalParams& p);

struct ScanRanges {
    int D_lo = 3, D_hi = 3;
    long b_lo = 2, b_hi = 2;
    std::vector<Rat> alphas;
    Rat beta_lo = 1, beta_hi = 1, beta_step = 1;
};

struct ScanRow {
    ClassicalParams p;
    ClassificationOutcome outcome;
};

/// One row per tuple, ordered lexicographically in (D, b, alpha, beta).
std::vector<ScanRow> scan(const ScanRanges& ranges);

}  // namespace drg
