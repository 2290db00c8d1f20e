#pragma once

// Closed-form parameter theory of distance-regular graphs with classical
// parameters (D, b, alpha, beta). All quantities are exact rationals.
//
// Conventions: r = [D] where [j] is the b-analogue of j; the valency is
// k = beta * r; the smallest eigenvalue for b >= 1 is -r.

#include <string>
#include <vector>

#include "drg/fallible.hpp"
#include "drg/rational.hpp"

namespace drg {

struct ClassicalParams {
    int D = 1;  // diameter, >= 1
    Rat b;      // base of the bracket
    Rat alpha;
    Rat beta;

    Rat r() const;  // [D]

    bool operator==(const ClassicalParams&) const = default;
};

/// b-analogue [j] = (b^j - 1)/(b - 1), with the b = 1 branch equal to j.
Rat bracket(int j, const Rat& b);

/// Structural problems with a tuple: for D >= 3, b must be an integer
/// other than 0 and -1, and alpha >= 0 whenever b >= 1. Empty = fine.
std::vector<std::string> validate(const ClassicalParams& p);

struct IntersectionArray {
    int D = 1;
    std::vector<Rat> b_seq;   // b_0 .. b_{D-1}
    std::vector<Rat> c_seq;   // c_1 .. c_D
    std::vector<Rat> a_seq;   // a_1 .. a_D
    Rat k;                    // = b_0
    std::vector<Rat> k_dist;  // k_0 .. k_D; truncated if some c_i = 0
    Rat n;                    // sum of k_dist; meaningful only if kdist_ok
    bool kdist_ok = false;
    std::vector<std::string> issues;  // feasibility diagnostics

    // Natural-index accessors: b(i) for 0 <= i <= D-1, c(i)/a(i) for 1 <= i <= D.
    const Rat& b(int i) const { return b_seq.at(static_cast<size_t>(i)); }
    const Rat& c(int i) const { return c_seq.at(static_cast<size_t>(i - 1)); }
    const Rat& a(int i) const { return a_seq.at(static_cast<size_t>(i - 1)); }

    /// All b_i, c_i positive and the distance distribution defined and integral.
    bool feasible() const { return issues.empty(); }
    /// b_i, c_i all positive integers.
    bool integral() const;

    std::string to_string() const;  // {b_0,...;c_1,...}
};

/// b_i = ([D]-[i])(beta - alpha[i]), c_i = [i](1 + alpha[i-1]), plus the
/// derived a_i, valency, distance distribution and vertex count.
/// Non-feasibility is reported through `issues`, never thrown.
IntersectionArray intersection_array(const ClassicalParams& p);

/// theta_i = b_i/b^i - [i] for 0 <= i <= D (with b_D = 0). Requires b != 0.
Fallible<std::vector<Rat>> eigenvalues(const ClassicalParams& p);

struct StandardSequence {
    Rat theta;
    std::vector<Rat> u;  // u_0 .. u_D
};

/// Three-term recurrence c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i
/// seeded by u_0 = 1, u_1 = theta/k. Fails on b_i = 0 (infeasible array).
Fallible<StandardSequence> standard_sequence(const IntersectionArray& arr, const Rat& theta);

/// Product form of the standard sequence at theta = -r:
///   u_i = ((-1)^i / beta) * prod_{j=1}^{i-1} (1 + alpha[j]) / (beta - alpha[j]).
/// Requires b >= 2, D >= 2; rejects zero denominators naming the factor.
Fallible<StandardSequence> standard_sequence_closed_form(const ClassicalParams& p);

/// Eigenvalue multiplicity m(theta) = n / sum_i k_i u_i(theta)^2.
Fallible<Rat> multiplicity(const IntersectionArray& arr, const Rat& theta);

struct GeometricProfile {
    std::vector<Rat> phi;  // phi_0 .. phi_{D-1}, phi_j = 1 + alpha[j]
    std::vector<Rat> tau;  // tau_1 .. tau_D,     tau_j = [j]
    Rat delsarte_order;    // beta + 1
    Rat lines_per_vertex;  // r
    bool has_assemblies = false;      // alpha != 0
    Rat assemblies_per_vertex;        // beta / alpha, only when has_assemblies
    Rat assembly_order;               // alpha * r + 1, only when has_assemblies
    std::string note;
};

/// Clique-geometry constants of a tuple (requires b >= 2, D >= 2).
Fallible<GeometricProfile> delsarte_clique_data(const ClassicalParams& p);

/// Every tuple (D, b, alpha, beta) with integer b not in {0,-1} whose
/// closed-form array reproduces `arr` exactly. Search space: |b| <= c_2.
/// Requires an integral feasible array with D >= 2. Empty = not classical.
std::vector<ClassicalParams> recognize_classical(const IntersectionArray& arr);

}  // namespace drg
