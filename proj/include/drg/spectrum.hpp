#pragma once

// Independent spectral route: characteristic polynomial of the tridiagonal
// intersection matrix, exact rational root extraction, and an exact
// adjacency-matrix verification for explicitly constructed graphs.

#include <string>
#include <vector>

#include "drg/graph.hpp"
#include "drg/params.hpp"

namespace drg {

struct SpectrumResult {
    // (eigenvalue, multiplicity) pairs, eigenvalues strictly decreasing.
    // Multiplicities are the graph multiplicities n / sum k_i u_i^2.
    std::vector<std::pair<Rat, Rat>> eigs;
    // nonempty when roots remain that are not rational: holds the
    // factored-out polynomial, constant term first
    std::string residual;
};

/// Roots of det(xI - T) where T is the (D+1)x(D+1) tridiagonal matrix with
/// diagonals (c_i), (a_i), (b_i), computed in exact integer arithmetic.
Fallible<SpectrumResult> spectrum_oracle(const IntersectionArray& arr);

struct AdjacencySpectrumCheck {
    bool ok = false;
    std::string detail;  // failure reason or summary
    std::vector<Rat> multiplicities;  // as derived from the adjacency matrix
};

/// Verifies that the distinct eigenvalues of the adjacency matrix are
/// exactly `thetas` (which must be distinct integers) with the given
/// multiplicities: checks prod_i (A - theta_i I) = 0 and recovers each
/// multiplicity as tr(prod_{j != i}(A - theta_j I)) / prod_{j != i}(theta_i
/// - theta_j), all in exact integer arithmetic.
AdjacencySpectrumCheck verify_adjacency_spectrum(const Graph& g, const std::vector<Rat>& thetas,
                                                 const std::vector<Rat>& mults);

}  // namespace drg
