#pragma once

// Desk-scale constructors for the classical families, each paired with the
// parameter tuple its intersection array must reproduce. These graphs are
// the ground truth the closed-form machinery is tested against.

#include <string>
#include <vector>

#include "drg/graph.hpp"
#include "drg/params.hpp"

namespace drg {

enum class Family { Hamming, Johnson, Grassmann, BilinearForms, HalvedCube, Gosset };

std::string family_str(Family f);

struct FamilyInstance {
    Family family;
    std::vector<long> args;
    Graph graph;
    ClassicalParams expected_params;
};

inline constexpr long kDefaultVertexCap = 100000;

/// Words of length D over a q-letter alphabet, adjacent at Hamming distance 1.
Fallible<FamilyInstance> build_hamming(int D, long q, long cap = kDefaultVertexCap);

/// D-subsets of an n-set, adjacent when the intersection has D-1 elements.
Fallible<FamilyInstance> build_johnson(int n, int D, long cap = kDefaultVertexCap);

/// D-dimensional subspaces of F_q^n (q prime), adjacent when the
/// intersection has dimension D-1. Canonical representatives are reduced
/// row-echelon forms.
Fallible<FamilyInstance> build_grassmann(long q, int n, int D, long cap = kDefaultVertexCap);

/// d x e matrices over F_q (q prime), adjacent when the difference has rank 1.
Fallible<FamilyInstance> build_bilinear_forms(long q, int d, int e, long cap = kDefaultVertexCap);

/// Even-weight binary words of length n, adjacent at Hamming distance 2.
Fallible<FamilyInstance> build_halved_cube(int n, long cap = kDefaultVertexCap);

/// The 56-vertex graph with intersection array {27,10,1;1,10,27}, built from
/// two copies of the 28 unordered pairs of an 8-set (intersecting pairs
/// adjacent within a copy, disjoint pairs adjacent across). The constructor
/// verifies the array and fails if the model does not realize it.
Fallible<FamilyInstance> build_gosset();

/// Build by family name ("hamming", "johnson", "grassmann", "bilinear",
/// "halved-cube", "gosset") with positional integer args.
Fallible<FamilyInstance> build_family(const std::string& name, const std::vector<long>& args,
                                      long cap = kDefaultVertexCap);

struct CatalogEntry {
    std::string name;
    ClassicalParams p;
};

/// Parameter tuples of known families (including dual polar and twisted
/// Grassmann rows, which are not constructed here) at desk scale, D >= 3.
/// A sound classifier never calls any of these infeasible.
std::vector<CatalogEntry> family_catalog();

}  // namespace drg
