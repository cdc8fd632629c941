#pragma once
/// Admissible labellings: flat G-labels on edges, semi-flat H-labels on
/// triangles, with exact counting and streaming enumeration.
#include <functional>
#include <optional>

#include "statesum/complex.hpp"
#include "statesum/snf.hpp"
#include "statesum/statesum.hpp"
#include "statesum/structure.hpp"

namespace statesum {

/// Face tables of a triangulation in the form the state sum consumes:
/// indexed edge/triangle/tetrahedron lists plus, per facet, the local
/// SimplexLabels index layout.
struct ComplexTables {
    std::vector<std::vector<int>> edges, tris, tets;
    std::map<std::vector<int>, int> edge_idx, tri_idx;
    /// Per facet: global indices of its 10 edges and 10 triangles, in the
    /// lexicographic local order of SimplexLabels.
    struct FacetRef {
        std::array<int, 10> e, t;
        int eps;
    };
    std::vector<FacetRef> facets;
    int v0 = 0, v1 = 0;

    explicit ComplexTables(const OrderedTriangulation& T);
};

/// Streams every flat edge-labelling (g_ik = g_jk * g_ij on each triangle
/// (i<j<k)) exactly once, depth-first in lexicographic edge order with
/// forward checking.  Stops early when the callback returns false.
void enumerate_flat_g(const ComplexTables& C, const FiniteGroup& G,
                      const std::function<bool(const std::vector<int>&)>& cb);
mpz_class count_flat_g(const ComplexTables& C, const FiniteGroup& G);

/// Cheap upper bound on count_flat_g: |G| to the number of branching edges
/// in the propagation order (no enumeration).
mpz_class flat_count_bound(const ComplexTables& C, const FiniteGroup& G);

/// Solution space of the semi-flat triangle system for one flat g-labelling,
/// solved independently per cyclic factor of H.
struct HSolutionSpace {
    std::vector<ModSolution> factors;  ///< one per cyclic factor of H
    size_t ntris = 0;
    mpz_class count() const;
    /// The H-label of each triangle for given kernel coordinates
    /// (coords[f][i] < factors[f].orders[i]).
    std::vector<int> assemble(const FiniteAbelianGroup& H,
                              const std::vector<std::vector<long>>& coords) const;
};

std::optional<HSolutionSpace> solve_h(const ComplexTables& C, const SemiWeakStructure& S,
                                      const std::vector<int>& g);

/// Total number of admissible labellings.
mpz_class count_labellings(const ComplexTables& C, const SemiWeakStructure& S);

/// Streams every admissible labelling (g per edge, h per triangle); stops
/// early when the callback returns false.  Throws BudgetExceeded when the
/// total count exceeds `budget`.
void enumerate_labellings(const ComplexTables& C, const SemiWeakStructure& S,
                          const mpz_class& budget,
                          const std::function<bool(const std::vector<int>&,
                                                   const std::vector<int>&)>& cb);

}  // namespace statesum
