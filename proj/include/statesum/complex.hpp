#pragma once
/// Ordered triangulations of closed oriented PL manifolds, presented as facet
/// lists with ascending vertex tuples.  Orientation signs are reconstructed by
/// propagation across ridges, normalising the first facet to +1.
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "statesum/snf.hpp"

namespace statesum {

struct OrderedTriangulation {
    int dim = 4;          ///< facet dimension (number of vertices per facet - 1)
    int nverts = 0;
    std::vector<std::vector<int>> facets;  ///< each ascending, size dim+1
    std::vector<int> eps;                  ///< +1 / -1 per facet, set by validate()

    /// Faces of dimension k (ascending tuples, sorted lexicographically).
    std::vector<std::vector<int>> faces(int k) const;
    /// Index lookup for faces of dimension k.
    std::map<std::vector<int>, int> face_index(int k) const;
    std::vector<long> f_vector() const;
    long euler_characteristic() const;

    /// Checks: tuples ascending and in range, every ridge in exactly two
    /// facets, facet graph connected, and a consistent orientation exists.
    /// Fills eps (first facet +1).  Throws std::runtime_error on failure.
    void validate();

    OrderedTriangulation reversed() const;
    /// Apply a permutation of vertex labels (facet tuples are re-sorted).
    OrderedTriangulation relabelled(uint64_t seed) const;

    std::string to_file_string() const;
    static OrderedTriangulation from_file_string(const std::string& text);
    static OrderedTriangulation load(const std::string& path);
};

/// d(Delta^(d+1)): the d-sphere as the boundary of a simplex.
OrderedTriangulation boundary_of_simplex(int dim);
inline OrderedTriangulation boundary_of_5simplex() { return boundary_of_simplex(4); }
/// S^4 as the boundary of the 5-dimensional cross-polytope (10 vertices, 32 facets).
OrderedTriangulation cross_polytope_s4();
/// The 9-vertex triangulation of CP^2 (bundled facet data).
OrderedTriangulation kuhnel_cp2();
/// RP^3 as the quotient of the barycentric subdivision of the 16-cell boundary
/// by the antipodal map (40 vertices, 192 tetrahedra).
OrderedTriangulation rp3_quotient();
/// M x S^1 with the layered prism ("staircase") triangulation; layers >= 3.
OrderedTriangulation product_with_circle(const OrderedTriangulation& m, int layers);

/// Integer homology groups H_0 .. H_dim as (betti, torsion list).
struct HomologyGroup {
    int betti = 0;
    std::vector<mpz_class> torsion;
    std::string describe() const;
};
std::vector<HomologyGroup> homology(const OrderedTriangulation& t);
/// Betti numbers over Z/p (fast path for large complexes).
std::vector<int> betti_mod_p(const OrderedTriangulation& t, long p);

}  // namespace statesum
