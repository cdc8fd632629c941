#pragma once
/// Block-matrix model of the 2-category N(G, H, R): group-rig valued
/// 1-morphism matrices and cyclotomic 2-morphism matrices.  This module is a
/// test surface for the compositional laws; the state sum never runs it.
#include <vector>

#include "statesum/cyclotomic.hpp"
#include "statesum/groups.hpp"

namespace statesum {

/// An element of the group rig N(H): a formal sum of H-elements with
/// non-negative integer coefficients.
struct RigElement {
    std::vector<long> counts;  ///< coefficient per H-label

    static RigElement zero(int hn) { return {std::vector<long>(hn, 0)}; }
    /// The single group element h with coefficient 1.
    static RigElement of(int hn, int h) {
        RigElement r = zero(hn);
        r.counts[h] = 1;
        return r;
    }
    long deg() const;
    RigElement operator+(const RigElement& o) const;
    /// Rig product: convolution along the H-addition.
    RigElement mul(const RigElement& o, const FiniteAbelianGroup& H) const;
    bool operator==(const RigElement& o) const { return counts == o.counts; }
};

/// A 1-morphism in an End-category of the object g: a matrix over N(H).
/// (General objects are formal N(G)-sums; their morphisms are block-diagonal
/// with one such matrix per group element, so single-g matrices carry all of
/// the compositional content.)
struct OneMorphismMatrix {
    FiniteAbelianGroup H;
    int g = 0;  ///< the underlying object label
    int rows = 0, cols = 0;
    std::vector<RigElement> e;  ///< row-major, size rows*cols

    static OneMorphismMatrix make(const FiniteAbelianGroup& H, int g, int rows, int cols);
    static OneMorphismMatrix identity(const FiniteAbelianGroup& H, int g, int n);
    RigElement& at(int r, int c) { return e[r * cols + c]; }
    const RigElement& at(int r, int c) const { return e[r * cols + c]; }
    bool operator==(const OneMorphismMatrix& o) const;
};

/// Composition by matrix multiplication over the rig.
OneMorphismMatrix compose_1(const OneMorphismMatrix& f, const OneMorphismMatrix& g);

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

/// A 2-morphism between 1-morphisms of equal shape: entry (i, j) is a
/// deg(src_ij) x deg(tgt_ij) matrix over Q(zeta_m).
struct TwoMorphismMatrix {
    OneMorphismMatrix src, tgt;
    int m = 1;
    std::vector<CycMatrix> e;  ///< row-major over the 1-morphism shape

    CycMatrix& at(int r, int c) { return e[r * src.cols + c]; }
    const CycMatrix& at(int r, int c) const { return e[r * src.cols + c]; }
    /// Throws std::invalid_argument when an entry shape is off.
    void validate() const;
    bool operator==(const TwoMorphismMatrix& o) const;
};

/// The identity 2-morphism of f over Q(zeta_m).
TwoMorphismMatrix two_identity(const OneMorphismMatrix& f, int m);

/// Vertical composite: entrywise matrix product (src of a, tgt of b).
TwoMorphismMatrix vcompose_2(const TwoMorphismMatrix& a, const TwoMorphismMatrix& b);
/// Horizontal composite along compose_1: (a o b)^i_j = direct sum over k of
/// a^i_k tensor b^k_j.
TwoMorphismMatrix hcompose_2(const TwoMorphismMatrix& a, const TwoMorphismMatrix& b);
/// Entrywise conjugate transpose; swaps source and target.
TwoMorphismMatrix dual_2(const TwoMorphismMatrix& a);

/// The permutation matrix interchanging the two tensor factors
/// C^p tensor C^q -> C^q tensor C^p.
CycMatrix swap_matrix(int p, int q, int m);
/// The tensorator on 1x1 1-morphisms f, g: the 2-morphism f*g => g*f whose
/// single entry is the factor-interchange permutation.
TwoMorphismMatrix tensorator_matrix(const OneMorphismMatrix& f,
                                    const OneMorphismMatrix& g, int m);

}  // namespace statesum
