#pragma once
/// Smith normal form over Z and linear solving over Z/n, the workhorses for
/// simplicial homology and for the face-labelling systems.
#include <gmpxx.h>

#include <optional>
#include <vector>

namespace statesum {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithDecomposition {
    IntMatrix U, D, V;
    std::vector<mpz_class> diagonal() const;
    int rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

IntMatrix identity_matrix(int n);
IntMatrix matmul(const IntMatrix& A, const IntMatrix& B);
/// |det| for a square integer matrix (fraction-free Gauss-Bareiss).
mpz_class abs_det(IntMatrix A);

/// Solution of A x = b (mod n) over Z/n.
/// The kernel is returned as independent generators: the solution set is
/// { particular + sum_i c_i * gen_i : 0 <= c_i < order_i } with each
/// combination distinct, so the solution count is the product of the orders.
struct ModSolution {
    std::vector<long> particular;              ///< size = #columns, entries in [0, n)
    std::vector<std::vector<long>> kernel;     ///< generators (each size = #columns)
    std::vector<long> orders;                  ///< orders of the generators
    mpz_class count() const;
};

/// Solve A x = b (mod n); A is rows x cols with small integer entries.
std::optional<ModSolution> solve_mod(const std::vector<std::vector<long>>& A,
                                     const std::vector<long>& b, long n);

}  // namespace statesum
