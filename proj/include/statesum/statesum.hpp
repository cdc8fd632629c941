#pragma once
/// The per-4-simplex partition function and the normalized global state sum.
#include <array>
#include <stdexcept>
#include <string>

#include "statesum/complex.hpp"
#include "statesum/cyclotomic.hpp"
#include "statesum/structure.hpp"

namespace statesum {

/// Labels on one 4-simplex (i<j<k<l<m): g on the ten edges and h on the ten
/// triangles, both in lexicographic order of the vertex subsets:
///   edges      ij ik il im jk jl jm kl km lm   (indices 0..9)
///   triangles  ijk ijl ijm ikl ikm ilm jkl jkm jlm klm   (indices 0..9)
struct SimplexLabels {
    std::array<int, 10> g{};
    std::array<int, 10> h{};
};

namespace edge {
enum { ij, ik, il, im, jk, jl, jm, kl, km, lm };
}
namespace tri {
enum { ijk, ijl, ijm, ikl, ikm, ilm, jkl, jkm, jlm, klm };
}

/// zeta_m exponent of Z((ijklm)) for an admissible labelling.  When alpha1 is
/// trivial this is the product of the five displayed factors; otherwise the
/// full bracket expansion is carried out by the word engine.
long z_simplex_exponent(const SemiWeakStructure& S, const SimplexLabels& L);

/// The same exponent computed unconditionally through the word engine (the
/// slow path), exported for cross-validation in the tests.
long z_simplex_exponent_via_engine(const SemiWeakStructure& S, const SimplexLabels& L);

enum class Method { Auto, Brute, Linear, Quadratic, Gray };
Method method_from_string(const std::string& s);
std::string method_name(Method m);

struct StateSumResult {
    Cyclotomic value;          ///< normalized exact value
    mpq_class normalization;   ///< the (#G)^(-v0) (#H)^(v0-v1) factor applied
    std::string method;        ///< "brute" | "linear" | "quadratic" | "gray"
    mpz_class labellings = 0;  ///< number of admissible labellings
    std::string render(bool machine = false) const;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MethodUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZOptions {
    Method method = Method::Auto;
    mpz_class budget = mpz_class(1) << 33;  ///< max labellings for brute
    int threads = 0;                        ///< 0 = library default
    bool serial_reference = false;          ///< force the serial kernels
};

StateSumResult z_total(const SemiWeakStructure& S, const OrderedTriangulation& T,
                       const ZOptions& opt = {});

struct PachnerResult {
    bool ok = true;
    std::string counterexample;
    long long tuples_checked = 0;
    long long tuples_skipped = 0;  ///< determining tuples with no admissible extension
};

/// Exhaustive oracle for one Pachner move identity on the boundary of the
/// 5-simplex (012345); move is "3-3", "2-4" or "1-5".
PachnerResult pachner_oracle(const SemiWeakStructure& S, const std::string& move,
                             int threads = 0, bool serial_reference = false);

// ---- fast-path applicability (exposed for auto selection and tests) --------

/// True when tau and alpha1 are trivial and each interchanger is additive in
/// its H-slot, so the total exponent is affine-linear in the face labels.
bool exponent_is_h_linear(const SemiWeakStructure& S);
/// True when G is trivial, alpha1 is trivial, and tau is bi-additive, so the
/// total exponent is a quadratic form in the face labels.
bool exponent_is_h_quadratic(const SemiWeakStructure& S);

}  // namespace statesum
