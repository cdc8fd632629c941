#pragma once
/// 2-equivalence of structures: witness data, the nine-condition verifier,
/// twisting a structure by witness data, and a small-case witness search.
#include <optional>
#include <string>
#include <vector>

#include "statesum/structure.hpp"

namespace statesum {

/// Witness data for a 2-equivalence between two structures on the same
/// (G, H, m): automorphisms of G, H and of the root ring (zeta -> zeta^t),
/// plus the five normalized comparison maps.
struct EquivalenceData {
    std::vector<int> autG;  ///< permutation of G, a group automorphism
    std::vector<int> autH;  ///< permutation of H, a group automorphism
    long t = 1;             ///< ring automorphism zeta_m -> zeta_m^t, gcd(t,m)=1

    std::vector<long> mu;   ///< H^2 -> exponent mod m
    std::vector<int> Phi;   ///< G^2 -> H element
    std::vector<long> phi;  ///< G^3 -> exponent mod m
    std::vector<long> psi;  ///< H x G -> exponent mod m
    std::vector<long> chi;  ///< G x H -> exponent mod m

    int gn = 1, hn = 1;

    long mu_at(int h1, int h2) const { return mu[h1 * hn + h2]; }
    int Phi_at(int g1, int g2) const { return Phi[g1 * gn + g2]; }
    long phi_at(int g1, int g2, int g3) const { return phi[(g1 * gn + g2) * gn + g3]; }
    long psi_at(int h, int g) const { return psi[h * gn + g]; }
    long chi_at(int g, int h) const { return chi[g * hn + h]; }

    long& mu_ref(int h1, int h2) { return mu[h1 * hn + h2]; }
    int& Phi_ref(int g1, int g2) { return Phi[g1 * gn + g2]; }
    long& phi_ref(int g1, int g2, int g3) { return phi[(g1 * gn + g2) * gn + g3]; }
    long& psi_ref(int h, int g) { return psi[h * gn + g]; }
    long& chi_ref(int g, int h) { return chi[g * hn + h]; }

    /// All-neutral witness (the identity 2-equivalence of S with itself).
    static EquivalenceData identity(const SemiWeakStructure& S);
    /// Nullopt when normalized (incl. automorphism and gcd sanity); otherwise
    /// a description of the offence.
    std::optional<std::string> check_valid(const SemiWeakStructure& S) const;
};

struct EquivalenceCondition {
    int condition = 0;  ///< 1..9
    bool supported = true;
    bool ok = true;
    std::string note;  ///< counterexample or unsupported reason
};

struct EquivalenceReport {
    std::vector<EquivalenceCondition> conditions;
    bool all_supported() const;
    /// True when every supported condition holds and none is unsupported.
    bool all_ok() const;
    std::string render() const;
};

/// Exhaustively checks the nine equivalence conditions between S and S2 under
/// the witness E.  Conditions 4-9 compare bracketed products; they are checked
/// in the regimes where the bracket corrections vanish (alpha1 trivial on both
/// sides and mu trivial, or G trivial) and reported as unsupported otherwise.
EquivalenceReport verify_equivalence(const SemiWeakStructure& S,
                                     const SemiWeakStructure& S2,
                                     const EquivalenceData& E);

/// The structure obtained by twisting S with E, i.e. the unique S' for which
/// E satisfies all nine conditions (each condition solved for the primed map).
SemiWeakStructure apply_equivalence(const SemiWeakStructure& S, const EquivalenceData& E);

struct EquivalenceSearch {
    std::optional<EquivalenceData> witness;
    bool exhausted = false;  ///< search space fully explored without success
    long long tried = 0;
};

/// Enumerates normalized witness maps (identity automorphisms unless `widen`)
/// and returns the first verified witness.  Distinguishes a fully explored
/// space from hitting the budget.
EquivalenceSearch search_equivalence(const SemiWeakStructure& S,
                                     const SemiWeakStructure& S2,
                                     long long budget = 1 << 20, bool widen = false);

/// File format mirroring the structure files: optional `t`, `autG`, `autH`
/// lines and map sections mu/Phi/phi/psi/chi with `args -> value` entries.
std::string equivalence_to_file_string(const EquivalenceData& E);
EquivalenceData equivalence_from_file_string(const std::string& text,
                                             const SemiWeakStructure& S);
EquivalenceData equivalence_load(const std::string& path, const SemiWeakStructure& S);

}  // namespace statesum
