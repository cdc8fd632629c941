#pragma once
/// Semi-weak monoidal 2-category structure data on N(G,H,R): the seven
/// structural maps as dense tables, builders for the standard example
/// families, and the exhaustive coherence verifier.
///
/// All root-of-unity values are stored as exponents of zeta_m (integers mod m);
/// they are converted to Cyclotomic only when a state sum is rendered.
#include <optional>
#include <string>
#include <vector>

#include "statesum/groups.hpp"

namespace statesum {

struct SemiWeakStructure {
    FiniteGroup G;
    FiniteAbelianGroup H;
    long m = 1;  ///< root order: all unit values lie in mu_m

    // Dense tables, indexed in display order of the subscripts.
    std::vector<int> alpha0;   ///< G^3 -> H element
    std::vector<long> pi;      ///< G^4 -> exponent mod m
    std::vector<long> alpha1;  ///< H^3 -> exponent mod m
    std::vector<long> tau;     ///< H^2 -> exponent mod m
    std::vector<long> iota1;   ///< H x G x G -> exponent mod m
    std::vector<long> iota2;   ///< G x H x G -> exponent mod m
    std::vector<long> iota3;   ///< G x G x H -> exponent mod m

    std::string name;  ///< human-readable tag used in reports

    /// Allocate all tables with neutral values for the given (G, H, m).
    static SemiWeakStructure blank(FiniteGroup G, FiniteAbelianGroup H, long m);

    int alpha0_at(int g1, int g2, int g3) const {
        return alpha0[(g1 * G.n + g2) * G.n + g3];
    }
    long pi_at(int g1, int g2, int g3, int g4) const {
        return pi[((g1 * G.n + g2) * G.n + g3) * G.n + g4];
    }
    long alpha1_at(int h1, int h2, int h3) const {
        return alpha1[(h1 * H.n + h2) * H.n + h3];
    }
    long tau_at(int h1, int h2) const { return tau[h1 * H.n + h2]; }
    long iota1_at(int h, int g1, int g2) const {
        return iota1[(h * G.n + g1) * G.n + g2];
    }
    long iota2_at(int g1, int h, int g3) const {
        return iota2[(g1 * H.n + h) * G.n + g3];
    }
    long iota3_at(int g1, int g2, int h) const {
        return iota3[(g1 * G.n + g2) * H.n + h];
    }

    int& alpha0_ref(int g1, int g2, int g3) {
        return alpha0[(g1 * G.n + g2) * G.n + g3];
    }
    long& pi_ref(int g1, int g2, int g3, int g4) {
        return pi[((g1 * G.n + g2) * G.n + g3) * G.n + g4];
    }
    long& alpha1_ref(int h1, int h2, int h3) {
        return alpha1[(h1 * H.n + h2) * H.n + h3];
    }
    long& tau_ref(int h1, int h2) { return tau[h1 * H.n + h2]; }
    long& iota1_ref(int h, int g1, int g2) { return iota1[(h * G.n + g1) * G.n + g2]; }
    long& iota2_ref(int g1, int h, int g3) { return iota2[(g1 * H.n + h) * G.n + g3]; }
    long& iota3_ref(int g1, int g2, int h) { return iota3[(g1 * G.n + g2) * H.n + h]; }

    bool alpha1_is_trivial() const;
    /// Nullopt when every map is neutral on tuples containing an identity;
    /// otherwise a description of the first offending entry.
    std::optional<std::string> check_normalized() const;
};

/// The named coherence identities of the structure definition, tagged by the
/// shape of the product cell they come from.
enum class IdentityName {
    OBJ4,        ///< o(x)o(x)o(x)o : 3-cocycle condition on alpha0
    MOR4,        ///< ->->->->      : 3-cocycle condition on alpha1
    HEX,         ///< o(x)o(x)o     : hexagon relations for tau
    PENT5,       ///< five objects  : pentagonator coherence for pi
    I1_COCYCLE,  ///< ->(x)o(x)o(x)o
    I2_RIGHT,    ///< o(x)->(x)o(x)o
    I2_LEFT,     ///< o(x)o(x)->(x)o
    I3_COCYCLE,  ///< o(x)o(x)o(x)->
    I1_MULT,     ///< ->->(x)o(x)o
    I2_MULT,     ///< o(x)->->(x)o
    I3_MULT,     ///< o(x)o(x)->->
};

const std::vector<IdentityName>& all_identities();
std::string identity_name(IdentityName id);

struct IdentityCheck {
    bool ok = true;
    std::string counterexample;  ///< empty when ok
};

/// Exhaustively checks one coherence identity over all argument tuples.
/// The bracketed identities are evaluated as closed loops of structural moves
/// through the word engine, so the same bracket-expansion code is exercised
/// here and in the partition function.
IdentityCheck verify_identity(const SemiWeakStructure& S, IdentityName id);

struct StructureReport {
    bool normalized = true;
    std::string normalization_note;
    std::vector<std::pair<IdentityName, IdentityCheck>> identities;
    bool all_ok() const;
    std::string render() const;
};

StructureReport verify_all(const SemiWeakStructure& S);

// ---- builders -------------------------------------------------------------

SemiWeakStructure trivial_structure(FiniteGroup G, FiniteAbelianGroup H, long m);
/// G = 1, H = Z/n, tau(h1,h2) = zeta_n^(k h1 h2); requires 0 < k < n.
SemiWeakStructure br_tau(int n, int k, long m = 0);
/// G = H = Z/n, m = n^2, iota1(h,g1,g2) = zeta_{n^2}^(k h (g1+g2-[g1+g2])).
SemiWeakStructure br_iota1(int n, int k);
/// G = H = Z/n, iota2(g1,h,g3) = zeta_n^(k g1 h g3); requires 0 < k < n.
SemiWeakStructure br_iota2(int n, int k, long m = 0);
/// H = 1, pi = omega (a table G^4 -> exponents mod m).
SemiWeakStructure pentagonator_structure(FiniteGroup G, std::vector<long> omega, long m);
/// Pointwise product of the unit-valued maps (exponents added after embedding
/// into zeta_lcm); requires equal G, H and equal alpha0.
SemiWeakStructure combine(const SemiWeakStructure& a, const SemiWeakStructure& b);

// ---- file format ----------------------------------------------------------

std::string structure_to_file_string(const SemiWeakStructure& S);
SemiWeakStructure structure_from_file_string(const std::string& text);
SemiWeakStructure structure_load(const std::string& path);
/// Parse a builtin spec such as "trivial:2,2", "br-tau:3,1", "br-iota1:2,1",
/// "br-iota2:3,1", "combine:br-tau:3,1+br-tau:3,1", "file:<path>".
SemiWeakStructure structure_from_spec(const std::string& spec);

}  // namespace statesum
