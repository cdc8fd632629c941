#pragma once
/// Internals shared between the state-sum evaluator and its fast paths.
#include <map>

#include "statesum/labelling.hpp"
#include "statesum/statesum.hpp"

namespace statesum::detail {

/// Local labels of one facet, read off the global edge/triangle labellings.
inline SimplexLabels facet_labels(const ComplexTables::FacetRef& f,
                                  const std::vector<int>& g, const std::vector<int>& h) {
    SimplexLabels L;
    for (int i = 0; i < 10; ++i) {
        L.g[i] = g[f.e[i]];
        L.h[i] = h[f.t[i]];
    }
    return L;
}

/// Sum of signed simplex exponents over all facets, reduced mod m.
long total_exponent(const SemiWeakStructure& S, const ComplexTables& C,
                    const std::vector<int>& g, const std::vector<int>& h);

/// The (#G)^(-v0) (#H)^(v0-v1) normalization factor.
mpq_class normalization_factor(const SemiWeakStructure& S, const ComplexTables& C);

StateSumResult z_brute(const SemiWeakStructure& S, const ComplexTables& C,
                       const ZOptions& opt);
StateSumResult z_linear(const SemiWeakStructure& S, const ComplexTables& C,
                        const ZOptions& opt);
StateSumResult z_quadratic(const SemiWeakStructure& S, const ComplexTables& C,
                           const ZOptions& opt);
StateSumResult z_gray(const SemiWeakStructure& S, const ComplexTables& C,
                      const ZOptions& opt);

/// Gray and quadratic require cyclic H with modulus equal to its order.
bool gray_applicable(const SemiWeakStructure& S);
bool quadratic_applicable(const SemiWeakStructure& S);

}  // namespace statesum::detail
