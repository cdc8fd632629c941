#include <sstream>

#include "statesum/statesum.hpp"
#include "statesum/word_engine.hpp"

namespace statesum {

Method method_from_string(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "brute") return Method::Brute;
    if (s == "linear") return Method::Linear;
    if (s == "quadratic") return Method::Quadratic;
    if (s == "gray") return Method::Gray;
    throw std::invalid_argument("unknown method: " + s);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Brute: return "brute";
        case Method::Linear: return "linear";
        case Method::Quadratic: return "quadratic";
        case Method::Gray: return "gray";
    }
    return "?";
}

long z_simplex_exponent_via_engine(const SemiWeakStructure& S, const SimplexLabels& L) {
    const auto& g = L.g;
    const auto& h = L.h;
    auto B = [&](int a, int b, int c) { return S.alpha0_at(a, b, c); };
    auto lf = [](int x) { return WordTree::leaf(x); };
    const int A1 = B(g[edge::km], g[edge::jk], g[edge::ij]);
    const int A2 = B(g[edge::lm], g[edge::kl], g[edge::ik]);
    const int A3 = B(g[edge::kl], g[edge::jk], g[edge::ij]);
    const int A4 = B(g[edge::lm], g[edge::jl], g[edge::ij]);
    const int A5 = B(g[edge::lm], g[edge::kl], g[edge::jk]);

    WordEngine e(S, {lf(h[tri::ikm]), lf(h[tri::klm]), lf(h[tri::ijk]), lf(A1)});
    // tensorator: [h_klm, h_ijk] => [h_ijk, h_klm]
    e.apply(1, {lf(h[tri::klm]), lf(h[tri::ijk])}, {lf(h[tri::ijk]), lf(h[tri::klm])},
            S.tau_at(h[tri::klm], h[tri::ijk]));
    // (iota1)^-1: [h_klm, A1] => [A1, h_klm]
    e.apply(2, {lf(h[tri::klm]), lf(A1)}, {lf(A1), lf(h[tri::klm])},
            -S.iota1_at(h[tri::klm], g[edge::jk], g[edge::ij]));
    // tetrahedron (ijkm) substituted backwards: [h_ikm, h_ijk, A1] => [h_ijm, h_jkm]
    e.apply(0, {lf(h[tri::ikm]), lf(h[tri::ijk]), lf(A1)},
            {lf(h[tri::ijm]), lf(h[tri::jkm])}, 0);
    // tetrahedron (jklm): [h_jkm, h_klm] => [h_jlm, h_jkl, A5]
    e.apply(1, {lf(h[tri::jkm]), lf(h[tri::klm])},
            {lf(h[tri::jlm]), lf(h[tri::jkl]), lf(A5)}, 0);
    // tetrahedron (ijlm): [h_ijm, h_jlm] => [h_ilm, h_ijl, A4]
    e.apply(0, {lf(h[tri::ijm]), lf(h[tri::jlm])},
            {lf(h[tri::ilm]), lf(h[tri::ijl]), lf(A4)}, 0);
    // iota2: [A4, h_jkl] => [h_jkl, A4]
    e.apply(2, {lf(A4), lf(h[tri::jkl])}, {lf(h[tri::jkl]), lf(A4)},
            S.iota2_at(g[edge::lm], h[tri::jkl], g[edge::ij]));
    // tetrahedron (ijkl): [h_ijl, h_jkl] => [h_ikl, h_ijk, A3]
    e.apply(1, {lf(h[tri::ijl]), lf(h[tri::jkl])},
            {lf(h[tri::ikl]), lf(h[tri::ijk]), lf(A3)}, 0);
    // pentagonator: [A3, A4, A5] => [A2, A1]
    e.apply(3, {lf(A3), lf(A4), lf(A5)}, {lf(A2), lf(A1)},
            S.pi_at(g[edge::lm], g[edge::kl], g[edge::jk], g[edge::ij]));
    // (iota3)^-1: [h_ijk, A2] => [A2, h_ijk]
    e.apply(2, {lf(h[tri::ijk]), lf(A2)}, {lf(A2), lf(h[tri::ijk])},
            -S.iota3_at(g[edge::lm], g[edge::kl], h[tri::ijk]));
    return e.exponent();
}

long z_simplex_exponent(const SemiWeakStructure& S, const SimplexLabels& L) {
    if (!S.alpha1_is_trivial()) return z_simplex_exponent_via_engine(S, L);
    const auto& g = L.g;
    const auto& h = L.h;
    long e = S.tau_at(h[tri::klm], h[tri::ijk]) -
             S.iota1_at(h[tri::klm], g[edge::jk], g[edge::ij]) +
             S.iota2_at(g[edge::lm], h[tri::jkl], g[edge::ij]) -
             S.iota3_at(g[edge::lm], g[edge::kl], h[tri::ijk]) +
             S.pi_at(g[edge::lm], g[edge::kl], g[edge::jk], g[edge::ij]);
    return ((e % S.m) + S.m) % S.m;
}

std::string StateSumResult::render(bool machine) const {
    std::ostringstream os;
    if (machine) {
        os << "{\"value\":\"" << value.to_string() << "\",\"approx\":\""
           << value.approx_string() << "\",\"normalization\":\""
           << normalization.get_str() << "\",\"method\":\"" << method
           << "\",\"labellings\":\"" << labellings.get_str() << "\"}";
    } else {
        os << "Z = " << value.to_string() << "  (~ " << value.approx_string() << ")\n"
           << "normalization factor: " << normalization.get_str() << "\n"
           << "method: " << method << "\n"
           << "admissible labellings: " << labellings.get_str() << "\n";
    }
    return os.str();
}

}  // namespace statesum
