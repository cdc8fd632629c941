#include "statesum/equivalence.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace statesum {

namespace {

long norm_mod(long v, long m) { return ((v % m) + m) % m; }

std::string tuple_str(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace

EquivalenceData EquivalenceData::identity(const SemiWeakStructure& S) {
    EquivalenceData E;
    E.gn = S.G.n;
    E.hn = S.H.n;
    E.autG.resize(E.gn);
    std::iota(E.autG.begin(), E.autG.end(), 0);
    E.autH.resize(E.hn);
    std::iota(E.autH.begin(), E.autH.end(), 0);
    E.t = 1;
    E.mu.assign((size_t)E.hn * E.hn, 0);
    E.Phi.assign((size_t)E.gn * E.gn, 0);
    E.phi.assign((size_t)E.gn * E.gn * E.gn, 0);
    E.psi.assign((size_t)E.hn * E.gn, 0);
    E.chi.assign((size_t)E.gn * E.hn, 0);
    return E;
}

std::optional<std::string> EquivalenceData::check_valid(const SemiWeakStructure& S) const {
    if (gn != S.G.n || hn != S.H.n) return "witness sized for a different (G, H)";
    if (std::gcd(t, S.m) != 1) return "t is not a unit mod m";
    if (autG[0] != 0) return "autG does not fix the identity";
    for (int a = 0; a < gn; ++a)
        for (int b = 0; b < gn; ++b)
            if (autG[S.G.op(a, b)] != S.G.op(autG[a], autG[b]))
                return "autG is not a homomorphism at " + tuple_str({a, b});
    if (autH[0] != 0) return "autH does not fix the identity";
    for (int a = 0; a < hn; ++a)
        for (int b = 0; b < hn; ++b)
            if (autH[S.H.add(a, b)] != S.H.add(autH[a], autH[b]))
                return "autH is not a homomorphism at " + tuple_str({a, b});
    for (int h = 0; h < hn; ++h)
        if (mu_at(h, 0) != 0 || mu_at(0, h) != 0) return "mu is not normalized";
    for (int g = 0; g < gn; ++g) {
        if (Phi_at(g, 0) != 0 || Phi_at(0, g) != 0) return "Phi is not normalized";
        for (int g2 = 0; g2 < gn; ++g2)
            if (phi_at(0, g, g2) != 0 || phi_at(g, 0, g2) != 0 || phi_at(g, g2, 0) != 0)
                return "phi is not normalized";
    }
    for (int h = 0; h < hn; ++h)
        if (psi_at(h, 0) != 0 || chi_at(0, h) != 0) return "psi/chi not normalized in G";
    for (int g = 0; g < gn; ++g)
        if (psi_at(0, g) != 0 || chi_at(g, 0) != 0) return "psi/chi not normalized in H";
    return std::nullopt;
}

namespace {

/// The right-hand sides of the nine conditions, solved for the primed map.
/// Everything lives on the same label sets, with sigma = autG, rho = autH.
struct Twist {
    const SemiWeakStructure& S;
    const EquivalenceData& E;
    long m;

    int sigma(int g) const { return E.autG[g]; }
    int rho(int h) const { return E.autH[h]; }

    int alpha0p(int g1, int g2, int g3) const {
        // condition 1, solved for alpha0' (an H-element equation)
        int v = rho(S.alpha0_at(g1, g2, g3));
        v = S.H.add(v, E.Phi_at(S.G.op(g1, g2), g3));
        v = S.H.add(v, E.Phi_at(g1, g2));
        v = S.H.sub(v, E.Phi_at(g1, S.G.op(g2, g3)));
        v = S.H.sub(v, E.Phi_at(g2, g3));
        return v;
    }
    long alpha1p(int h1, int h2, int h3) const {
        // condition 2
        return norm_mod(E.t * S.alpha1_at(h1, h2, h3) + E.mu_at(S.H.add(h1, h2), h3) +
                            E.mu_at(h1, h2) - E.mu_at(h1, S.H.add(h2, h3)) -
                            E.mu_at(h2, h3),
                        m);
    }
    long taup(int h1, int h2) const {
        // condition 3
        // condition 3: conjugation by the comparison 2-morphism, so the
        // target bracket mu(h2,h1) enters positively and the source one
        // negatively
        return norm_mod(E.t * S.tau_at(h1, h2) + E.mu_at(h2, h1) - E.mu_at(h1, h2), m);
    }
    long iota1p(int h, int g2, int g3) const {
        // condition 4
        return norm_mod(E.psi_at(h, g2) + E.psi_at(h, g3) + E.t * S.iota1_at(h, g2, g3) +
                            taup(rho(h), E.Phi_at(g2, g3)) - E.psi_at(h, S.G.op(g2, g3)),
                        m);
    }
    long iota2p(int g1, int h, int g3) const {
        // condition 5
        return norm_mod(E.t * S.iota2_at(g1, h, g3), m);
    }
    long iota3p(int g1, int g2, int h) const {
        // condition 6
        return norm_mod(E.t * S.iota3_at(g1, g2, h) + taup(E.Phi_at(g1, g2), rho(h)) +
                            E.chi_at(S.G.op(g1, g2), h) - E.chi_at(g1, h) - E.chi_at(g2, h),
                        m);
    }
    long pip(int g1, int g2, int g3, int g4) const {
        // condition 9, solved for pi'; the primed interchangers/tau that
        // appear are the ones this same twist produces.
        long v = E.t * S.pi_at(g1, g2, g3, g4);
        v += E.phi_at(S.G.op(g1, g2), g3, g4);
        v += iota1p(E.Phi_at(g1, g2), g3, g4);
        v -= taup(E.Phi_at(g1, g2), E.Phi_at(g3, g4));
        v += E.phi_at(g1, g2, S.G.op(g3, g4));
        v += iota3p(g1, g2, E.Phi_at(g3, g4));
        v += E.psi_at(rho(S.alpha0_at(g1, g2, g3)), g4);
        v -= E.phi_at(g1, g2, g3);
        v -= E.phi_at(g1, S.G.op(g2, g3), g4);
        v -= iota2p(g1, E.Phi_at(g2, g3), g4);
        v += E.chi_at(g1, S.alpha0_at(g2, g3, g4));
        v -= E.phi_at(g2, g3, g4);
        return norm_mod(v, m);
    }
};

}  // namespace

SemiWeakStructure apply_equivalence(const SemiWeakStructure& S, const EquivalenceData& E) {
    if (auto bad = E.check_valid(S))
        throw std::invalid_argument("invalid equivalence data: " + *bad);
    Twist W{S, E, S.m};
    SemiWeakStructure T = SemiWeakStructure::blank(S.G, S.H, S.m);
    T.name = S.name + " twisted";
    const int gn = S.G.n, hn = S.H.n;
    // The conditions express each primed map at the sigma/rho image of its
    // arguments, so write through the inverse permutation images.
    for (int a = 0; a < gn; ++a)
        for (int b = 0; b < gn; ++b)
            for (int c = 0; c < gn; ++c) {
                T.alpha0_ref(W.sigma(a), W.sigma(b), W.sigma(c)) = W.alpha0p(a, b, c);
                for (int d = 0; d < gn; ++d)
                    T.pi_ref(W.sigma(a), W.sigma(b), W.sigma(c), W.sigma(d)) =
                        W.pip(a, b, c, d);
            }
    for (int a = 0; a < hn; ++a)
        for (int b = 0; b < hn; ++b) {
            T.tau_ref(W.rho(a), W.rho(b)) = W.taup(a, b);
            for (int c = 0; c < hn; ++c)
                T.alpha1_ref(W.rho(a), W.rho(b), W.rho(c)) = W.alpha1p(a, b, c);
        }
    for (int h = 0; h < hn; ++h)
        for (int a = 0; a < gn; ++a)
            for (int b = 0; b < gn; ++b) {
                T.iota1_ref(W.rho(h), W.sigma(a), W.sigma(b)) = W.iota1p(h, a, b);
                T.iota2_ref(W.sigma(a), W.rho(h), W.sigma(b)) = W.iota2p(a, h, b);
                T.iota3_ref(W.sigma(a), W.sigma(b), W.rho(h)) = W.iota3p(a, b, h);
            }
    return T;
}

bool EquivalenceReport::all_supported() const {
    for (const auto& c : conditions)
        if (!c.supported) return false;
    return true;
}

bool EquivalenceReport::all_ok() const {
    for (const auto& c : conditions)
        if (!c.supported || !c.ok) return false;
    return true;
}

std::string EquivalenceReport::render() const {
    std::ostringstream os;
    for (const auto& c : conditions) {
        os << "condition " << c.condition << ": "
           << (!c.supported ? "unsupported" : c.ok ? "ok" : "FAIL");
        if (!c.note.empty()) os << " (" << c.note << ")";
        os << "\n";
    }
    return os.str();
}

EquivalenceReport verify_equivalence(const SemiWeakStructure& S,
                                     const SemiWeakStructure& S2,
                                     const EquivalenceData& E) {
    EquivalenceReport R;
    auto& conds = R.conditions;
    auto add = [&](int n) -> EquivalenceCondition& {
        conds.push_back({n, true, true, ""});
        return conds.back();
    };
    if (S.G.n != S2.G.n || S.H.n != S2.H.n || S.m != S2.m) {
        auto& c = add(0);
        c.supported = false;
        c.note = "structures share no common (G, H, m)";
        return R;
    }
    if (auto bad = E.check_valid(S)) {
        auto& c = add(0);
        c.ok = false;
        c.note = *bad;
        return R;
    }
    Twist W{S, E, S.m};
    const int gn = S.G.n, hn = S.H.n;

    auto& c1 = add(1);
    for (int a = 0; a < gn && c1.ok; ++a)
        for (int b = 0; b < gn && c1.ok; ++b)
            for (int c = 0; c < gn && c1.ok; ++c)
                if (S2.alpha0_at(W.sigma(a), W.sigma(b), W.sigma(c)) != W.alpha0p(a, b, c)) {
                    c1.ok = false;
                    c1.note = "at " + tuple_str({a, b, c});
                }
    auto& c2 = add(2);
    for (int a = 0; a < hn && c2.ok; ++a)
        for (int b = 0; b < hn && c2.ok; ++b)
            for (int c = 0; c < hn && c2.ok; ++c)
                if (norm_mod(S2.alpha1_at(W.rho(a), W.rho(b), W.rho(c)), S.m) !=
                    W.alpha1p(a, b, c)) {
                    c2.ok = false;
                    c2.note = "at " + tuple_str({a, b, c});
                }
    auto& c3 = add(3);
    for (int a = 0; a < hn && c3.ok; ++a)
        for (int b = 0; b < hn && c3.ok; ++b)
            if (norm_mod(S2.tau_at(W.rho(a), W.rho(b)), S.m) != W.taup(a, b)) {
                c3.ok = false;
                c3.note = "at " + tuple_str({a, b});
            }
    // Conditions 4-9 are equalities between bracketed products; the displayed
    // forms are literal only when the bracket corrections vanish.
    bool brackets_flat =
        (S.alpha1_is_trivial() && S2.alpha1_is_trivial() &&
         std::all_of(E.mu.begin(), E.mu.end(), [](long v) { return v == 0; })) ||
        gn == 1;
    for (int n = 4; n <= 9; ++n) {
        auto& c = add(n);
        if (!brackets_flat) {
            c.supported = false;
            c.note = "needs trivial alpha1/mu (or trivial G) for literal checking";
            continue;
        }
        switch (n) {
            case 4:
                for (int h = 0; h < hn && c.ok; ++h)
                    for (int a = 0; a < gn && c.ok; ++a)
                        for (int b = 0; b < gn && c.ok; ++b)
                            if (norm_mod(S2.iota1_at(W.rho(h), W.sigma(a), W.sigma(b)),
                                         S.m) != W.iota1p(h, a, b)) {
                                c.ok = false;
                                c.note = "at " + tuple_str({h, a, b});
                            }
                break;
            case 5:
                for (int h = 0; h < hn && c.ok; ++h)
                    for (int a = 0; a < gn && c.ok; ++a)
                        for (int b = 0; b < gn && c.ok; ++b)
                            if (norm_mod(S2.iota2_at(W.sigma(a), W.rho(h), W.sigma(b)),
                                         S.m) != W.iota2p(a, h, b)) {
                                c.ok = false;
                                c.note = "at " + tuple_str({a, h, b});
                            }
                break;
            case 6:
                for (int h = 0; h < hn && c.ok; ++h)
                    for (int a = 0; a < gn && c.ok; ++a)
                        for (int b = 0; b < gn && c.ok; ++b)
                            if (norm_mod(S2.iota3_at(W.sigma(a), W.sigma(b), W.rho(h)),
                                         S.m) != W.iota3p(a, b, h)) {
                                c.ok = false;
                                c.note = "at " + tuple_str({a, b, h});
                            }
                break;
            case 7:
                for (int h1 = 0; h1 < hn && c.ok; ++h1)
                    for (int h2 = 0; h2 < hn && c.ok; ++h2)
                        for (int g = 0; g < gn && c.ok; ++g)
                            if (norm_mod(E.psi_at(S.H.add(h1, h2), g) - E.psi_at(h1, g) -
                                             E.psi_at(h2, g),
                                         S.m) != 0) {
                                c.ok = false;
                                c.note = "at " + tuple_str({h1, h2, g});
                            }
                break;
            case 8:
                for (int h1 = 0; h1 < hn && c.ok; ++h1)
                    for (int h2 = 0; h2 < hn && c.ok; ++h2)
                        for (int g = 0; g < gn && c.ok; ++g)
                            if (norm_mod(E.chi_at(g, S.H.add(h1, h2)) - E.chi_at(g, h1) -
                                             E.chi_at(g, h2),
                                         S.m) != 0) {
                                c.ok = false;
                                c.note = "at " + tuple_str({h1, h2, g});
                            }
                break;
            case 9: {
                // The pentagonator condition, with the primed interchangers
                // and tau read from S2 (they agree with the twist once
                // conditions 3-6 hold, which were checked above).
                for (int a = 0; a < gn && c.ok; ++a)
                    for (int b = 0; b < gn && c.ok; ++b)
                        for (int cc = 0; cc < gn && c.ok; ++cc)
                            for (int d = 0; d < gn && c.ok; ++d) {
                                long lhs =
                                    -E.psi_at(W.rho(S.alpha0_at(a, b, cc)), d) +
                                    E.phi_at(a, b, cc) + E.phi_at(a, S.G.op(b, cc), d) +
                                    S2.iota2_at(W.sigma(a), E.Phi_at(b, cc), W.sigma(d)) -
                                    E.chi_at(a, S.alpha0_at(b, cc, d)) +
                                    E.phi_at(b, cc, d) +
                                    S2.pi_at(W.sigma(a), W.sigma(b), W.sigma(cc),
                                             W.sigma(d));
                                long rhs =
                                    E.t * S.pi_at(a, b, cc, d) +
                                    E.phi_at(S.G.op(a, b), cc, d) +
                                    S2.iota1_at(E.Phi_at(a, b), W.sigma(cc), W.sigma(d)) -
                                    S2.tau_at(E.Phi_at(a, b), E.Phi_at(cc, d)) +
                                    E.phi_at(a, b, S.G.op(cc, d)) +
                                    S2.iota3_at(W.sigma(a), W.sigma(b), E.Phi_at(cc, d));
                                if (norm_mod(lhs - rhs, S.m) != 0) {
                                    c.ok = false;
                                    c.note = "at " + tuple_str({a, b, cc, d});
                                }
                            }
                break;
            }
        }
    }
    return R;
}

EquivalenceSearch search_equivalence(const SemiWeakStructure& S,
                                     const SemiWeakStructure& S2, long long budget,
                                     bool widen) {
    EquivalenceSearch out;
    if (S.G.n != S2.G.n || S.H.n != S2.H.n || S.m != S2.m) {
        out.exhausted = true;
        return out;
    }
    const int gn = S.G.n, hn = S.H.n;
    const long m = S.m;
    // Automorphism candidates.
    std::vector<std::vector<int>> gauts, hauts;
    {
        std::vector<int> p(gn);
        std::iota(p.begin(), p.end(), 0);
        do {
            if (p[0] != 0) continue;
            bool hom = true;
            for (int a = 0; a < gn && hom; ++a)
                for (int b = 0; b < gn && hom; ++b)
                    hom = p[S.G.op(a, b)] == S.G.op(p[a], p[b]);
            if (hom) gauts.push_back(p);
        } while (widen && std::next_permutation(p.begin(), p.end()));
        if (!widen) gauts.assign(1, [&] {
            std::vector<int> id(gn);
            std::iota(id.begin(), id.end(), 0);
            return id;
        }());
    }
    {
        std::vector<int> p(hn);
        std::iota(p.begin(), p.end(), 0);
        do {
            if (p[0] != 0) continue;
            bool hom = true;
            for (int a = 0; a < hn && hom; ++a)
                for (int b = 0; b < hn && hom; ++b)
                    hom = p[S.H.add(a, b)] == S.H.add(p[a], p[b]);
            if (hom) hauts.push_back(p);
        } while (widen && std::next_permutation(p.begin(), p.end()));
        if (!widen) hauts.assign(1, [&] {
            std::vector<int> id(hn);
            std::iota(id.begin(), id.end(), 0);
            return id;
        }());
    }
    std::vector<long> ts;
    for (long t = 1; t < m; ++t)
        if (std::gcd(t, m) == 1) {
            ts.push_back(t);
            if (!widen) break;
        }
    if (ts.empty()) ts.push_back(1);

    bool budget_hit = false;
    for (const auto& ag : gauts)
        for (const auto& ah : hauts)
            for (long t : ts) {
                EquivalenceData E = EquivalenceData::identity(S);
                E.autG = ag;
                E.autH = ah;
                E.t = t;
                // Free normalized slots: everything with no identity argument.
                struct Slot {
                    long* val;
                    int* hval;
                    long radix;
                };
                std::vector<Slot> slots;
                for (int a = 1; a < hn; ++a)
                    for (int b = 1; b < hn; ++b)
                        slots.push_back({&E.mu_ref(a, b), nullptr, m});
                for (int a = 1; a < gn; ++a)
                    for (int b = 1; b < gn; ++b)
                        slots.push_back({nullptr, &E.Phi_ref(a, b), hn});
                for (int a = 1; a < gn; ++a)
                    for (int b = 1; b < gn; ++b)
                        for (int c = 1; c < gn; ++c)
                            slots.push_back({&E.phi_ref(a, b, c), nullptr, m});
                for (int h = 1; h < hn; ++h)
                    for (int g = 1; g < gn; ++g) {
                        slots.push_back({&E.psi_ref(h, g), nullptr, m});
                        slots.push_back({&E.chi_ref(g, h), nullptr, m});
                    }
                while (true) {
                    if (out.tried >= budget) {
                        budget_hit = true;
                        break;
                    }
                    ++out.tried;
                    if (verify_equivalence(S, S2, E).all_ok()) {
                        out.witness = E;
                        return out;
                    }
                    size_t i = 0;
                    for (; i < slots.size(); ++i) {
                        long cur = slots[i].val ? *slots[i].val : *slots[i].hval;
                        if (++cur < slots[i].radix) {
                            if (slots[i].val)
                                *slots[i].val = cur;
                            else
                                *slots[i].hval = (int)cur;
                            break;
                        }
                        if (slots[i].val)
                            *slots[i].val = 0;
                        else
                            *slots[i].hval = 0;
                    }
                    if (i == slots.size()) break;
                }
                if (budget_hit) break;
            }
    out.exhausted = !budget_hit;
    return out;
}

std::string equivalence_to_file_string(const EquivalenceData& E) {
    std::ostringstream os;
    os << "t " << E.t << "\nautG";
    for (int v : E.autG) os << ' ' << v;
    os << "\nautH";
    for (int v : E.autH) os << ' ' << v;
    os << "\n";
    auto dump = [&](const char* name, int arity, auto at, std::initializer_list<int> radix) {
        std::vector<int> rad(radix);
        std::vector<int> args(arity, 0);
        bool header = false;
        while (true) {
            long v = at(args);
            if (v != 0) {
                if (!header) {
                    os << "\n" << name << "\n";
                    header = true;
                }
                for (int k = 0; k < arity; ++k) os << (k ? " " : "") << args[k];
                os << " -> " << v << "\n";
            }
            int i = arity - 1;
            for (; i >= 0; --i) {
                if (++args[i] < rad[i]) break;
                args[i] = 0;
            }
            if (i < 0) break;
        }
    };
    dump("mu", 2, [&](const std::vector<int>& a) { return E.mu_at(a[0], a[1]); },
         {E.hn, E.hn});
    dump("Phi", 2, [&](const std::vector<int>& a) { return (long)E.Phi_at(a[0], a[1]); },
         {E.gn, E.gn});
    dump("phi", 3,
         [&](const std::vector<int>& a) { return E.phi_at(a[0], a[1], a[2]); },
         {E.gn, E.gn, E.gn});
    dump("psi", 2, [&](const std::vector<int>& a) { return E.psi_at(a[0], a[1]); },
         {E.hn, E.gn});
    dump("chi", 2, [&](const std::vector<int>& a) { return E.chi_at(a[0], a[1]); },
         {E.gn, E.hn});
    return os.str();
}

EquivalenceData equivalence_from_file_string(const std::string& text,
                                             const SemiWeakStructure& S) {
    EquivalenceData E = EquivalenceData::identity(S);
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int section = -1;  // 0 mu, 1 Phi, 2 phi, 3 psi, 4 chi
    const char* names[5] = {"mu", "Phi", "phi", "psi", "chi"};
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto bad = [&](const std::string& what) -> void {
            throw std::invalid_argument("equivalence file, line " +
                                        std::to_string(lineno) + ": " + what);
        };
        if (tok == "t") {
            if (!(ls >> E.t)) bad("expected 't <int>'");
            continue;
        }
        if (tok == "autG" || tok == "autH") {
            auto& perm = tok == "autG" ? E.autG : E.autH;
            perm.clear();
            int v;
            while (ls >> v) perm.push_back(v);
            if ((int)perm.size() != (tok == "autG" ? E.gn : E.hn))
                bad(tok + " has the wrong length");
            continue;
        }
        int sec = -1;
        for (int i = 0; i < 5; ++i)
            if (tok == names[i]) sec = i;
        if (sec >= 0) {
            section = sec;
            continue;
        }
        if (section < 0) bad("unexpected token '" + tok + "'");
        int arity = section == 2 ? 3 : 2;
        std::vector<int> args{std::stoi(tok)};
        for (int k = 1; k < arity; ++k) {
            int v;
            if (!(ls >> v)) bad("expected " + std::to_string(arity) + " arguments");
            args.push_back(v);
        }
        std::string arrow;
        long val;
        if (!(ls >> arrow >> val) || arrow != "->") bad("expected '-> value'");
        auto gok = [&](int v) { return v >= 0 && v < E.gn; };
        auto hok = [&](int v) { return v >= 0 && v < E.hn; };
        switch (section) {
            case 0:
                if (!hok(args[0]) || !hok(args[1])) bad("mu entry out of range");
                E.mu_ref(args[0], args[1]) = norm_mod(val, S.m);
                break;
            case 1:
                if (!gok(args[0]) || !gok(args[1]) || !hok((int)val))
                    bad("Phi entry out of range");
                E.Phi_ref(args[0], args[1]) = (int)val;
                break;
            case 2:
                if (!gok(args[0]) || !gok(args[1]) || !gok(args[2]))
                    bad("phi entry out of range");
                E.phi_ref(args[0], args[1], args[2]) = norm_mod(val, S.m);
                break;
            case 3:
                if (!hok(args[0]) || !gok(args[1])) bad("psi entry out of range");
                E.psi_ref(args[0], args[1]) = norm_mod(val, S.m);
                break;
            case 4:
                if (!gok(args[0]) || !hok(args[1])) bad("chi entry out of range");
                E.chi_ref(args[0], args[1]) = norm_mod(val, S.m);
                break;
        }
    }
    return E;
}

EquivalenceData equivalence_load(const std::string& path, const SemiWeakStructure& S) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open equivalence file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return equivalence_from_file_string(os.str(), S);
}

}  // namespace statesum
