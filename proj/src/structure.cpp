#include "statesum/structure.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace statesum {

SemiWeakStructure SemiWeakStructure::blank(FiniteGroup G, FiniteAbelianGroup H, long m) {
    SemiWeakStructure s;
    s.G = std::move(G);
    s.H = std::move(H);
    s.m = m;
    long g = s.G.n, h = s.H.n;
    s.alpha0.assign(g * g * g, 0);
    s.pi.assign(g * g * g * g, 0);
    s.alpha1.assign(h * h * h, 0);
    s.tau.assign(h * h, 0);
    s.iota1.assign(h * g * g, 0);
    s.iota2.assign(g * h * g, 0);
    s.iota3.assign(g * g * h, 0);
    return s;
}

bool SemiWeakStructure::alpha1_is_trivial() const {
    for (long v : alpha1)
        if (v) return false;
    return true;
}

std::optional<std::string> SemiWeakStructure::check_normalized() const {
    auto bad = [](const std::string& map, std::initializer_list<int> args) {
        std::ostringstream os;
        os << map << "(";
        bool first = true;
        for (int a : args) {
            os << (first ? "" : ",") << a;
            first = false;
        }
        os << ") not neutral";
        return os.str();
    };
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            if (alpha0_at(0, a, b) || alpha0_at(a, 0, b) || alpha0_at(a, b, 0))
                return bad("alpha0", {a, b});
            for (int c = 0; c < G.n; ++c)
                if (pi_at(0, a, b, c) || pi_at(a, 0, b, c) || pi_at(a, b, 0, c) ||
                    pi_at(a, b, c, 0))
                    return bad("pi", {a, b, c});
        }
    for (int a = 0; a < H.n; ++a)
        for (int b = 0; b < H.n; ++b) {
            if (alpha1_at(0, a, b) || alpha1_at(a, 0, b) || alpha1_at(a, b, 0))
                return bad("alpha1", {a, b});
        }
    for (int a = 0; a < H.n; ++a)
        if (tau_at(0, a) || tau_at(a, 0)) return bad("tau", {a});
    for (int h = 0; h < H.n; ++h)
        for (int a = 0; a < G.n; ++a)
            for (int b = 0; b < G.n; ++b) {
                if (iota1_at(0, a, b) || iota1_at(h, 0, b) || iota1_at(h, a, 0))
                    return bad("iota1", {h, a, b});
                if (iota2_at(0, h, b) || iota2_at(a, 0, b) || iota2_at(a, h, 0))
                    return bad("iota2", {a, h, b});
                if (iota3_at(0, a, h) || iota3_at(a, 0, h) || iota3_at(a, b, 0))
                    return bad("iota3", {a, b, h});
            }
    return std::nullopt;
}

const std::vector<IdentityName>& all_identities() {
    static const std::vector<IdentityName> ids = {
        IdentityName::OBJ4,       IdentityName::MOR4,    IdentityName::HEX,
        IdentityName::PENT5,      IdentityName::I1_COCYCLE,
        IdentityName::I2_RIGHT,   IdentityName::I2_LEFT, IdentityName::I3_COCYCLE,
        IdentityName::I1_MULT,    IdentityName::I2_MULT, IdentityName::I3_MULT,
    };
    return ids;
}

std::string identity_name(IdentityName id) {
    switch (id) {
        case IdentityName::OBJ4: return "OBJ4";
        case IdentityName::MOR4: return "MOR4";
        case IdentityName::HEX: return "HEX";
        case IdentityName::PENT5: return "PENT5";
        case IdentityName::I1_COCYCLE: return "I1-COCYCLE";
        case IdentityName::I2_RIGHT: return "I2-RIGHT";
        case IdentityName::I2_LEFT: return "I2-LEFT";
        case IdentityName::I3_COCYCLE: return "I3-COCYCLE";
        case IdentityName::I1_MULT: return "I1-MULT";
        case IdentityName::I2_MULT: return "I2-MULT";
        case IdentityName::I3_MULT: return "I3-MULT";
    }
    return "?";
}

bool StructureReport::all_ok() const {
    if (!normalized) return false;
    for (const auto& [id, c] : identities)
        if (!c.ok) return false;
    return true;
}

std::string StructureReport::render() const {
    std::ostringstream os;
    os << "normalization: " << (normalized ? "pass" : "FAIL " + normalization_note) << "\n";
    for (const auto& [id, c] : identities) {
        os << identity_name(id) << ": " << (c.ok ? "pass" : "FAIL at " + c.counterexample)
           << "\n";
    }
    return os.str();
}

StructureReport verify_all(const SemiWeakStructure& S) {
    StructureReport r;
    if (auto note = S.check_normalized()) {
        r.normalized = false;
        r.normalization_note = *note;
    }
    for (IdentityName id : all_identities())
        r.identities.push_back({id, verify_identity(S, id)});
    return r;
}

// ---- builders -------------------------------------------------------------

SemiWeakStructure trivial_structure(FiniteGroup G, FiniteAbelianGroup H, long m) {
    auto s = SemiWeakStructure::blank(std::move(G), std::move(H), m);
    std::ostringstream os;
    os << "trivial(G=" << s.G.n << ",H=" << s.H.describe() << ",m=" << s.m << ")";
    s.name = os.str();
    return s;
}

SemiWeakStructure br_tau(int n, int k, long m) {
    if (n < 2) throw std::invalid_argument("br_tau: need n >= 2");
    if (k <= 0 || k >= n) throw std::invalid_argument("br_tau: need 0 < k < n");
    if (m == 0) m = n;
    if (m % n != 0) throw std::invalid_argument("br_tau: m must be a multiple of n");
    auto s = SemiWeakStructure::blank(FiniteGroup::trivial(), FiniteAbelianGroup::cyclic(n), m);
    long scale = m / n;
    for (int h1 = 0; h1 < n; ++h1)
        for (int h2 = 0; h2 < n; ++h2)
            s.tau_ref(h1, h2) = (long)h1 * h2 % n * k % n * scale;
    s.name = "br-tau:" + std::to_string(n) + "," + std::to_string(k);
    return s;
}

SemiWeakStructure br_iota1(int n, int k) {
    if (n < 2) throw std::invalid_argument("br_iota1: need n >= 2");
    if (k <= 0 || k >= n * n) throw std::invalid_argument("br_iota1: need 0 < k < n^2");
    long m = (long)n * n;
    auto s = SemiWeakStructure::blank(FiniteGroup::cyclic(n), FiniteAbelianGroup::cyclic(n), m);
    for (int h = 0; h < n; ++h)
        for (int g1 = 0; g1 < n; ++g1)
            for (int g2 = 0; g2 < n; ++g2) {
                long carry = g1 + g2 - (g1 + g2) % n;  // 0 or n
                s.iota1_ref(h, g1, g2) = (long)k * h % m * carry % m;
            }
    s.name = "br-iota1:" + std::to_string(n) + "," + std::to_string(k);
    return s;
}

SemiWeakStructure br_iota2(int n, int k, long m) {
    if (n < 2) throw std::invalid_argument("br_iota2: need n >= 2");
    if (k <= 0 || k >= n) throw std::invalid_argument("br_iota2: need 0 < k < n");
    if (m == 0) m = n;
    if (m % n != 0) throw std::invalid_argument("br_iota2: m must be a multiple of n");
    auto s = SemiWeakStructure::blank(FiniteGroup::cyclic(n), FiniteAbelianGroup::cyclic(n), m);
    long scale = m / n;
    for (int g1 = 0; g1 < n; ++g1)
        for (int h = 0; h < n; ++h)
            for (int g3 = 0; g3 < n; ++g3)
                s.iota2_ref(g1, h, g3) = (long)g1 * h % n * g3 % n * k % n * scale;
    s.name = "br-iota2:" + std::to_string(n) + "," + std::to_string(k);
    return s;
}

SemiWeakStructure pentagonator_structure(FiniteGroup G, std::vector<long> omega, long m) {
    auto s = SemiWeakStructure::blank(std::move(G), FiniteAbelianGroup::trivial(), m);
    if ((long)omega.size() != (long)s.G.n * s.G.n * s.G.n * s.G.n)
        throw std::invalid_argument("pentagonator_structure: omega table has wrong size");
    for (auto& v : omega) v = ((v % m) + m) % m;
    s.pi = std::move(omega);
    s.name = "pentagonator(G=" + std::to_string(s.G.n) + ",m=" + std::to_string(m) + ")";
    return s;
}

SemiWeakStructure combine(const SemiWeakStructure& a, const SemiWeakStructure& b) {
    if (a.G.mul != b.G.mul || a.H.orders != b.H.orders)
        throw std::invalid_argument("combine: structures live on different (G,H)");
    if (a.alpha0 != b.alpha0)
        throw std::invalid_argument("combine: alpha0 tables differ");
    long m = std::lcm(a.m, b.m);
    auto s = SemiWeakStructure::blank(a.G, a.H, m);
    s.alpha0 = a.alpha0;
    auto mix = [&](const std::vector<long>& x, const std::vector<long>& y,
                   std::vector<long>& out) {
        long sa = m / a.m, sb = m / b.m;
        for (size_t i = 0; i < out.size(); ++i) out[i] = (x[i] * sa + y[i] * sb) % m;
    };
    mix(a.pi, b.pi, s.pi);
    mix(a.alpha1, b.alpha1, s.alpha1);
    mix(a.tau, b.tau, s.tau);
    mix(a.iota1, b.iota1, s.iota1);
    mix(a.iota2, b.iota2, s.iota2);
    mix(a.iota3, b.iota3, s.iota3);
    s.name = "combine(" + a.name + "," + b.name + ")";
    return s;
}

}  // namespace statesum
