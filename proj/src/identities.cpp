#include <sstream>

#include "statesum/structure.hpp"
#include "statesum/word_engine.hpp"

namespace statesum {

namespace {

std::string tuple_str(const std::string& names, const std::vector<int>& vals) {
    std::ostringstream os;
    os << "(" << names << ")=(";
    for (size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
    os << ")";
    return os.str();
}

// ---- elementary moves ------------------------------------------------------
// Conventions (fixed once, used identically by the partition function):
//   tau(u,v):        [u, v] => [v, u]                          factor +tau(u,v)
//   iota1(h,a,b):    [alpha0(x,a,b), h] => [h, alpha0(x,a,b)]  factor +iota1
//   iota2(a,h,c):    [alpha0(a,x,c), h] => [h, alpha0(a,x,c)]  factor +iota2
//   iota3(a,b,h):    [alpha0(a,b,x), h] => [h, alpha0(a,b,x)]  factor +iota3
//   pi(a,b,c,d):     [alpha0(b,c,d), alpha0(a,bc,d), alpha0(a,b,c)]
//                      => [alpha0(a,b,cd), alpha0(ab,c,d)]     factor +pi
// An inverse move swaps source and target and negates the factor.

struct Loop {
    const SemiWeakStructure& S;
    WordEngine eng;
    Loop(const SemiWeakStructure& s, Word start) : S(s), eng(s, std::move(start)) {}

    static WordTree lf(int h) { return WordTree::leaf(h); }

    void swap2(size_t pos, int u, int v, long factor) {
        eng.apply(pos, {lf(u), lf(v)}, {lf(v), lf(u)}, factor);
    }
    void tau_fwd(size_t pos, int u, int v) { swap2(pos, u, v, S.tau_at(u, v)); }
    void tau_inv(size_t pos, int u, int v) { swap2(pos, v, u, -S.tau_at(u, v)); }
    int B(int a, int b, int c) const { return S.alpha0_at(a, b, c); }
    void iota1_fwd(size_t pos, int h, int a, int b, int x) {
        swap2(pos, B(x, a, b), h, S.iota1_at(h, a, b));
    }
    void iota1_inv(size_t pos, int h, int a, int b, int x) {
        swap2(pos, h, B(x, a, b), -S.iota1_at(h, a, b));
    }
    void iota2_fwd(size_t pos, int a, int h, int c, int x) {
        swap2(pos, B(a, x, c), h, S.iota2_at(a, h, c));
    }
    void iota2_inv(size_t pos, int a, int h, int c, int x) {
        swap2(pos, h, B(a, x, c), -S.iota2_at(a, h, c));
    }
    void iota3_fwd(size_t pos, int a, int b, int h, int x) {
        swap2(pos, B(a, b, x), h, S.iota3_at(a, b, h));
    }
    void iota3_inv(size_t pos, int a, int b, int h, int x) {
        swap2(pos, h, B(a, b, x), -S.iota3_at(a, b, h));
    }
    Word pi_bottom(int a, int b, int c, int d) const {
        int bc = S.G.op(b, c);
        return {lf(B(b, c, d)), lf(B(a, bc, d)), lf(B(a, b, c))};
    }
    Word pi_top(int a, int b, int c, int d) const {
        int ab = S.G.op(a, b), cd = S.G.op(c, d);
        return {lf(B(a, b, cd)), lf(B(ab, c, d))};
    }
    void pi_fwd(size_t pos, int a, int b, int c, int d) {
        eng.apply(pos, pi_bottom(a, b, c, d), pi_top(a, b, c, d), S.pi_at(a, b, c, d));
    }
    void pi_inv(size_t pos, int a, int b, int c, int d) {
        eng.apply(pos, pi_top(a, b, c, d), pi_bottom(a, b, c, d), -S.pi_at(a, b, c, d));
    }
    bool closed(const Word& start) const {
        return eng.word_equals(start) && eng.exponent() == 0;
    }
};

using W = WordTree;

// OBJ4: alpha0 is a 3-cocycle on G with values in H.
IdentityCheck check_obj4(const SemiWeakStructure& S) {
    const auto& G = S.G;
    const auto& H = S.H;
    for (int g1 = 0; g1 < G.n; ++g1)
        for (int g2 = 0; g2 < G.n; ++g2)
            for (int g3 = 0; g3 < G.n; ++g3)
                for (int g4 = 0; g4 < G.n; ++g4) {
                    int v = S.alpha0_at(g2, g3, g4);
                    v = H.sub(v, S.alpha0_at(G.op(g1, g2), g3, g4));
                    v = H.add(v, S.alpha0_at(g1, G.op(g2, g3), g4));
                    v = H.sub(v, S.alpha0_at(g1, g2, G.op(g3, g4)));
                    v = H.add(v, S.alpha0_at(g1, g2, g3));
                    if (v != 0)
                        return {false, tuple_str("g1,g2,g3,g4", {g1, g2, g3, g4})};
                }
    return {};
}

// MOR4: alpha1 is a 3-cocycle on H with values in mu_m.
IdentityCheck check_mor4(const SemiWeakStructure& S) {
    const auto& H = S.H;
    for (int h1 = 0; h1 < H.n; ++h1)
        for (int h2 = 0; h2 < H.n; ++h2)
            for (int h3 = 0; h3 < H.n; ++h3)
                for (int h4 = 0; h4 < H.n; ++h4) {
                    long v = S.alpha1_at(h2, h3, h4) -
                             S.alpha1_at(H.add(h1, h2), h3, h4) +
                             S.alpha1_at(h1, H.add(h2, h3), h4) -
                             S.alpha1_at(h1, h2, H.add(h3, h4)) +
                             S.alpha1_at(h1, h2, h3);
                    if (((v % S.m) + S.m) % S.m != 0)
                        return {false, tuple_str("h1,h2,h3,h4", {h1, h2, h3, h4})};
                }
    return {};
}

// HEX: the hexagon relations for tau, with the alpha1 strings written out.
IdentityCheck check_hex(const SemiWeakStructure& S) {
    const auto& H = S.H;
    auto a = [&](int x, int y, int z) { return S.alpha1_at(x, y, z); };
    for (int h1 = 0; h1 < H.n; ++h1)
        for (int h2 = 0; h2 < H.n; ++h2)
            for (int h3 = 0; h3 < H.n; ++h3) {
                long lhs = S.tau_at(H.add(h1, h2), h3) - S.tau_at(h1, h3) -
                           S.tau_at(h2, h3) + a(h1, h2, h3) - a(h1, h3, h2) +
                           a(h3, h1, h2);
                long rhs = S.tau_at(h1, H.add(h2, h3)) - S.tau_at(h1, h2) -
                           S.tau_at(h1, h3) - a(h1, h2, h3) + a(h2, h1, h3) -
                           a(h2, h3, h1);
                if (((lhs % S.m) + S.m) % S.m != 0 || ((rhs % S.m) + S.m) % S.m != 0)
                    return {false, tuple_str("h1,h2,h3", {h1, h2, h3})};
            }
    return {};
}

// PENT5: the two routes around the 5-object associahedron agree.
IdentityCheck check_pent5(const SemiWeakStructure& S) {
    const auto& G = S.G;
    for (int g1 = 0; g1 < G.n; ++g1)
        for (int g2 = 0; g2 < G.n; ++g2)
            for (int g3 = 0; g3 < G.n; ++g3)
                for (int g4 = 0; g4 < G.n; ++g4)
                    for (int g5 = 0; g5 < G.n; ++g5) {
                        int g12 = G.op(g1, g2), g23 = G.op(g2, g3);
                        int g34 = G.op(g3, g4), g45 = G.op(g4, g5);
                        int g123 = G.op(g12, g3), g234 = G.op(g23, g4);
                        int g345 = G.op(g34, g5);
                        Word start = {W::leaf(S.alpha0_at(g1, g2, g345)),
                                      W::leaf(S.alpha0_at(g12, g3, g45)),
                                      W::leaf(S.alpha0_at(g123, g4, g5))};
                        Loop L(S, start);
                        // left route down to the bottom word
                        L.pi_inv(0, g1, g2, g3, g45);
                        L.iota1_inv(2, L.B(g1, g2, g3), g4, g5, g123);
                        L.pi_inv(1, g1, g23, g4, g5);
                        L.pi_inv(0, g2, g3, g4, g5);
                        // right route back up
                        L.iota2_inv(2, g1, L.B(g2, g3, g4), g5, g234);
                        L.pi_fwd(3, g1, g2, g3, g4);
                        L.pi_fwd(1, g1, g2, g34, g5);
                        L.iota3_inv(0, g1, g2, L.B(g3, g4, g5), g345);
                        L.pi_fwd(1, g12, g3, g4, g5);
                        if (!L.closed(start))
                            return {false,
                                    tuple_str("g1..g5", {g1, g2, g3, g4, g5})};
                    }
    return {};
}

// The cylinder over the alpha0 pentagon with a 1-morphism h on strand `slot`
// of four objects: h crosses the bottom route, the pentagonator caps, and h
// crosses back over the top route.
IdentityCheck check_cylinder(const SemiWeakStructure& S, int slot) {
    const auto& G = S.G;
    for (int h = 0; h < S.H.n; ++h)
        for (int g1 = 0; g1 < G.n; ++g1)
            for (int g2 = 0; g2 < G.n; ++g2)
                for (int g3 = 0; g3 < G.n; ++g3)
                    for (int g4 = 0; g4 < G.n; ++g4) {
                        int g12 = G.op(g1, g2), g23 = G.op(g2, g3), g34 = G.op(g3, g4);
                        Word start = {W::leaf(S.alpha0_at(g2, g3, g4)),
                                      W::leaf(S.alpha0_at(g1, g23, g4)),
                                      W::leaf(S.alpha0_at(g1, g2, g3)),
                                      W::leaf(h)};
                        Loop L(S, start);
                        switch (slot) {
                            case 1:
                                L.iota1_fwd(2, h, g2, g3, g1);
                                L.iota1_fwd(1, h, g23, g4, g1);
                                L.tau_inv(0, h, L.B(g2, g3, g4));
                                break;
                            case 2:
                                L.iota2_fwd(2, g1, h, g3, g2);
                                L.iota2_fwd(1, g1, h, g4, g23);
                                L.iota1_fwd(0, h, g3, g4, g2);
                                break;
                            case 3:
                                L.iota3_fwd(2, g1, g2, h, g3);
                                L.iota2_fwd(1, g1, h, g4, g23);
                                L.iota2_fwd(0, g2, h, g4, g3);
                                break;
                            case 4:
                                L.tau_fwd(2, L.B(g1, g2, g3), h);
                                L.iota3_fwd(1, g1, g23, h, g4);
                                L.iota3_fwd(0, g2, g3, h, g4);
                                break;
                        }
                        L.pi_fwd(1, g1, g2, g3, g4);
                        switch (slot) {
                            case 1:
                                L.iota1_inv(0, h, g2, g34, g1);
                                L.iota1_inv(1, h, g3, g4, g12);
                                break;
                            case 2:
                                L.iota2_inv(0, g1, h, g34, g2);
                                L.iota1_inv(1, h, g3, g4, g12);
                                break;
                            case 3:
                                L.iota3_inv(0, g1, g2, h, g34);
                                L.iota2_inv(1, g12, h, g4, g3);
                                break;
                            case 4:
                                L.iota3_inv(0, g1, g2, h, g34);
                                L.iota3_inv(1, g12, g3, h, g4);
                                break;
                        }
                        L.pi_inv(0, g1, g2, g3, g4);
                        if (!L.closed(start))
                            return {false, tuple_str("h,g1,g2,g3,g4",
                                                     {h, g1, g2, g3, g4})};
                    }
    return {};
}

// Multiplicativity of an interchanger in its H-slot: two crossings compose to
// the crossing of the composite, with the regrouping alpha1 made explicit.
IdentityCheck check_mult(const SemiWeakStructure& S, int which) {
    const auto& G = S.G;
    auto lf = [](int x) { return W::leaf(x); };
    for (int h1 = 0; h1 < S.H.n; ++h1)
        for (int h2 = 0; h2 < S.H.n; ++h2)
            for (int g1 = 0; g1 < G.n; ++g1)
                for (int g2 = 0; g2 < G.n; ++g2)
                    for (int g3 = 0; g3 < G.n; ++g3) {
                        int b = S.alpha0_at(g1, g2, g3);
                        int h12 = S.H.add(h1, h2);
                        long f1, f2, f12;
                        switch (which) {
                            case 1:
                                f1 = S.iota1_at(h1, g2, g3);
                                f2 = S.iota1_at(h2, g2, g3);
                                f12 = S.iota1_at(h12, g2, g3);
                                break;
                            case 2:
                                f1 = S.iota2_at(g1, h1, g3);
                                f2 = S.iota2_at(g1, h2, g3);
                                f12 = S.iota2_at(g1, h12, g3);
                                break;
                            default:
                                f1 = S.iota3_at(g1, g2, h1);
                                f2 = S.iota3_at(g1, g2, h2);
                                f12 = S.iota3_at(g1, g2, h12);
                                break;
                        }
                        Word start = {lf(h1), lf(h2), lf(b)};
                        Loop L(S, start);
                        L.swap2(1, h2, b, -f2);
                        L.swap2(0, h1, b, -f1);
                        L.eng.apply(1, {lf(h1), lf(h2)}, {W::pair(lf(h1), lf(h2))}, 0);
                        L.eng.apply(0, {lf(b), W::pair(lf(h1), lf(h2))},
                                    {W::pair(lf(h1), lf(h2)), lf(b)}, f12);
                        L.eng.apply(0, {W::pair(lf(h1), lf(h2))}, {lf(h1), lf(h2)}, 0);
                        if (!L.closed(start))
                            return {false, tuple_str("h1,h2,g1,g2,g3",
                                                     {h1, h2, g1, g2, g3})};
                    }
    return {};
}

}  // namespace

IdentityCheck verify_identity(const SemiWeakStructure& S, IdentityName id) {
    switch (id) {
        case IdentityName::OBJ4: return check_obj4(S);
        case IdentityName::MOR4: return check_mor4(S);
        case IdentityName::HEX: return check_hex(S);
        case IdentityName::PENT5: return check_pent5(S);
        case IdentityName::I1_COCYCLE: return check_cylinder(S, 1);
        case IdentityName::I2_RIGHT: return check_cylinder(S, 2);
        case IdentityName::I2_LEFT: return check_cylinder(S, 3);
        case IdentityName::I3_COCYCLE: return check_cylinder(S, 4);
        case IdentityName::I1_MULT: return check_mult(S, 1);
        case IdentityName::I2_MULT: return check_mult(S, 2);
        case IdentityName::I3_MULT: return check_mult(S, 3);
    }
    return {};
}

}  // namespace statesum
