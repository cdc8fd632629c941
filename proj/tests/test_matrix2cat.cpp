#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "statesum/matrix2cat.hpp"

using namespace statesum;

namespace {

// deterministic small PRNG for seeded tuples
struct Rng {
    uint64_t x;
    explicit Rng(uint64_t seed) : x(seed * 2654435761u + 1) {}
    uint64_t next() {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return x;
    }
    int upto(int n) { return (int)(next() % (uint64_t)n); }
};

RigElement random_rig(Rng& r, int hn, int maxdeg) {
    RigElement e = RigElement::zero(hn);
    int d = 1 + r.upto(maxdeg);  // degree >= 1 so 2-morphism blocks are nonempty
    for (int i = 0; i < d; ++i) e.counts[r.upto(hn)] += 1;
    return e;
}

OneMorphismMatrix random_one(Rng& r, const FiniteAbelianGroup& H, int g, int rows,
                             int cols, int maxdeg) {
    OneMorphismMatrix f = OneMorphismMatrix::make(H, g, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) f.at(i, j) = random_rig(r, H.n, maxdeg);
    return f;
}

Cyclotomic random_cyc(Rng& r, int m) {
    Cyclotomic c = Cyclotomic::zero(m);
    for (int k = 0; k < 2; ++k)
        c += Cyclotomic::root_power(m, r.upto(m)) * mpq_class(r.upto(3) - 1);
    return c;
}

/// a random 2-morphism src => tgt with matching block shapes
TwoMorphismMatrix random_two(Rng& r, const OneMorphismMatrix& src,
                             const OneMorphismMatrix& tgt, int m) {
    TwoMorphismMatrix a;
    a.src = src;
    a.tgt = tgt;
    a.m = m;
    a.e.resize(src.rows * src.cols);
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) {
            long p = src.at(i, j).deg(), q = tgt.at(i, j).deg();
            CycMatrix blk(p, std::vector<Cyclotomic>(q, Cyclotomic::zero(m)));
            for (long s = 0; s < p; ++s)
                for (long t = 0; t < q; ++t) blk[s][t] = random_cyc(r, m);
            a.at(i, j) = blk;
        }
    a.validate();
    return a;
}

}  // namespace

TEST_CASE("rig arithmetic in N(H)") {
    FiniteAbelianGroup H({4});
    RigElement a = RigElement::of(4, 1) + RigElement::of(4, 3);
    RigElement b = RigElement::of(4, 2);
    RigElement p = a.mul(b, H);  // (h1 + h3) * h2 = h3 + h1
    CHECK(p == RigElement::of(4, 3) + RigElement::of(4, 1));
    CHECK(a.deg() == 2);
    CHECK(p.deg() == 2);
    // distributivity on a seeded sample
    Rng r(7);
    for (int t = 0; t < 50; ++t) {
        RigElement x = random_rig(r, 4, 3), y = random_rig(r, 4, 3),
                   z = random_rig(r, 4, 3);
        CHECK((x + y).mul(z, H) == x.mul(z, H) + y.mul(z, H));
        CHECK(x.mul(y, H) == y.mul(x, H));  // H abelian
    }
}

TEST_CASE("1-morphism composition is associative and unital") {
    FiniteAbelianGroup H({3});
    Rng r(11);
    for (int t = 0; t < 30; ++t) {
        auto f = random_one(r, H, 0, 2, 3, 2);
        auto g = random_one(r, H, 0, 3, 2, 2);
        auto h = random_one(r, H, 0, 2, 2, 2);
        CHECK(compose_1(compose_1(f, g), h) == compose_1(f, compose_1(g, h)));
        auto idl = OneMorphismMatrix::identity(H, 0, f.rows);
        auto idr = OneMorphismMatrix::identity(H, 0, f.cols);
        CHECK(compose_1(idl, f) == f);
        CHECK(compose_1(f, idr) == f);
    }
    // mismatched object labels are rejected
    auto f = random_one(r, H, 0, 1, 1, 2);
    auto g = random_one(r, H, 1, 1, 1, 2);
    CHECK_THROWS_AS(compose_1(f, g), std::invalid_argument);
}

TEST_CASE("vertical composition: associativity, identities, dual") {
    FiniteAbelianGroup H({2});
    const int m = 4;
    Rng r(13);
    for (int t = 0; t < 30; ++t) {
        auto f0 = random_one(r, H, 0, 2, 2, 2);
        auto f1 = random_one(r, H, 0, 2, 2, 2);
        auto f2 = random_one(r, H, 0, 2, 2, 2);
        auto f3 = random_one(r, H, 0, 2, 2, 2);
        auto a = random_two(r, f0, f1, m);
        auto b = random_two(r, f1, f2, m);
        auto c = random_two(r, f2, f3, m);
        auto ab_c = vcompose_2(vcompose_2(a, b), c);
        auto a_bc = vcompose_2(a, vcompose_2(b, c));
        CHECK(ab_c == a_bc);
        CHECK(vcompose_2(two_identity(f0, m), a) == a);
        CHECK(vcompose_2(a, two_identity(f1, m)) == a);
        // dual is a contravariant involution
        CHECK(dual_2(dual_2(a)) == a);
        CHECK(dual_2(vcompose_2(a, b)) == vcompose_2(dual_2(b), dual_2(a)));
    }
}

TEST_CASE("horizontal composition: associativity on 1x1 shapes, identities") {
    FiniteAbelianGroup H({3});
    const int m = 3;
    Rng r(17);
    for (int t = 0; t < 30; ++t) {
        auto f0 = random_one(r, H, 0, 1, 1, 2);
        auto f1 = random_one(r, H, 0, 1, 1, 2);
        auto g0 = random_one(r, H, 0, 1, 1, 2);
        auto g1 = random_one(r, H, 0, 1, 1, 2);
        auto h0 = random_one(r, H, 0, 1, 1, 2);
        auto h1 = random_one(r, H, 0, 1, 1, 2);
        auto a = random_two(r, f0, f1, m);
        auto b = random_two(r, g0, g1, m);
        auto c = random_two(r, h0, h1, m);
        // strict associativity of the underlying 1x1 Kronecker pasting
        CHECK(hcompose_2(hcompose_2(a, b), c) == hcompose_2(a, hcompose_2(b, c)));
        auto one = OneMorphismMatrix::identity(H, 0, 1);
        CHECK(hcompose_2(two_identity(one, m), a) == a);
        CHECK(hcompose_2(a, two_identity(one, m)) == a);
    }
}

TEST_CASE("interchange law on 200 seeded tuples") {
    FiniteAbelianGroup H({2});
    const int m = 4;
    Rng r(23);
    int done = 0;
    while (done < 200) {
        // shapes: a: f0=>f1, a2: f1=>f2 (vertical), b: g0=>g1, b2: g1=>g2
        auto f0 = random_one(r, H, 0, 2, 2, 3);
        auto f1 = random_one(r, H, 0, 2, 2, 3);
        auto f2 = random_one(r, H, 0, 2, 2, 3);
        auto g0 = random_one(r, H, 0, 2, 2, 3);
        auto g1 = random_one(r, H, 0, 2, 2, 3);
        auto g2 = random_one(r, H, 0, 2, 2, 3);
        auto a = random_two(r, f0, f1, m);
        auto a2 = random_two(r, f1, f2, m);
        auto b = random_two(r, g0, g1, m);
        auto b2 = random_two(r, g1, g2, m);
        // (a . a2) o (b . b2) == (a o b) . (a2 o b2)
        auto lhs = hcompose_2(vcompose_2(a, a2), vcompose_2(b, b2));
        auto rhs = vcompose_2(hcompose_2(a, b), hcompose_2(a2, b2));
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("swap matrices and the tensorator") {
    const int m = 8;
    // swap^2 = identity: S(q,p) S(p,q) = I_{pq}
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            CycMatrix s = swap_matrix(p, q, m);
            CycMatrix s2 = swap_matrix(q, p, m);
            REQUIRE((int)s.size() == p * q);
            for (int i = 0; i < p * q; ++i)
                for (int j = 0; j < p * q; ++j) {
                    Cyclotomic acc = Cyclotomic::zero(m);
                    for (int k = 0; k < p * q; ++k) acc += s[i][k] * s2[k][j];
                    CHECK(acc == (i == j ? Cyclotomic::one(m) : Cyclotomic::zero(m)));
                }
        }

    // tensorator: a 2-morphism f*g => g*f whose square is the identity
    FiniteAbelianGroup H({2});
    Rng r(29);
    for (int t = 0; t < 20; ++t) {
        auto f = random_one(r, H, 0, 1, 1, 3);
        auto g = random_one(r, H, 0, 1, 1, 3);
        auto tz = tensorator_matrix(f, g, m);
        CHECK(tz.src == compose_1(f, g));
        CHECK(tz.tgt == compose_1(g, f));
        auto tz2 = tensorator_matrix(g, f, m);
        CHECK(vcompose_2(tz, tz2) == two_identity(compose_1(f, g), m));
        // naturality square against identity 2-cells is trivial; check the
        // dual relation instead: dual of a permutation is its inverse
        CHECK(dual_2(tz) == tz2);
    }
}
