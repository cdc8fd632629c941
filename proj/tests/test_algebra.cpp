#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "statesum/cyclotomic.hpp"
#include "statesum/groups.hpp"
#include "statesum/snf.hpp"

using namespace statesum;

TEST_CASE("euler phi and cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(3) == 2);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(36) == 12);

    // Phi_1 = x - 1, Phi_2 = x + 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1,
    // Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1.
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});

    // product over d | m of Phi_d = x^m - 1, checked for m = 12 by degree sum
    int degs = 0;
    for (int d = 1; d <= 12; ++d)
        if (12 % d == 0) degs += euler_phi(d);
    CHECK(degs == 12);
}

TEST_CASE("cyclotomic arithmetic in Q(zeta_3)") {
    // (1 + 2*zeta_3)^2 = 1 + 4 zeta + 4 zeta^2 = -3 (zeta^2 = -1 - zeta)
    Cyclotomic a = Cyclotomic::one(3) + Cyclotomic::root_power(3, 1) * mpq_class(2);
    CHECK((a * a).to_string() == "-3");
    CHECK((a * a) == Cyclotomic::from_rational(3, -3));

    // zeta^3 = 1, zeta^-1 = zeta^2
    CHECK(Cyclotomic::root_power(3, 3) == Cyclotomic::one(3));
    CHECK(Cyclotomic::root_power(3, -1) == Cyclotomic::root_power(3, 2));

    // 1 + zeta + zeta^2 = 0
    Cyclotomic s = Cyclotomic::one(3) + Cyclotomic::root_power(3, 1) +
                   Cyclotomic::root_power(3, 2);
    CHECK(s.is_zero());
}

TEST_CASE("root powers cover all residues for every small m") {
    // regression: the power basis has phi(m) elements but zeta^k must be
    // expressible for every k in [0, m)
    for (int m = 1; m <= 24; ++m) {
        Cyclotomic prod = Cyclotomic::one(m);
        for (int k = 0; k < m; ++k) {
            Cyclotomic z = Cyclotomic::root_power(m, k);
            CHECK(z * Cyclotomic::root_power(m, m - k) == Cyclotomic::one(m));
            prod *= Cyclotomic::one(m);
        }
        // full sum of all m-th roots vanishes for m > 1
        std::vector<mpz_class> ones(m, 1);
        Cyclotomic full = root_power_sum(m, ones);
        if (m == 1)
            CHECK(full == Cyclotomic::one(1));
        else
            CHECK(full.is_zero());
    }
}

TEST_CASE("conjugation and rationality") {
    Cyclotomic z = Cyclotomic::root_power(12, 1);
    CHECK(z.conjugate() == Cyclotomic::root_power(12, 11));
    CHECK((z * z.conjugate()) == Cyclotomic::one(12));
    CHECK(!z.is_rational());
    CHECK((z + z.conjugate()).is_rational() == false);  // 2cos(30deg) = sqrt(3)
    CHECK((z * z + z.conjugate() * z.conjugate()).is_rational());  // 2cos(60) = 1
    CHECK(Cyclotomic::from_rational(12, mpq_class(7, 3)).is_rational());
    // conjugation is an involution and a ring map
    Cyclotomic w = Cyclotomic::root_power(12, 5) + Cyclotomic::from_rational(12, 2);
    CHECK(w.conjugate().conjugate() == w);
    CHECK((z * w).conjugate() == z.conjugate() * w.conjugate());
}

TEST_CASE("embedding into a larger root order") {
    Cyclotomic z3 = Cyclotomic::root_power(3, 1);
    CHECK(z3.embed(12) == Cyclotomic::root_power(12, 4));
    Cyclotomic e = (z3 + Cyclotomic::one(3)).embed(6);
    CHECK(e == Cyclotomic::root_power(6, 2) + Cyclotomic::one(6));
}

TEST_CASE("approximate embedding") {
    Cyclotomic z = Cyclotomic::root_power(4, 1);  // i
    CHECK(z.approx_re() == doctest::Approx(0.0));
    CHECK(z.approx_im() == doctest::Approx(1.0));
    Cyclotomic v = Cyclotomic::from_rational(3, -3) +
                   Cyclotomic::root_power(3, 1) * mpq_class(-6) +
                   Cyclotomic::from_rational(3, 3);
    // -6 zeta_3 = 3 - 3i sqrt(3)
    CHECK(v.approx_re() == doctest::Approx(3.0));
    CHECK(v.approx_im() == doctest::Approx(-3.0 * std::sqrt(3.0)));
}

TEST_CASE("finite groups") {
    FiniteGroup c4 = FiniteGroup::cyclic(4);
    c4.validate();
    CHECK(c4.is_abelian());
    CHECK(c4.op(3, 2) == 1);
    CHECK(c4.inv[3] == 1);

    FiniteGroup k4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                 FiniteGroup::cyclic(2));
    k4.validate();
    CHECK(k4.n == 4);
    for (int a = 0; a < 4; ++a) CHECK(k4.op(a, a) == 0);

    // a non-group table is rejected
    std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(bad).validate(), std::invalid_argument);
}

TEST_CASE("finite abelian groups") {
    FiniteAbelianGroup h({2, 3});
    CHECK(h.n == 6);
    CHECK(h.exponent() == 6);
    int a = h.from_components({1, 2});
    CHECK(h.components(a) == std::vector<int>{1, 2});
    CHECK(h.add(a, h.from_components({1, 1})) == h.from_components({0, 0}));
    CHECK(h.neg(a) == h.from_components({1, 1}));
    FiniteAbelianGroup t = FiniteAbelianGroup::trivial();
    CHECK(t.n == 1);
    CHECK(t.add(0, 0) == 0);
}

TEST_CASE("smith normal form") {
    IntMatrix a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<mpz_class>{2, 2, 156});
    // U A V = D and divisibility d1 | d2 | d3
    IntMatrix d = matmul(matmul(s.U, a), s.V);
    CHECK(d == s.D);
    CHECK(abs_det(s.U) == 1);
    CHECK(abs_det(s.V) == 1);

    // random-ish rectangular matrices: U A V = D, unimodularity, divisibility
    uint64_t x = 12345;
    auto rnd = [&]() {
        x = x * 6364136223846793005ull + 1442695040888963407ull;
        return (long)((x >> 33) % 19) - 9;
    };
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 1 + (int)(rnd() + 9) % 5, cols = 1 + (int)(rnd() + 9) % 5;
        IntMatrix m(rows, std::vector<mpz_class>(cols));
        for (auto& r : m)
            for (auto& v : r) v = rnd();
        SmithDecomposition sd = smith_normal_form(m);
        CHECK(matmul(matmul(sd.U, m), sd.V) == sd.D);
        CHECK(abs_det(sd.U) == 1);
        CHECK(abs_det(sd.V) == 1);
        auto diag = sd.diagonal();
        for (size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
}

TEST_CASE("solve_mod enumerates exactly the solution set") {
    // over several moduli, compare solve_mod's parametrised set with brute force
    std::vector<std::vector<long>> A = {{2, 1, 0}, {0, 2, 4}};
    for (long n : {2L, 3L, 4L, 6L, 5L, 8L, 9L}) {
        for (long b1 : {0L, 1L, 2L}) {
            std::vector<long> b = {b1, 2};
            auto sol = solve_mod(A, b, n);
            // brute-force the ground truth
            std::vector<std::vector<long>> truth;
            for (long x = 0; x < n; ++x)
                for (long y = 0; y < n; ++y)
                    for (long z = 0; z < n; ++z)
                        if (((2 * x + y - b[0]) % n + n) % n == 0 &&
                            ((2 * y + 4 * z - b[1]) % n + n) % n == 0)
                            truth.push_back({x, y, z});
            if (!sol) {
                CHECK(truth.empty());
                continue;
            }
            REQUIRE(!truth.empty());
            CHECK(sol->count() == (long)truth.size());
            // walk the parametrisation, collect and compare as sets
            std::vector<std::vector<long>> got;
            std::vector<long> c(sol->kernel.size(), 0);
            while (true) {
                std::vector<long> v = sol->particular;
                for (size_t i = 0; i < c.size(); ++i)
                    for (size_t j = 0; j < v.size(); ++j)
                        v[j] = (v[j] + c[i] * sol->kernel[i][j]) % n;
                got.push_back(v);
                size_t i = 0;
                for (; i < c.size(); ++i) {
                    if (++c[i] < sol->orders[i]) break;
                    c[i] = 0;
                }
                if (i == c.size()) break;
            }
            std::sort(got.begin(), got.end());
            std::sort(truth.begin(), truth.end());
            CHECK(got == truth);
        }
    }
}
