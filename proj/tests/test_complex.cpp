#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "statesum/complex.hpp"

using namespace statesum;

namespace {

void expect_homology(const OrderedTriangulation& t,
                     const std::vector<std::pair<int, std::vector<long>>>& want) {
    auto H = homology(t);
    REQUIRE(H.size() == want.size());
    for (size_t k = 0; k < want.size(); ++k) {
        CAPTURE(k);
        CHECK(H[k].betti == want[k].first);
        REQUIRE(H[k].torsion.size() == want[k].second.size());
        for (size_t i = 0; i < want[k].second.size(); ++i)
            CHECK(H[k].torsion[i] == want[k].second[i]);
    }
}

}  // namespace

TEST_CASE("boundary of the 5-simplex") {
    OrderedTriangulation t = boundary_of_5simplex();
    t.validate();
    CHECK(t.dim == 4);
    CHECK(t.nverts == 6);
    CHECK(t.facets.size() == 6);
    CHECK(t.f_vector() == std::vector<long>{6, 15, 20, 15, 6});
    CHECK(t.euler_characteristic() == 2);
    // alternating orientation signs for d(Delta^5)
    for (size_t i = 0; i < t.facets.size(); ++i) CHECK(t.eps[i] == (i % 2 ? -1 : 1));
    expect_homology(t, {{1, {}}, {0, {}}, {0, {}}, {0, {}}, {1, {}}});
}

TEST_CASE("boundary_of_simplex in other dimensions") {
    for (int d = 1; d <= 3; ++d) {
        OrderedTriangulation t = boundary_of_simplex(d);
        t.validate();
        CHECK(t.euler_characteristic() == (d % 2 ? 0 : 2));
        auto H = homology(t);
        CHECK(H.front().betti == 1);
        CHECK(H.back().betti == 1);
        for (int k = 1; k < d; ++k) {
            CHECK(H[k].betti == 0);
            CHECK(H[k].torsion.empty());
        }
    }
}

TEST_CASE("cross-polytope sphere") {
    OrderedTriangulation t = cross_polytope_s4();
    t.validate();
    CHECK(t.nverts == 10);
    CHECK(t.facets.size() == 32);
    CHECK(t.euler_characteristic() == 2);
    expect_homology(t, {{1, {}}, {0, {}}, {0, {}}, {0, {}}, {1, {}}});
}

TEST_CASE("Kuehnel CP^2") {
    OrderedTriangulation t = kuhnel_cp2();
    t.validate();
    CHECK(t.nverts == 9);
    CHECK(t.facets.size() == 36);
    CHECK(t.f_vector() == std::vector<long>{9, 36, 84, 90, 36});
    CHECK(t.euler_characteristic() == 3);
    expect_homology(t, {{1, {}}, {0, {}}, {1, {}}, {0, {}}, {1, {}}});
}

TEST_CASE("RP^3 quotient") {
    OrderedTriangulation t = rp3_quotient();
    t.validate();
    CHECK(t.dim == 3);
    CHECK(t.nverts == 40);
    CHECK(t.facets.size() == 192);
    CHECK(t.euler_characteristic() == 0);
    expect_homology(t, {{1, {}}, {0, {2}}, {0, {}}, {1, {}}});
    // over Z/2 the torsion shows up in both middle Betti numbers
    CHECK(betti_mod_p(t, 2) == std::vector<int>{1, 1, 1, 1});
    CHECK(betti_mod_p(t, 3) == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("products with the circle") {
    OrderedTriangulation s3 = boundary_of_simplex(3);
    for (int layers : {3, 4, 5}) {
        CAPTURE(layers);
        OrderedTriangulation t = product_with_circle(s3, layers);
        t.validate();
        CHECK(t.dim == 4);
        CHECK(t.nverts == s3.nverts * layers);
        CHECK(t.euler_characteristic() == 0);
        expect_homology(t, {{1, {}}, {1, {}}, {0, {}}, {1, {}}, {1, {}}});
    }
    // Kuenneth with torsion: RP^3 x S^1
    OrderedTriangulation t = product_with_circle(rp3_quotient(), 3);
    t.validate();
    expect_homology(t, {{1, {}}, {1, {2}}, {0, {2}}, {1, {}}, {1, {}}});
    // layered construction needs at least 3 layers to be simplicial
    CHECK_THROWS(product_with_circle(s3, 2));
}

TEST_CASE("reversed and relabelled complexes") {
    OrderedTriangulation t = kuhnel_cp2();
    t.validate();
    // note: validate() would renormalize eps[0] to +1, so reversed()
    // complexes carry their signs as-is
    OrderedTriangulation r = t.reversed();
    CHECK(r.facets == t.facets);
    // total orientation is opposite facet by facet
    for (size_t i = 0; i < t.facets.size(); ++i) CHECK(r.eps[i] == -t.eps[i]);

    for (uint64_t seed : {1u, 42u, 987u}) {
        CAPTURE(seed);
        OrderedTriangulation p = t.relabelled(seed);
        p.validate();
        CHECK(p.nverts == t.nverts);
        CHECK(p.facets.size() == t.facets.size());
        CHECK(p.f_vector() == t.f_vector());
        expect_homology(p, {{1, {}}, {0, {}}, {1, {}}, {0, {}}, {1, {}}});
    }
}

TEST_CASE("file round-trip") {
    for (OrderedTriangulation t :
         {boundary_of_5simplex(), kuhnel_cp2(), rp3_quotient()}) {
        t.validate();
        OrderedTriangulation r = OrderedTriangulation::from_file_string(t.to_file_string());
        r.validate();
        CHECK(r.dim == t.dim);
        CHECK(r.nverts == t.nverts);
        CHECK(r.facets == t.facets);
        CHECK(r.eps == t.eps);
    }
}

TEST_CASE("bad complexes are rejected") {
    // ridge contained in three facets
    OrderedTriangulation t;
    t.dim = 1;
    t.nverts = 3;
    t.facets = {{0, 1}, {1, 2}, {0, 2}};
    t.validate();  // the triangle circle is fine
    t.facets.push_back({0, 1});
    CHECK_THROWS_AS(t.validate(), std::runtime_error);

    // non-ascending tuple
    OrderedTriangulation u;
    u.dim = 1;
    u.nverts = 3;
    u.facets = {{1, 0}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(u.validate(), std::runtime_error);

    // disconnected: two disjoint circles
    OrderedTriangulation v;
    v.dim = 1;
    v.nverts = 6;
    v.facets = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    CHECK_THROWS_AS(v.validate(), std::runtime_error);

    // Klein-bottle-like square gluing has no consistent orientation: use the
    // minimal 2-complex RP^2 (6 vertices, 10 triangles)
    OrderedTriangulation w;
    w.dim = 2;
    w.nverts = 6;
    w.facets = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
    CHECK_THROWS_AS(w.validate(), std::runtime_error);
}
