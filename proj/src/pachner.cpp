#include <algorithm>
#include <atomic>
#include <sstream>

#include "internal.hpp"
#ifdef STATESUM_HAVE_OPENMP
#include <omp.h>
#endif

namespace statesum {

namespace {

/// Face bookkeeping on the boundary of the 5-simplex (vertices 0..5).  The
/// facet omitting vertex v carries the sign (-1)^v.
struct Sphere {
    int eidx[6][6];   ///< edge (a<b) -> 0..14
    int tidx[6][6][6];  ///< triangle (a<b<c) -> 0..19

    Sphere() {
        int e = 0, t = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b) eidx[a][b] = e++;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) tidx[a][b][c] = t++;
    }
};

const Sphere& sphere() {
    static Sphere s;
    return s;
}

struct Labels {
    std::array<int, 15> g{};
    std::array<int, 20> h{};

    int ge(int a, int b) const { return g[sphere().eidx[a][b]]; }
    int ht(int a, int b, int c) const { return h[sphere().tidx[a][b][c]]; }
};

/// Fills the edges from the path labels g_{a-1,a} (a = 1..last) by flatness,
/// and the non-0 triangles from the vertex-0 triangles by the tetra relation
/// of (0abc).  Vertex-0 triangle labels must already be set.
void complete(const SemiWeakStructure& S, Labels& L, int last) {
    const auto& sp = sphere();
    std::array<int, 6> gamma{};
    gamma[0] = 0;
    for (int a = 1; a <= last; ++a) gamma[a] = S.G.op(L.g[sp.eidx[a - 1][a]], gamma[a - 1]);
    for (int a = 0; a <= last; ++a)
        for (int b = a + 1; b <= last; ++b)
            L.g[sp.eidx[a][b]] = S.G.op(gamma[b], S.G.inv[gamma[a]]);
    for (int a = 1; a <= last; ++a)
        for (int b = a + 1; b <= last; ++b)
            for (int c = b + 1; c <= last; ++c)
                L.h[sp.tidx[a][b][c]] = S.H.add(
                    S.alpha0_at(L.ge(b, c), L.ge(a, b), L.ge(0, a)),
                    S.H.sub(S.H.add(L.ht(0, b, c), L.ht(0, a, b)), L.ht(0, a, c)));
}

/// Whether the tetra relation of (abcd) holds.
bool tet_ok(const SemiWeakStructure& S, const Labels& L, int a, int b, int c, int d) {
    int lhs = S.H.sub(S.H.add(L.ht(b, c, d), L.ht(a, b, d)),
                      S.H.add(L.ht(a, c, d), L.ht(a, b, c)));
    return lhs == S.alpha0_at(L.ge(c, d), L.ge(b, c), L.ge(a, b));
}

/// zeta exponent of the facet omitting `omit`.
long facet_z(const SemiWeakStructure& S, const Labels& L, int omit) {
    int v[5], n = 0;
    for (int a = 0; a < 6; ++a)
        if (a != omit) v[n++] = a;
    SimplexLabels sl;
    int e = 0, t = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) sl.g[e++] = L.ge(v[a], v[b]);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) sl.h[t++] = L.ht(v[a], v[b], v[c]);
    return z_simplex_exponent(S, sl);
}

std::string describe(const Labels& L, int last) {
    std::ostringstream os;
    os << "g(path) =";
    for (int a = 1; a <= last; ++a) os << ' ' << L.ge(a - 1, a);
    os << ", h(0bc) =";
    for (int b = 1; b <= last; ++b)
        for (int c = b + 1; c <= last; ++c) os << ' ' << L.ht(0, b, c);
    return os.str();
}

struct OracleState {
    PachnerResult result;
    bool failed = false;
};

void record_failure(OracleState& st, const std::string& msg) {
#ifdef STATESUM_HAVE_OPENMP
#pragma omp critical(statesum_pachner_failure)
#endif
    {
        if (!st.failed) {
            st.failed = true;
            st.result.ok = false;
            st.result.counterexample = msg;
        }
    }
}

/// Runs `body(idx)` for idx in [0, total), parallel unless serial is asked.
template <class Body>
void sweep(long long total, int threads, bool serial, const Body& body) {
    if (serial) {
        for (long long i = 0; i < total; ++i) body(i);
        return;
    }
#ifdef STATESUM_HAVE_OPENMP
#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
    {
#pragma omp for schedule(dynamic, 512)
        for (long long i = 0; i < total; ++i) body(i);
    }
#else
    for (long long i = 0; i < total; ++i) body(i);
#endif
}

/// Decodes idx into ng path labels and nh vertex-0 triangle labels.  The
/// triangle slots are filled in lexicographic (0bc) order, skipping the
/// triangles listed in `skip`.
Labels decode(const SemiWeakStructure& S, long long idx, int ng, int last,
              const std::vector<int>& skip) {
    const auto& sp = sphere();
    Labels L;
    for (int a = 1; a <= ng; ++a) {
        L.g[sp.eidx[a - 1][a]] = (int)(idx % S.G.n);
        idx /= S.G.n;
    }
    for (int b = 1; b <= last; ++b)
        for (int c = b + 1; c <= last; ++c) {
            int t = sp.tidx[0][b][c];
            if (std::find(skip.begin(), skip.end(), t) != skip.end()) continue;
            L.h[t] = (int)(idx % S.H.n);
            idx /= S.H.n;
        }
    return L;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

PachnerResult oracle_33(const SemiWeakStructure& S, int threads, bool serial) {
    OracleState st;
    long long total = ipow(S.G.n, 5) * ipow(S.H.n, 10);
    std::atomic<long long> checked{0}, skipped{0};
    auto body = [&](long long idx) {
        if (st.failed) return;
        Labels L = decode(S, idx, 5, 5, {});
        complete(S, L, 5);
        bool adm = true;
        for (int a = 1; a < 6 && adm; ++a)
            for (int b = a + 1; b < 6 && adm; ++b)
                for (int c = b + 1; c < 6 && adm; ++c)
                    for (int d = c + 1; d < 6 && adm; ++d) adm = tet_ok(S, L, a, b, c, d);
        if (!adm) {
            ++skipped;
            return;
        }
        long lhs = facet_z(S, L, 0) + facet_z(S, L, 2) + facet_z(S, L, 4);
        long rhs = facet_z(S, L, 1) + facet_z(S, L, 3) + facet_z(S, L, 5);
        ++checked;
        if (((lhs - rhs) % S.m + S.m) % S.m != 0)
            record_failure(st, "3-3 mismatch at " + describe(L, 5));
    };
    sweep(total, threads, serial, body);
    st.result.tuples_checked = checked;
    st.result.tuples_skipped = skipped;
    return st.result;
}

PachnerResult oracle_24(const SemiWeakStructure& S, int threads, bool serial) {
    OracleState st;
    const auto& sp = sphere();
    const int t014 = sp.tidx[0][1][4];
    long long total = ipow(S.G.n, 5) * ipow(S.H.n, 9);
    std::atomic<long long> checked{0}, skipped{0};
    auto body = [&](long long idx) {
        if (st.failed) return;
        Labels L = decode(S, idx, 5, 5, {t014});
        L.h[t014] = 0;
        complete(S, L, 5);
        // Shared tetrahedra of the two sides; if they fail, neither side of
        // the move admits this boundary labelling.
        if (!tet_ok(S, L, 1, 2, 3, 5) || !tet_ok(S, L, 2, 3, 4, 5)) {
            ++skipped;
            return;
        }
        long e2 = ((facet_z(S, L, 1) - facet_z(S, L, 4)) % S.m + S.m) % S.m;
        std::vector<long long> counts(S.m, 0);
        for (int hin = 0; hin < S.H.n; ++hin) {
            L.h[t014] = hin;
            complete(S, L, 5);
            if (!tet_ok(S, L, 1, 2, 3, 4) || !tet_ok(S, L, 1, 2, 4, 5) ||
                !tet_ok(S, L, 1, 3, 4, 5))
                continue;
            long e1 = ((facet_z(S, L, 0) + facet_z(S, L, 2) - facet_z(S, L, 3) -
                        facet_z(S, L, 5)) %
                           S.m +
                       S.m) %
                      S.m;
            ++counts[e1];
        }
        ++checked;
        bool match = true;
        for (int e = 0; e < S.m; ++e)
            if (counts[e] != (e == e2 ? (long long)S.H.n : 0)) match = false;
        if (!match) {
            // Equal multisets are sufficient but not necessary; settle it by
            // comparing the exact cyclotomic values.
            std::vector<mpz_class> cz(S.m);
            for (int e = 0; e < S.m; ++e) cz[e] = (long)counts[e];
            std::vector<mpz_class> ez(S.m);
            ez[e2] = S.H.n;
            if (!(root_power_sum(S.m, cz) == root_power_sum(S.m, ez))) {
                L.h[t014] = 0;
                record_failure(st, "2-4 mismatch at " + describe(L, 5));
            }
        }
    };
    sweep(total, threads, serial, body);
    st.result.tuples_checked = checked;
    st.result.tuples_skipped = skipped;
    return st.result;
}

PachnerResult oracle_15(const SemiWeakStructure& S, int threads, bool serial) {
    OracleState st;
    const auto& sp = sphere();
    long long total = ipow(S.G.n, 4) * ipow(S.H.n, 6);
    long long inner = (long long)S.G.n * ipow(S.H.n, 4);
    std::atomic<long long> checked{0}, skipped{0};
    auto body = [&](long long idx) {
        if (st.failed) return;
        Labels L0 = decode(S, idx, 4, 4, {});
        complete(S, L0, 4);
        if (!tet_ok(S, L0, 1, 2, 3, 4)) {
            ++skipped;
            return;
        }
        long e2 = facet_z(S, L0, 5);
        std::vector<long long> counts(S.m, 0);
        for (long long in = 0; in < inner; ++in) {
            Labels L = L0;
            long long w = in;
            int g05 = (int)(w % S.G.n);
            w /= S.G.n;
            for (int a = 1; a <= 4; ++a) {
                L.h[sp.tidx[0][a][5]] = (int)(w % S.H.n);
                w /= S.H.n;
            }
            // Extend flatly to vertex 5: g_a5 = gamma_5 * gamma_a^-1.
            for (int a = 0; a <= 4; ++a)
                L.g[sp.eidx[a][5]] = S.G.op(g05, S.G.inv[L.ge(0, a)]);
            complete(S, L, 5);
            if (!tet_ok(S, L, 1, 2, 3, 5) || !tet_ok(S, L, 1, 2, 4, 5) ||
                !tet_ok(S, L, 1, 3, 4, 5) || !tet_ok(S, L, 2, 3, 4, 5))
                continue;
            long e1 = ((facet_z(S, L, 0) - facet_z(S, L, 1) + facet_z(S, L, 2) -
                        facet_z(S, L, 3) + facet_z(S, L, 4)) %
                           S.m +
                       S.m) %
                      S.m;
            ++counts[e1];
        }
        ++checked;
        long long expect = (long long)S.G.n * ipow(S.H.n, 4);
        bool match = true;
        for (int e = 0; e < S.m; ++e)
            if (counts[e] != (e == e2 ? expect : 0)) match = false;
        if (!match) {
            std::vector<mpz_class> cz(S.m);
            for (int e = 0; e < S.m; ++e) cz[e] = (long)counts[e];
            std::vector<mpz_class> ez(S.m);
            ez[e2] = (long)expect;
            if (!(root_power_sum(S.m, cz) == root_power_sum(S.m, ez)))
                record_failure(st, "1-5 mismatch at " + describe(L0, 4));
        }
    };
    sweep(total, threads, serial, body);
    st.result.tuples_checked = checked;
    st.result.tuples_skipped = skipped;
    return st.result;
}

}  // namespace

PachnerResult pachner_oracle(const SemiWeakStructure& S, const std::string& move,
                             int threads, bool serial_reference) {
    if (move == "3-3") return oracle_33(S, threads, serial_reference);
    if (move == "2-4") return oracle_24(S, threads, serial_reference);
    if (move == "1-5") return oracle_15(S, threads, serial_reference);
    throw std::invalid_argument("unknown Pachner move: " + move);
}

}  // namespace statesum
