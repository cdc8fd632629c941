#include <numeric>

#include "internal.hpp"
#ifdef STATESUM_HAVE_OPENMP
#include <omp.h>
#endif

namespace statesum {
namespace detail {

long total_exponent(const SemiWeakStructure& S, const ComplexTables& C,
                    const std::vector<int>& g, const std::vector<int>& h) {
    long e = 0;
    for (const auto& f : C.facets) {
        long z = z_simplex_exponent(S, facet_labels(f, g, h));
        e += (f.eps > 0) ? z : -z;
    }
    return ((e % S.m) + S.m) % S.m;
}

mpq_class normalization_factor(const SemiWeakStructure& S, const ComplexTables& C) {
    // (#G)^(-v0) (#H)^(v0-v1)
    mpz_class num = 1, den = 1;
    mpz_pow_ui(num.get_mpz_t(), mpz_class(S.H.n).get_mpz_t(), C.v0);
    mpz_pow_ui(den.get_mpz_t(), mpz_class(S.G.n).get_mpz_t(), C.v0);
    mpz_class hp;
    mpz_pow_ui(hp.get_mpz_t(), mpz_class(S.H.n).get_mpz_t(), C.v1);
    den *= hp;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

StateSumResult z_brute(const SemiWeakStructure& S, const ComplexTables& C,
                       const ZOptions& opt) {
    std::vector<mpz_class> counts(S.m);
    mpz_class labellings = 0;
    enumerate_labellings(C, S, opt.budget,
                         [&](const std::vector<int>& g, const std::vector<int>& h) {
                             counts[total_exponent(S, C, g, h)] += 1;
                             ++labellings;
                             return true;
                         });
    StateSumResult r;
    r.normalization = normalization_factor(S, C);
    r.value = root_power_sum(S.m, counts) * r.normalization;
    r.method = "brute";
    r.labellings = labellings;
    return r;
}

namespace {

bool prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long inv_mod(long a, long n) {
    long t = 0, nt = 1, r = n, nr = a % n;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return ((t % n) + n) % n;
}

/// Per-cyclic-factor Smith solver for the triangle system A h = b (mod n).
/// A depends only on the complex, so one Smith decomposition serves every
/// flat g-labelling; per labelling only two long-integer matrix-vector
/// products remain.
struct FactorSolver {
    long n = 1;
    int rows = 0, cols = 0;
    std::vector<std::vector<long>> Ul, Vl;  ///< U, V reduced mod n
    std::vector<long> dg;    ///< gcd(D_ii, n); n for a zero or absent diagonal
    std::vector<long> dinv;  ///< inverse of D_ii/dg mod n/dg (when dg != n)
    std::vector<std::vector<long>> kernel;  ///< generators, length = #triangles
    std::vector<long> orders;

    /// For prime n, replace the Smith-derived kernel basis by a systematic
    /// one from GF(n) elimination: one generator per free column with a 1
    /// there and entries only in pivot columns, so the generators are sparse.
    void systematic_kernel(const std::vector<std::vector<long>>& A) {
        std::vector<std::vector<long>> R(rows, std::vector<long>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) R[i][j] = ((A[i][j] % n) + n) % n;
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (R[i][c]) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(R[p], R[r]);
            long inv = inv_mod(R[r][c], n);
            for (int j = c; j < cols; ++j) R[r][j] = (R[r][j] * inv) % n;
            for (int i = 0; i < rows; ++i)
                if (i != r && R[i][c]) {
                    long f = R[i][c];
                    for (int j = c; j < cols; ++j)
                        R[i][j] = (R[i][j] + (n - f) * R[r][j]) % n;
                }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<char> is_pivot(cols, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        kernel.clear();
        orders.clear();
        for (int c = 0; c < cols; ++c) {
            if (is_pivot[c]) continue;
            std::vector<long> gen(cols, 0);
            gen[c] = 1;
            for (int i = 0; i < (int)pivot_col.size(); ++i)
                if (R[i][c]) gen[pivot_col[i]] = n - R[i][c];
            kernel.push_back(std::move(gen));
            orders.push_back(n);
        }
    }

    FactorSolver(const SmithDecomposition& s, long mod) : n(mod) {
        rows = (int)s.U.size();
        cols = (int)s.V.size();
        auto red = [&](const IntMatrix& M) {
            std::vector<std::vector<long>> R(M.size(), std::vector<long>(M.size()));
            for (size_t i = 0; i < M.size(); ++i)
                for (size_t j = 0; j < M.size(); ++j)
                    R[i][j] = (long)mpz_class(((M[i][j] % n) + n) % n).get_si();
            return R;
        };
        Ul = red(s.U);
        Vl = red(s.V);
        int lim = std::min(rows, cols);
        dg.assign(cols, n);
        dinv.assign(cols, 0);
        for (int i = 0; i < cols; ++i) {
            if (i < lim && s.D[i][i] != 0) {
                mpz_class gg = gcd(s.D[i][i], mpz_class(n));
                dg[i] = (long)gg.get_si();
            }
            if (dg[i] != n) {
                long nn = n / dg[i];
                long dd = (long)mpz_class(((s.D[i][i] / dg[i]) % nn + nn) % nn).get_si();
                dinv[i] = inv_mod(dd, nn);
            }
            if (dg[i] > 1) {
                std::vector<long> gen(cols);
                long scale = n / dg[i];
                for (int t = 0; t < cols; ++t) gen[t] = (Vl[t][i] * scale) % n;
                kernel.push_back(std::move(gen));
                orders.push_back(dg[i]);
            }
        }
    }

    /// Particular solution mod n, or false when the system is inconsistent.
    bool solve(const std::vector<long>& b, std::vector<long>& x) const {
        std::vector<long> y(cols, 0);
        for (int i = 0; i < rows; ++i) {
            long acc = 0;
            for (int j = 0; j < rows; ++j) acc += Ul[i][j] * b[j];
            long ci = acc % n;
            if (i >= cols) {
                if (ci != 0) return false;
                continue;
            }
            if (ci % dg[i] != 0) return false;
            if (dg[i] != n) y[i] = ((ci / dg[i]) * dinv[i]) % (n / dg[i]);
        }
        x.assign(cols, 0);
        for (int t = 0; t < cols; ++t) {
            long acc = 0;
            for (int i = 0; i < cols; ++i)
                if (y[i]) acc += Vl[t][i] * y[i];
            x[t] = acc % n;
        }
        return true;
    }
};

/// Everything g-independent about the linear fast path.
struct LinearContext {
    const SemiWeakStructure& S;
    const ComplexTables& C;
    std::vector<FactorSolver> factors;
    std::vector<long> stride;  ///< mixed-radix strides of H components
    std::vector<int> unit;     ///< generator of each cyclic factor, as H element
    /// alpha0 argument edges per tetrahedron: (cd, bc, ab).
    std::vector<std::array<int, 3>> tet_edges;
    mpz_class kernel_count = 1;
    bool alpha0_zero = true;
    /// Per factor: does iota1/2/3 vanish for every g when the h slot holds
    /// the factor's unit generator?
    std::vector<std::array<bool, 3>> iota_unit_zero;
    /// Nonzero kernel generator entries per factor: (triangle, coefficient).
    std::vector<std::vector<std::vector<std::pair<int, long>>>> sparse_kernel;

    LinearContext(const SemiWeakStructure& s, const ComplexTables& c) : S(s), C(c) {
        for (const auto& t : C.tets)
            tet_edges.push_back({C.edge_idx.at({t[2], t[3]}), C.edge_idx.at({t[1], t[2]}),
                                 C.edge_idx.at({t[0], t[1]})});
        long mult = 1;
        for (size_t f = 0; f < S.H.orders.size(); ++f) {
            stride.push_back(mult);
            std::vector<int> e(S.H.orders.size(), 0);
            e[f] = 1;
            unit.push_back(S.H.from_components(e));
            mult *= S.H.orders[f];
        }
        if (!S.H.orders.empty()) {
            IntMatrix A(C.tets.size(), std::vector<mpz_class>(C.tris.size(), 0));
            for (size_t r = 0; r < C.tets.size(); ++r) {
                const auto& t = C.tets[r];
                A[r][C.tri_idx.at({t[1], t[2], t[3]})] += 1;
                A[r][C.tri_idx.at({t[0], t[2], t[3]})] -= 1;
                A[r][C.tri_idx.at({t[0], t[1], t[3]})] += 1;
                A[r][C.tri_idx.at({t[0], t[1], t[2]})] -= 1;
            }
            SmithDecomposition snf = smith_normal_form(A);
            std::vector<std::vector<long>> Al(C.tets.size(),
                                              std::vector<long>(C.tris.size()));
            for (size_t r = 0; r < C.tets.size(); ++r)
                for (size_t t = 0; t < C.tris.size(); ++t)
                    Al[r][t] = (long)A[r][t].get_si();
            for (long n : S.H.orders) {
                factors.emplace_back(snf, n);
                if (prime_long(n)) factors.back().systematic_kernel(Al);
            }
        }
        for (const auto& f : factors)
            for (long o : f.orders) kernel_count *= o;
        for (int a = 0; a < S.G.n && alpha0_zero; ++a)
            for (int b2 = 0; b2 < S.G.n && alpha0_zero; ++b2)
                for (int c2 = 0; c2 < S.G.n; ++c2)
                    if (S.alpha0_at(a, b2, c2) != 0) {
                        alpha0_zero = false;
                        break;
                    }
        for (size_t f = 0; f < factors.size(); ++f) {
            std::array<bool, 3> z{true, true, true};
            for (int a = 0; a < S.G.n; ++a)
                for (int b2 = 0; b2 < S.G.n; ++b2) {
                    if (S.iota1_at(unit[f], a, b2) != 0) z[0] = false;
                    if (S.iota2_at(a, unit[f], b2) != 0) z[1] = false;
                    if (S.iota3_at(a, b2, unit[f]) != 0) z[2] = false;
                }
            iota_unit_zero.push_back(z);
        }
        for (const auto& f : factors) {
            sparse_kernel.emplace_back();
            for (const auto& gen : f.kernel) {
                std::vector<std::pair<int, long>> nz;
                for (size_t t = 0; t < gen.size(); ++t)
                    if (gen[t]) nz.push_back({(int)t, gen[t]});
                sparse_kernel.back().push_back(std::move(nz));
            }
        }
    }

    /// Add one flat g-labelling's coset contribution to counts/labellings.
    void accumulate(const std::vector<int>& g, std::vector<mpz_class>& counts,
                    mpz_class& labellings) const {
        size_t ntris = C.tris.size();
        // Particular solution per factor, assembled into H triangle labels.
        // With alpha0 identically zero the all-zero labelling always solves
        // the tetra system, so the Smith solve is skipped.
        std::vector<int> h;
        if (!alpha0_zero && !factors.empty()) {
            h.assign(ntris, 0);
            std::vector<long> b(C.tets.size());
            std::vector<long> part;
            for (size_t f = 0; f < factors.size(); ++f) {
                long n = factors[f].n;
                for (size_t r = 0; r < C.tets.size(); ++r) {
                    long a0 = S.alpha0_at(g[tet_edges[r][0]], g[tet_edges[r][1]],
                                          g[tet_edges[r][2]]);
                    b[r] = (a0 / stride[f]) % n;
                }
                if (!factors[f].solve(b, part)) return;
                for (size_t t = 0; t < ntris; ++t) h[t] += (int)(part[t] * stride[f]);
            }
        }
        labellings += kernel_count;
        // Exponent shift of each factor's unit generator per triangle.  Under
        // the additivity conditions the facet exponent (fast-path formula in
        // z_simplex_exponent) reads h only through -iota1(h_klm, g_jk, g_ij),
        // +iota2(g_lm, h_jkl, g_ij) and -iota3(g_lm, g_kl, h_ijk), so the
        // shifts come straight off those tables.  A kernel generator with a
        // nonzero shift kills the whole coset (its orbit sums a complete set
        // of roots of unity).
        for (size_t f = 0; f < factors.size(); ++f) {
            if (sparse_kernel[f].empty()) continue;
            const auto& iz = iota_unit_zero[f];
            if (iz[0] && iz[1] && iz[2]) continue;
            std::vector<long> w(ntris, 0);
            int u = unit[f];
            for (const auto& fc : C.facets) {
                if (!iz[0]) {
                    long d9 = -S.iota1_at(u, g[fc.e[4]], g[fc.e[0]]);
                    if (d9) w[fc.t[9]] += fc.eps * d9;
                }
                if (!iz[1]) {
                    long d6 = S.iota2_at(g[fc.e[9]], u, g[fc.e[0]]);
                    if (d6) w[fc.t[6]] += fc.eps * d6;
                }
                if (!iz[2]) {
                    long d0 = -S.iota3_at(g[fc.e[9]], g[fc.e[7]], u);
                    if (d0) w[fc.t[0]] += fc.eps * d0;
                }
            }
            for (const auto& gen : sparse_kernel[f]) {
                long ei = 0;
                for (const auto& [t, cf] : gen) ei += cf * w[t];
                if (ei % S.m != 0) return;
            }
        }
        long e0;
        if (h.empty()) {
            // All h-labels zero: only the pentagonator term survives.
            long e = 0;
            for (const auto& fc : C.facets) {
                long z = S.pi_at(g[fc.e[9]], g[fc.e[7]], g[fc.e[4]], g[fc.e[0]]);
                e += (fc.eps > 0) ? z : -z;
            }
            e0 = ((e % S.m) + S.m) % S.m;
        } else {
            e0 = total_exponent(S, C, g, h);
        }
        counts[e0] += kernel_count;
    }
};

}  // namespace

StateSumResult z_linear(const SemiWeakStructure& S, const ComplexTables& C,
                        const ZOptions& opt) {
    mpz_class bound = flat_count_bound(C, S.G);
    if (bound > opt.budget)
        throw BudgetExceeded("linear path declined: up to " + bound.get_str() +
                             " flat edge labellings exceed budget " +
                             opt.budget.get_str());
    LinearContext ctx(S, C);
    std::vector<mpz_class> counts(S.m);
    mpz_class labellings = 0;
    std::vector<std::vector<int>> buf;
    const size_t batch = 1 << 14;
    auto flush = [&]() {
#ifdef STATESUM_HAVE_OPENMP
        if (!opt.serial_reference) {
            int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
            {
                std::vector<mpz_class> lc(S.m);
                mpz_class ll = 0;
#pragma omp for schedule(dynamic, 64)
                for (long i = 0; i < (long)buf.size(); ++i)
                    ctx.accumulate(buf[i], lc, ll);
#pragma omp critical(statesum_linear_merge)
                {
                    for (int e = 0; e < S.m; ++e) counts[e] += lc[e];
                    labellings += ll;
                }
            }
            buf.clear();
            return;
        }
#endif
        for (const auto& g : buf) ctx.accumulate(g, counts, labellings);
        buf.clear();
    };
    enumerate_flat_g(C, S.G, [&](const std::vector<int>& g) {
        buf.push_back(g);
        if (buf.size() >= batch) flush();
        return true;
    });
    flush();
    StateSumResult r;
    r.normalization = normalization_factor(S, C);
    r.value = root_power_sum(S.m, counts) * r.normalization;
    r.method = "linear";
    r.labellings = labellings;
    return r;
}

}  // namespace detail

StateSumResult z_total(const SemiWeakStructure& S, const OrderedTriangulation& T,
                       const ZOptions& opt) {
    ComplexTables C(T);
    using namespace detail;
    switch (opt.method) {
        case Method::Brute:
            return z_brute(S, C, opt);
        case Method::Linear:
            if (!exponent_is_h_linear(S))
                throw MethodUnavailable("linear method needs trivial tau/alpha1 and "
                                        "H-additive interchangers");
            return z_linear(S, C, opt);
        case Method::Quadratic:
            if (!quadratic_applicable(S))
                throw MethodUnavailable("quadratic method needs trivial G, quadratic "
                                        "exponent and cyclic H of odd prime order m");
            return z_quadratic(S, C, opt);
        case Method::Gray:
            if (!gray_applicable(S))
                throw MethodUnavailable("gray method needs trivial G, quadratic "
                                        "exponent and H = Z/2 with m = 2");
            return z_gray(S, C, opt);
        case Method::Auto:
            break;
    }
    if (exponent_is_h_linear(S)) return z_linear(S, C, opt);
    if (gray_applicable(S)) return z_gray(S, C, opt);
    if (quadratic_applicable(S)) return z_quadratic(S, C, opt);
    return z_brute(S, C, opt);
}

}  // namespace statesum
