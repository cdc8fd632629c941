#include <cstdint>

#include "internal.hpp"
#ifdef STATESUM_HAVE_OPENMP
#include <omp.h>
#endif

namespace statesum {

bool exponent_is_h_linear(const SemiWeakStructure& S) {
    if (!S.alpha1_is_trivial()) return false;
    for (int h1 = 0; h1 < S.H.n; ++h1)
        for (int h2 = 0; h2 < S.H.n; ++h2)
            if (S.tau_at(h1, h2) % S.m != 0) return false;
    auto additive = [&](auto&& f) {
        for (int h1 = 0; h1 < S.H.n; ++h1)
            for (int h2 = 0; h2 < S.H.n; ++h2)
                for (int a = 0; a < S.G.n; ++a)
                    for (int b = 0; b < S.G.n; ++b)
                        if ((f(S.H.add(h1, h2), a, b) - f(h1, a, b) - f(h2, a, b)) % S.m != 0)
                            return false;
        return true;
    };
    return additive([&](int h, int a, int b) { return S.iota1_at(h, a, b); }) &&
           additive([&](int h, int a, int b) { return S.iota2_at(a, h, b); }) &&
           additive([&](int h, int a, int b) { return S.iota3_at(a, b, h); });
}

bool exponent_is_h_quadratic(const SemiWeakStructure& S) {
    if (S.G.n != 1 || !S.alpha1_is_trivial()) return false;
    for (int h1 = 0; h1 < S.H.n; ++h1)
        for (int h2 = 0; h2 < S.H.n; ++h2)
            for (int h3 = 0; h3 < S.H.n; ++h3) {
                if ((S.tau_at(S.H.add(h1, h2), h3) - S.tau_at(h1, h3) - S.tau_at(h2, h3)) %
                        S.m !=
                    0)
                    return false;
                if ((S.tau_at(h1, S.H.add(h2, h3)) - S.tau_at(h1, h2) - S.tau_at(h1, h3)) %
                        S.m !=
                    0)
                    return false;
            }
    return true;
}

namespace detail {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// The bilinear pairing B(u, v) = sum over facets of eps * tau(u_klm, v_ijk),
/// on full triangle-label vectors of a cyclic H.
long pair_b(const SemiWeakStructure& S, const ComplexTables& C,
            const std::vector<long>& u, const std::vector<long>& v) {
    long e = 0;
    for (const auto& f : C.facets) {
        long t = S.tau_at((int)u[f.t[tri::klm]], (int)v[f.t[tri::ijk]]);
        e += (f.eps > 0) ? t : -t;
    }
    return ((e % S.m) + S.m) % S.m;
}

/// Kernel generators of full order for the (homogeneous, G-trivial) triangle
/// system, as label vectors, plus the total solution count.
struct QuadKernel {
    std::vector<std::vector<long>> gens;
    mpz_class labellings;
};

QuadKernel quad_kernel(const SemiWeakStructure& S, const ComplexTables& C) {
    std::vector<int> g0(C.edges.size(), 0);
    auto hs = solve_h(C, S, g0);
    if (!hs || hs->factors.size() != 1)
        throw MethodUnavailable("quadratic paths need cyclic H");
    QuadKernel k;
    k.labellings = hs->count();
    const auto& f = hs->factors[0];
    for (size_t i = 0; i < f.kernel.size(); ++i)
        if (f.orders[i] == S.H.orders[0]) k.gens.push_back(f.kernel[i]);
    // The system is homogeneous, so every generator order divides the full
    // order; generators of order 1 contribute nothing and are dropped.
    return k;
}

}  // namespace

bool quadratic_applicable(const SemiWeakStructure& S) {
    return exponent_is_h_quadratic(S) && S.H.orders.size() == 1 &&
           S.H.orders[0] == S.m && S.m % 2 == 1 && is_prime(S.m);
}

bool gray_applicable(const SemiWeakStructure& S) {
    return exponent_is_h_quadratic(S) && S.H.orders.size() == 1 && S.H.orders[0] == 2 &&
           S.m == 2;
}

StateSumResult z_quadratic(const SemiWeakStructure& S, const ComplexTables& C,
                           const ZOptions& opt) {
    (void)opt;
    const long p = S.m;
    QuadKernel K = quad_kernel(S, C);
    const int r = (int)K.gens.size();
    // Symmetrized Gram matrix M = (A + A^T) / 2 mod p of the exponent form.
    std::vector<std::vector<long>> M(r, std::vector<long>(r));
    long inv2 = (p + 1) / 2;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            M[i][j] = (pair_b(S, C, K.gens[i], K.gens[j]) +
                       pair_b(S, C, K.gens[j], K.gens[i])) %
                      p * inv2 % p;
    auto inv_mod = [&](long a) {
        long x = 1, e = p - 2, b = ((a % p) + p) % p;
        while (e) {
            if (e & 1) x = x * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return x;
    };
    // Congruent diagonalization over GF(p).
    std::vector<long> diag;
    for (int t = 0; t < r; ++t) {
        int piv = -1;
        for (int s = t; s < r && piv < 0; ++s)
            if (M[s][s] % p != 0) piv = s;
        if (piv < 0) {
            int a = -1, b = -1;
            for (int s = t; s < r && a < 0; ++s)
                for (int u = s + 1; u < r && a < 0; ++u)
                    if (M[s][u] % p != 0) a = s, b = u;
            if (a < 0) {
                for (int s = t; s < r; ++s) diag.push_back(0);
                break;
            }
            for (int c = 0; c < r; ++c) M[a][c] = (M[a][c] + M[b][c]) % p;
            for (int c = 0; c < r; ++c) M[c][a] = (M[c][a] + M[c][b]) % p;
            piv = a;
        }
        if (piv != t) {
            std::swap(M[piv], M[t]);
            for (int c = 0; c < r; ++c) std::swap(M[c][piv], M[c][t]);
        }
        long it = inv_mod(M[t][t]);
        for (int s = t + 1; s < r; ++s) {
            long f = M[s][t] * it % p;
            if (!f) continue;
            for (int c = 0; c < r; ++c) M[s][c] = ((M[s][c] - f * M[t][c]) % p + p) % p;
            for (int c = 0; c < r; ++c) M[c][s] = ((M[c][s] - f * M[c][t]) % p + p) % p;
        }
        diag.push_back(M[t][t] % p);
    }
    // Z = product of one-dimensional Gauss sums g(d) = sum_x zeta_p^(d x^2).
    StateSumResult res;
    res.normalization = normalization_factor(S, C);
    Cyclotomic prod = Cyclotomic::one((int)p);
    for (long d : diag) {
        std::vector<mpz_class> counts(p);
        for (long x = 0; x < p; ++x) counts[d * x % p * x % p] += 1;
        prod *= root_power_sum((int)p, counts);
    }
    res.value = prod * res.normalization;
    res.method = "quadratic";
    res.labellings = K.labellings;
    return res;
}

namespace {

/// Sum of (-1)^(a.x + sum_{i<j} B_ij x_i x_j) over x in F_2^r, by symplectic
/// pair elimination: summing a hyperbolic pair (x_i, x_j) out contributes a
/// factor 2(-1)^(P.R) with P, R the linear forms coupled to x_i and x_j; a
/// variable with no quadratic coupling contributes 2 when its linear
/// coefficient vanishes and kills the sum otherwise.  Returns sign * 2^pow2
/// as (sign, pow2) with sign 0 for the zero sum.
std::pair<int, long> quadratic_f2_sum(int r, std::vector<std::vector<uint64_t>> B,
                                      std::vector<uint64_t> a) {
    const int W = r ? (int)B[0].size() : 0;
    std::vector<uint64_t> alive(W, 0);
    for (int i = 0; i < r; ++i) alive[i >> 6] |= uint64_t(1) << (i & 63);
    auto get = [&](const std::vector<uint64_t>& v, int k) {
        return (v[k >> 6] >> (k & 63)) & 1;
    };
    auto clr = [&](std::vector<uint64_t>& v, int k) {
        v[k >> 6] &= ~(uint64_t(1) << (k & 63));
    };
    int c = 0;
    long pow2 = 0;
    std::vector<uint64_t> P(W), R(W);
    while (true) {
        int pi = -1, pj = -1;
        for (int i = 0; i < r && pi < 0; ++i) {
            if (!get(alive, i)) continue;
            for (int w = 0; w < W; ++w)
                if (uint64_t m = B[i][w] & alive[w]) {
                    pi = i;
                    pj = w * 64 + __builtin_ctzll(m);
                    break;
                }
        }
        if (pi < 0) break;
        for (int w = 0; w < W; ++w) {
            P[w] = B[pi][w] & alive[w];
            R[w] = B[pj][w] & alive[w];
        }
        clr(P, pj);
        clr(R, pi);
        int p0 = get(a, pi), r0 = get(a, pj);
        clr(alive, pi);
        clr(alive, pj);
        ++pow2;
        for (int k = 0; k < r; ++k) {
            if (!get(alive, k)) continue;
            if (get(P, k))
                for (int w = 0; w < W; ++w) B[k][w] ^= R[w];
            if (get(R, k))
                for (int w = 0; w < W; ++w) B[k][w] ^= P[w];
        }
        for (int w = 0; w < W; ++w) {
            uint64_t diag = P[w] & R[w];
            a[w] ^= diag;
            if (p0) a[w] ^= R[w];
            if (r0) a[w] ^= P[w];
        }
        c ^= p0 & r0;
    }
    for (int k = 0; k < r; ++k)
        if (get(alive, k)) {
            if (get(a, k)) return {0, 0};
            ++pow2;
        }
    return {c ? -1 : 1, pow2};
}

/// Closed-form gray evaluation for kernels too large to walk.
StateSumResult z_gray_closed(const SemiWeakStructure& S, const ComplexTables& C,
                             const QuadKernel& K) {
    const int r = (int)K.gens.size();
    const size_t ntris = C.tris.size();
    const int TW = (int)((ntris + 63) / 64);
    const int W = (r + 63) / 64;
    // With H = Z/2 and m = 2 the facet exponent is tau(1,1) * u[klm] * v[ijk]
    // summed over facets (the orientation sign is irrelevant mod 2), so the
    // form on the kernel basis is assembled from bitset dot products.
    int tau11 = (int)(S.tau_at(1, 1) & 1);
    std::vector<std::vector<uint64_t>> gb(r, std::vector<uint64_t>(TW, 0));
    std::vector<std::vector<uint64_t>> yb(r, std::vector<uint64_t>(TW, 0));
    for (int i = 0; i < r; ++i)
        for (size_t t = 0; t < ntris; ++t)
            if (K.gens[i][t] & 1) gb[i][t >> 6] |= uint64_t(1) << (t & 63);
    if (tau11)
        for (int i = 0; i < r; ++i)
            for (const auto& fc : C.facets)
                if ((gb[i][fc.t[0] >> 6] >> (fc.t[0] & 63)) & 1)
                    yb[i][fc.t[9] >> 6] ^= uint64_t(1) << (fc.t[9] & 63);
    auto dot = [&](const std::vector<uint64_t>& u, const std::vector<uint64_t>& v) {
        int p = 0;
        for (int w = 0; w < TW; ++w) p ^= (int)(__builtin_popcountll(u[w] & v[w]) & 1);
        return p;
    };
    std::vector<std::vector<uint64_t>> B(r, std::vector<uint64_t>(W, 0));
    std::vector<uint64_t> a(W, 0);
    for (int i = 0; i < r; ++i) {
        if (dot(gb[i], yb[i])) a[i >> 6] |= uint64_t(1) << (i & 63);
        for (int j = i + 1; j < r; ++j)
            if (dot(gb[j], yb[i]) ^ dot(gb[i], yb[j])) {
                B[i][j >> 6] |= uint64_t(1) << (j & 63);
                B[j][i >> 6] |= uint64_t(1) << (i & 63);
            }
    }
    auto [sign, pow2] = quadratic_f2_sum(r, std::move(B), std::move(a));
    mpz_class sum = 0;
    if (sign != 0) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mpz_class(2).get_mpz_t(), pow2);
        sum = sign > 0 ? p : -p;
    }
    StateSumResult res;
    res.normalization = normalization_factor(S, C);
    res.value = Cyclotomic::from_rational(2, mpq_class(sum)) * res.normalization;
    res.method = "gray-closed";
    res.labellings = K.labellings;
    return res;
}

}  // namespace

StateSumResult z_gray(const SemiWeakStructure& S, const ComplexTables& C,
                      const ZOptions& opt) {
    QuadKernel K = quad_kernel(S, C);
    const int r = (int)K.gens.size();
    if (r >= 62 || (mpz_class(1) << r) > opt.budget) return z_gray_closed(S, C, K);
    // Mod-2 data of the exponent form on the kernel basis: Q[i] is the value
    // on generator i, Brow[i] has bit j set when generators i and j cross.
    std::vector<uint64_t> Brow(r, 0);
    std::vector<int> Q(r);
    for (int i = 0; i < r; ++i) {
        Q[i] = (int)pair_b(S, C, K.gens[i], K.gens[i]) & 1;
        for (int j = 0; j < r; ++j)
            if (j != i &&
                ((pair_b(S, C, K.gens[i], K.gens[j]) +
                  pair_b(S, C, K.gens[j], K.gens[i])) &
                 1))
                Brow[i] |= uint64_t(1) << j;
    }
    const uint64_t total = uint64_t(1) << r;
    // Direct evaluation of the form at an arbitrary state, used to seed each
    // chunk of the Gray-code walk.
    auto eval = [&](uint64_t t) {
        int par = 0;
        for (int i = 0; i < r; ++i)
            if (t >> i & 1)
                par ^= Q[i] ^ (int)(__builtin_popcountll(t & Brow[i] &
                                                         ~((uint64_t(2) << i) - 1)) &
                                    1);
        return par;
    };
    int nchunks = 1;
#ifdef STATESUM_HAVE_OPENMP
    if (!opt.serial_reference) {
        int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
        while (nchunks < nt && (uint64_t)nchunks * 2 <= total) nchunks *= 2;
    }
#endif
    std::vector<mpz_class> plus(nchunks), minus(nchunks);
#ifdef STATESUM_HAVE_OPENMP
#pragma omp parallel for num_threads(nchunks) schedule(static, 1)
#endif
    for (int c = 0; c < nchunks; ++c) {
        const uint64_t lo = total / nchunks * c, hi = total / nchunks * (c + 1);
        uint64_t t = lo ^ (lo >> 1);  // Gray code of the chunk start
        int par = eval(t);
        long long pl = 0, mi = 0;
        (par ? mi : pl)++;
        for (uint64_t k = lo + 1; k < hi; ++k) {
            int i = __builtin_ctzll(k);
            par ^= Q[i] ^ (int)(__builtin_popcountll(t & Brow[i]) & 1);
            t ^= uint64_t(1) << i;
            (par ? mi : pl)++;
        }
        plus[c] = (long)pl;
        minus[c] = (long)mi;
    }
    std::vector<mpz_class> counts(2);
    for (int c = 0; c < nchunks; ++c) {
        counts[0] += plus[c];
        counts[1] += minus[c];
    }
    StateSumResult res;
    res.normalization = normalization_factor(S, C);
    res.value = root_power_sum(2, counts) * res.normalization;
    res.method = "gray";
    res.labellings = K.labellings;
    return res;
}

}  // namespace detail
}  // namespace statesum
