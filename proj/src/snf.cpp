#include "statesum/snf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace statesum {

std::vector<mpz_class> SmithDecomposition::diagonal() const {
    std::vector<mpz_class> d;
    size_t n = std::min(D.size(), D.empty() ? 0 : D[0].size());
    for (size_t i = 0; i < n; ++i) d.push_back(D[i][i]);
    return d;
}

int SmithDecomposition::rank() const {
    int r = 0;
    for (const auto& d : diagonal())
        if (d != 0) ++r;
    return r;
}

IntMatrix identity_matrix(int n) {
    IntMatrix I(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMatrix matmul(const IntMatrix& A, const IntMatrix& B) {
    int r = (int)A.size(), k = r ? (int)A[0].size() : 0, c = B.empty() ? 0 : (int)B[0].size();
    IntMatrix C(r, std::vector<mpz_class>(c, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j) {
            if (A[i][j] == 0) continue;
            for (int l = 0; l < c; ++l) C[i][l] += A[i][j] * B[j][l];
        }
    return C;
}

mpz_class abs_det(IntMatrix A) {
    int n = (int)A.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (A[i][k] != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != k) { std::swap(A[p], A[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                A[i][j] = A[k][k] * A[i][j] - A[i][k] * A[k][j];
                A[i][j] /= prev;  // exact (Bareiss)
            }
            A[i][k] = 0;
        }
        prev = A[k][k];
    }
    return abs(A[n - 1][n - 1]);
}

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    int rows = (int)A.size(), cols = rows ? (int)A[0].size() : 0;
    SmithDecomposition s;
    s.D = A;
    s.U = identity_matrix(rows);
    s.V = identity_matrix(cols);
    auto& D = s.D;
    auto& U = s.U;
    auto& V = s.V;

    auto row_add = [&](int dst, int src, const mpz_class& c) {
        for (int j = 0; j < cols; ++j) D[dst][j] += c * D[src][j];
        for (int j = 0; j < rows; ++j) U[dst][j] += c * U[src][j];
    };
    auto col_add = [&](int dst, int src, const mpz_class& c) {
        for (int i = 0; i < rows; ++i) D[i][dst] += c * D[i][src];
        for (int i = 0; i < cols; ++i) V[i][dst] += c * V[i][src];
    };
    auto row_swap = [&](int a, int b) { std::swap(D[a], D[b]); std::swap(U[a], U[b]); };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(D[i][a], D[i][b]);
        for (int i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
    };
    auto row_neg = [&](int a) {
        for (int j = 0; j < cols; ++j) D[a][j] = -D[a][j];
        for (int j = 0; j < rows; ++j) U[a][j] = -U[a][j];
    };

    int t = 0;
    int limit = std::min(rows, cols);
    while (t < limit) {
        // find nonzero pivot with smallest absolute value in D[t.., t..]
        int pi = -1, pj = -1;
        mpz_class best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (D[i][j] != 0 && (pi < 0 || abs(D[i][j]) < best)) {
                    best = abs(D[i][j]);
                    pi = i; pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        if (D[t][t] < 0) row_neg(t);

        bool clean = true;
        for (int i = t + 1; i < rows; ++i)
            if (D[i][t] != 0) {
                mpz_class q = D[i][t] / D[t][t];
                // round toward making the remainder small
                row_add(i, t, -q);
                if (D[i][t] != 0) clean = false;
            }
        for (int j = t + 1; j < cols; ++j)
            if (D[t][j] != 0) {
                mpz_class q = D[t][j] / D[t][t];
                col_add(j, t, -q);
                if (D[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // smaller entries appeared; redo pivot selection

        // divisibility: D[t][t] must divide all remaining entries
        bool fixed = false;
        for (int i = t + 1; i < rows && !fixed; ++i)
            for (int j = t + 1; j < cols && !fixed; ++j)
                if (D[i][j] % D[t][t] != 0) {
                    row_add(t, i, 1);
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }
    return s;
}

namespace {

long mod_pos(long a, long n) { long r = a % n; return r < 0 ? r + n : r; }

long mod_inv(long a, long n) {
    long t = 0, nt = 1, r = n, nr = mod_pos(a, n);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::logic_error("mod_inv: not invertible");
    return mod_pos(t, n);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Gaussian elimination over the prime field Z/p.
std::optional<ModSolution> solve_prime(std::vector<std::vector<long>> A, std::vector<long> b, long p) {
    int rows = (int)A.size(), cols = rows ? (int)A[0].size() : 0;
    if (!rows) cols = 0;
    for (auto& row : A)
        for (auto& x : row) x = mod_pos(x, p);
    for (auto& x : b) x = mod_pos(x, p);

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (A[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(A[pr], A[r]);
        std::swap(b[pr], b[r]);
        long inv = mod_inv(A[r][c], p);
        for (int j = c; j < cols; ++j) A[r][j] = mod_pos(A[r][j] * inv, p);
        b[r] = mod_pos(b[r] * inv, p);
        for (int i = 0; i < rows; ++i)
            if (i != r && A[i][c] != 0) {
                long f = A[i][c];
                for (int j = c; j < cols; ++j) A[i][j] = mod_pos(A[i][j] - f * A[r][j], p);
                b[i] = mod_pos(b[i] - f * b[r], p);
            }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;

    ModSolution s;
    s.particular.assign(cols, 0);
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < r; ++i) {
        s.particular[pivot_col[i]] = b[i];
        is_pivot[pivot_col[i]] = true;
    }
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<long> g(cols, 0);
        g[c] = 1;
        for (int i = 0; i < r; ++i) g[pivot_col[i]] = mod_pos(-A[i][c], p);
        s.kernel.push_back(std::move(g));
        s.orders.push_back(p);
    }
    return s;
}

}  // namespace

mpz_class ModSolution::count() const {
    mpz_class c = 1;
    for (long o : orders) c *= o;
    return c;
}

std::optional<ModSolution> solve_mod(const std::vector<std::vector<long>>& A,
                                     const std::vector<long>& b, long n) {
    int rows = (int)A.size(), cols = rows ? (int)A[0].size() : 0;
    if ((int)b.size() != rows) throw std::invalid_argument("solve_mod: shape mismatch");
    if (n == 1) {
        ModSolution s;
        s.particular.assign(cols, 0);
        return s;
    }
    if (is_prime(n)) return solve_prime(A, b, n);

    IntMatrix Az(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) Az[i][j] = A[i][j];
    SmithDecomposition s = smith_normal_form(Az);

    // c = U b mod n
    std::vector<long> c(rows, 0);
    for (int i = 0; i < rows; ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < rows; ++j) acc += s.U[i][j] * b[j];
        c[i] = mod_pos((long)mpz_class(acc % n).get_si(), n);
    }
    int lim = std::min(rows, cols);
    std::vector<long> y(cols, 0);
    ModSolution out;
    for (int i = 0; i < cols; ++i) {
        long d = (i < lim) ? (long)mpz_class(s.D[i][i] % n).get_si() : 0;
        long di_g;
        if (i < lim && s.D[i][i] != 0) {
            mpz_class gg = gcd(s.D[i][i], mpz_class(n));
            di_g = (long)gg.get_si();
        } else {
            di_g = n;  // zero (or absent) diagonal entry
        }
        long ci = (i < rows) ? c[i] : 0;
        if (ci % di_g != 0) return std::nullopt;
        if (di_g != n) {
            long nn = n / di_g;
            long dd = mod_pos(d / di_g, nn);
            y[i] = mod_pos((ci / di_g) * mod_inv(dd, nn), nn);
        }
        if (di_g > 1) {
            std::vector<long> gen(cols, 0);
            gen[i] = n / di_g;
            out.kernel.push_back(std::move(gen));
            out.orders.push_back(di_g);
        }
    }
    for (int i = cols; i < rows; ++i)
        if (c[i] != 0) return std::nullopt;

    // map back through V
    auto apply_V = [&](const std::vector<long>& v) {
        std::vector<long> x(cols, 0);
        for (int i = 0; i < cols; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j < cols; ++j) acc += s.V[i][j] * v[j];
            x[i] = mod_pos((long)mpz_class(acc % n).get_si(), n);
        }
        return x;
    };
    out.particular = apply_V(y);
    for (auto& g : out.kernel) g = apply_V(g);
    return out;
}

}  // namespace statesum
