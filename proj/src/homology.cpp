#include <set>
#include <sstream>

#include "statesum/complex.hpp"
#include "statesum/snf.hpp"

namespace statesum {

namespace {

/// Boundary matrix d_k: C_k -> C_{k-1} with alternating signs.
IntMatrix boundary_matrix(const OrderedTriangulation& t, int k,
                          const std::vector<std::vector<int>>& rows_faces,
                          const std::vector<std::vector<int>>& cols_faces) {
    std::map<std::vector<int>, int> row_of;
    for (int i = 0; i < (int)rows_faces.size(); ++i) row_of[rows_faces[i]] = i;
    IntMatrix a(rows_faces.size(), std::vector<mpz_class>(cols_faces.size(), 0));
    for (int j = 0; j < (int)cols_faces.size(); ++j)
        for (int p = 0; p <= k; ++p) {
            std::vector<int> r = cols_faces[j];
            r.erase(r.begin() + p);
            a[row_of[r]][j] += (p % 2 ? -1 : 1);
        }
    return a;
}

/// Elementary divisors of an integer matrix, without the U/V transforms.
/// Boundary matrices are sparse and almost entirely reducible with unit
/// pivots, so eliminate those on a sparse representation first and run the
/// dense Smith algorithm only on the small residual block.
std::vector<mpz_class> elementary_divisors(const IntMatrix& a) {
    int rows = (int)a.size(), cols = rows ? (int)a[0].size() : 0;
    std::vector<std::map<int, mpz_class>> row(rows);
    std::vector<std::set<int>> col_rows(cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (a[i][j] != 0) {
                row[i][j] = a[i][j];
                col_rows[j].insert(i);
            }
    std::vector<char> row_done(rows, 0), col_done(cols, 0);
    long units = 0;
    while (true) {
        // pivot: a +-1 entry in the sparsest live row (cheap min-fill proxy)
        int pr = -1, pc = -1;
        size_t best = 0;
        for (int i = 0; i < rows; ++i) {
            if (row_done[i] || row[i].empty()) continue;
            if (pr >= 0 && row[i].size() >= best) continue;
            for (const auto& [j, v] : row[i])
                if (v == 1 || v == -1) {
                    if (pr < 0 || row[i].size() < best ||
                        col_rows[j].size() < col_rows[pc].size()) {
                        pr = i;
                        pc = j;
                        best = row[i].size();
                    }
                    break;
                }
        }
        if (pr < 0) break;
        mpz_class piv = row[pr][pc];
        std::vector<int> hit(col_rows[pc].begin(), col_rows[pc].end());
        for (int i : hit) {
            if (i == pr || row_done[i]) continue;
            mpz_class f = row[i][pc] * piv;  // piv is +-1, so f = entry / piv
            for (const auto& [j, v] : row[pr]) {
                auto it = row[i].find(j);
                if (it == row[i].end()) {
                    row[i][j] = -f * v;
                    col_rows[j].insert(i);
                } else {
                    it->second -= f * v;
                    if (it->second == 0) {
                        row[i].erase(it);
                        col_rows[j].erase(i);
                    }
                }
            }
        }
        for (const auto& [j, v] : row[pr]) col_rows[j].erase(pr);
        row[pr].clear();
        row_done[pr] = 1;
        col_done[pc] = 1;
        ++units;
    }
    // dense Smith on whatever is left
    std::vector<int> live_r, live_c;
    for (int i = 0; i < rows; ++i)
        if (!row_done[i] && !row[i].empty()) live_r.push_back(i);
    std::set<int> lc;
    for (int i : live_r)
        for (const auto& [j, v] : row[i]) lc.insert(j);
    live_c.assign(lc.begin(), lc.end());
    std::vector<mpz_class> divisors(units, 1);
    if (!live_r.empty()) {
        IntMatrix rest(live_r.size(), std::vector<mpz_class>(live_c.size(), 0));
        for (size_t i = 0; i < live_r.size(); ++i)
            for (size_t j = 0; j < live_c.size(); ++j) {
                auto it = row[live_r[i]].find(live_c[j]);
                if (it != row[live_r[i]].end()) rest[i][j] = it->second;
            }
        SmithDecomposition s = smith_normal_form(rest);
        for (const auto& d : s.diagonal())
            if (d != 0) divisors.push_back(d);
    }
    return divisors;
}

long rank_mod_p(IntMatrix a, long p) {
    if (a.empty() || a[0].empty()) return 0;
    int rows = a.size(), cols = a[0].size();
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long v = mpz_class(a[i][j] % p).get_si();
            m[i][j] = (v % p + p) % p;
        }
    long rank = 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        // normalise pivot to 1
        long inv = 1, base = m[r][c] % p, e = p - 2;
        for (long b = base; e; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || !m[i][c]) continue;
            long f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace

std::string HomologyGroup::describe() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < betti; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<HomologyGroup> homology(const OrderedTriangulation& t) {
    std::vector<std::vector<std::vector<int>>> fs(t.dim + 1);
    for (int k = 0; k <= t.dim; ++k) fs[k] = t.faces(k);
    std::vector<long> rank(t.dim + 2, 0);               // rank of d_k, k = 1..dim
    std::vector<std::vector<mpz_class>> tor(t.dim + 2); // torsion of coker contribution of d_{k+1}
    for (int k = 1; k <= t.dim; ++k) {
        IntMatrix a = boundary_matrix(t, k, fs[k - 1], fs[k]);
        std::vector<mpz_class> divs = elementary_divisors(a);
        rank[k] = (long)divs.size();
        for (const auto& d : divs)
            if (d > 1) tor[k].push_back(d < 0 ? mpz_class(-d) : d);
    }
    std::vector<HomologyGroup> h(t.dim + 1);
    for (int k = 0; k <= t.dim; ++k) {
        long dimck = fs[k].size();
        h[k].betti = (int)(dimck - rank[k] - rank[k + 1]);
        h[k].torsion = tor[k + 1];
    }
    return h;
}

std::vector<int> betti_mod_p(const OrderedTriangulation& t, long p) {
    std::vector<std::vector<std::vector<int>>> fs(t.dim + 1);
    for (int k = 0; k <= t.dim; ++k) fs[k] = t.faces(k);
    std::vector<long> rank(t.dim + 2, 0);
    for (int k = 1; k <= t.dim; ++k)
        rank[k] = rank_mod_p(boundary_matrix(t, k, fs[k - 1], fs[k]), p);
    std::vector<int> b(t.dim + 1);
    for (int k = 0; k <= t.dim; ++k)
        b[k] = (int)((long)fs[k].size() - rank[k] - rank[k + 1]);
    return b;
}

}  // namespace statesum
