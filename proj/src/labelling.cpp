#include "statesum/labelling.hpp"

#include <algorithm>

namespace statesum {

ComplexTables::ComplexTables(const OrderedTriangulation& T) {
    OrderedTriangulation t = T;
    if (t.eps.empty()) t.validate();
    edges = t.faces(1);
    tris = t.faces(2);
    tets = t.faces(3);
    for (int i = 0; i < (int)edges.size(); ++i) edge_idx[edges[i]] = i;
    for (int i = 0; i < (int)tris.size(); ++i) tri_idx[tris[i]] = i;
    v0 = t.nverts;
    v1 = (int)edges.size();
    for (int fi = 0; fi < (int)t.facets.size(); ++fi) {
        const auto& f = t.facets[fi];
        FacetRef r;
        r.eps = t.eps[fi];
        int e = 0, tr = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                r.e[e++] = edge_idx.at({f[a], f[b]});
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c)
                    r.t[tr++] = tri_idx.at({f[a], f[b], f[c]});
        facets.push_back(r);
    }
}

namespace {

struct FlatSearch {
    const ComplexTables& C;
    const FiniteGroup& G;
    const std::function<bool(const std::vector<int>&)>& cb;
    std::vector<int> g;
    bool stopped = false;
    struct Constraint {
        int ij, ik, jk;  ///< edge indices of the triangle
    };
    // Edges are processed in a propagation order: whenever some triangle has
    // two already-decided edges, its third edge is decided next and its value
    // is forced by flatness; only edges with no such triangle branch over G.
    std::vector<int> order;                       ///< position -> edge index
    std::vector<int> forced;                      ///< constraint index or -1
    std::vector<Constraint> cons;                 ///< one per triangle
    std::vector<std::vector<Constraint>> checks;  ///< verified at position

    FlatSearch(const ComplexTables& c, const FiniteGroup& grp,
               const std::function<bool(const std::vector<int>&)>& f)
        : C(c), G(grp), cb(f), g(C.edges.size(), 0) {
        size_t ne = C.edges.size();
        for (const auto& t : C.tris)
            cons.push_back({C.edge_idx.at({t[0], t[1]}), C.edge_idx.at({t[0], t[2]}),
                            C.edge_idx.at({t[1], t[2]})});
        std::vector<char> decided(ne, 0);
        std::vector<char> used(cons.size(), 0);
        auto ndecided = [&](const Constraint& cn) {
            return decided[cn.ij] + decided[cn.ik] + decided[cn.jk];
        };
        while (order.size() < ne) {
            bool progress = true;
            while (progress) {
                progress = false;
                for (size_t i = 0; i < cons.size(); ++i) {
                    if (used[i] || ndecided(cons[i]) != 2) continue;
                    int e = !decided[cons[i].ij]   ? cons[i].ij
                            : !decided[cons[i].ik] ? cons[i].ik
                                                   : cons[i].jk;
                    order.push_back(e);
                    forced.push_back((int)i);
                    decided[e] = 1;
                    used[i] = 1;
                    progress = true;
                }
            }
            for (size_t e = 0; e < ne; ++e)
                if (!decided[e]) {
                    order.push_back((int)e);
                    forced.push_back(-1);
                    decided[e] = 1;
                    break;
                }
        }
        std::vector<int> pos_of(ne);
        for (size_t p = 0; p < ne; ++p) pos_of[order[p]] = (int)p;
        checks.assign(ne, {});
        for (const auto& cn : cons)
            checks[std::max({pos_of[cn.ij], pos_of[cn.ik], pos_of[cn.jk]})].push_back(cn);
    }

    bool admissible(int pos) const {
        // flatness: g_ik = g_jk * g_ij
        for (const auto& cn : checks[pos])
            if (g[cn.ik] != G.op(g[cn.jk], g[cn.ij])) return false;
        return true;
    }

    /// Solve the forcing triangle's flatness relation for the edge decided at
    /// this position, whichever of the three roles it plays.
    int forced_value(int pos) const {
        const Constraint& cn = cons[forced[pos]];
        int e = order[pos];
        if (e == cn.ik) return G.op(g[cn.jk], g[cn.ij]);
        if (e == cn.jk) return G.op(g[cn.ik], G.inv[g[cn.ij]]);
        return G.op(G.inv[g[cn.jk]], g[cn.ik]);
    }

    void rec(int pos) {
        if (stopped) return;
        if (pos == (int)order.size()) {
            if (!cb(g)) stopped = true;
            return;
        }
        int e = order[pos];
        if (forced[pos] >= 0) {
            g[e] = forced_value(pos);
            if (admissible(pos)) rec(pos + 1);
            return;
        }
        for (int v = 0; v < G.n; ++v) {
            g[e] = v;
            if (admissible(pos)) rec(pos + 1);
            if (stopped) return;
        }
    }
};

}  // namespace

void enumerate_flat_g(const ComplexTables& C, const FiniteGroup& G,
                      const std::function<bool(const std::vector<int>&)>& cb) {
    FlatSearch s(C, G, cb);
    s.rec(0);
}

mpz_class flat_count_bound(const ComplexTables& C, const FiniteGroup& G) {
    static const std::function<bool(const std::vector<int>&)> nocb =
        [](const std::vector<int>&) { return false; };
    FlatSearch s(C, G, nocb);
    mpz_class b = 1;
    for (int f : s.forced)
        if (f < 0) b *= G.n;
    return b;
}

mpz_class count_flat_g(const ComplexTables& C, const FiniteGroup& G) {
    mpz_class n = 0;
    enumerate_flat_g(C, G, [&](const std::vector<int>&) {
        ++n;
        return true;
    });
    return n;
}

mpz_class HSolutionSpace::count() const {
    mpz_class n = 1;
    for (const auto& f : factors)
        for (long o : f.orders) n *= o;
    return n;
}

std::vector<int> HSolutionSpace::assemble(
    const FiniteAbelianGroup& H, const std::vector<std::vector<long>>& coords) const {
    std::vector<int> h(ntris, 0);
    for (size_t t = 0; t < ntris; ++t) {
        std::vector<int> comp(H.orders.size());
        for (size_t f = 0; f < factors.size(); ++f) {
            long v = factors[f].particular[t];
            for (size_t i = 0; i < factors[f].kernel.size(); ++i)
                v += coords[f][i] * factors[f].kernel[i][t];
            comp[f] = (int)(((v % H.orders[f]) + H.orders[f]) % H.orders[f]);
        }
        h[t] = H.from_components(comp);
    }
    return h;
}

std::optional<HSolutionSpace> solve_h(const ComplexTables& C, const SemiWeakStructure& S,
                                      const std::vector<int>& g) {
    const auto& H = S.H;
    if (H.orders.empty()) {
        // Trivial H forces alpha0 = 0, so the all-zero labelling always works.
        HSolutionSpace hs;
        hs.ntris = C.tris.size();
        return hs;
    }
    // One equation per tetrahedron (a<b<c<d):
    //   h_bcd - h_acd + h_abd - h_abc = alpha0(g_cd, g_bc, g_ab)
    std::vector<std::vector<long>> A(C.tets.size(), std::vector<long>(C.tris.size(), 0));
    std::vector<int> rhs_h(C.tets.size());
    for (size_t r = 0; r < C.tets.size(); ++r) {
        const auto& t = C.tets[r];
        A[r][C.tri_idx.at({t[1], t[2], t[3]})] += 1;
        A[r][C.tri_idx.at({t[0], t[2], t[3]})] -= 1;
        A[r][C.tri_idx.at({t[0], t[1], t[3]})] += 1;
        A[r][C.tri_idx.at({t[0], t[1], t[2]})] -= 1;
        rhs_h[r] = S.alpha0_at(g[C.edge_idx.at({t[2], t[3]})],
                               g[C.edge_idx.at({t[1], t[2]})],
                               g[C.edge_idx.at({t[0], t[1]})]);
    }
    HSolutionSpace hs;
    hs.ntris = C.tris.size();
    for (size_t f = 0; f < H.orders.size(); ++f) {
        std::vector<long> b(C.tets.size());
        for (size_t r = 0; r < C.tets.size(); ++r)
            b[r] = H.components(rhs_h[r])[f];
        auto sol = solve_mod(A, b, H.orders[f]);
        if (!sol) return std::nullopt;
        hs.factors.push_back(std::move(*sol));
    }
    return hs;
}

mpz_class count_labellings(const ComplexTables& C, const SemiWeakStructure& S) {
    mpz_class total = 0;
    enumerate_flat_g(C, S.G, [&](const std::vector<int>& g) {
        if (auto hs = solve_h(C, S, g)) total += hs->count();
        return true;
    });
    return total;
}

void enumerate_labellings(const ComplexTables& C, const SemiWeakStructure& S,
                          const mpz_class& budget,
                          const std::function<bool(const std::vector<int>&,
                                                   const std::vector<int>&)>& cb) {
    mpz_class total = count_labellings(C, S);
    if (total > budget)
        throw BudgetExceeded("enumeration declined: " + total.get_str() +
                             " labellings exceed budget " + budget.get_str());
    bool stop = false;
    enumerate_flat_g(C, S.G, [&](const std::vector<int>& g) {
        auto hs = solve_h(C, S, g);
        if (!hs) return true;
        // odometer over kernel coordinates of every factor
        std::vector<std::vector<long>> coords;
        std::vector<std::pair<size_t, size_t>> slots;  ///< (factor, generator)
        for (size_t f = 0; f < hs->factors.size(); ++f) {
            coords.push_back(std::vector<long>(hs->factors[f].kernel.size(), 0));
            for (size_t i = 0; i < hs->factors[f].kernel.size(); ++i)
                slots.push_back({f, i});
        }
        while (true) {
            if (!cb(g, hs->assemble(S.H, coords))) {
                stop = true;
                return false;
            }
            size_t s = 0;
            for (; s < slots.size(); ++s) {
                auto [f, i] = slots[s];
                if (++coords[f][i] < hs->factors[f].orders[i]) break;
                coords[f][i] = 0;
            }
            if (s == slots.size()) break;
        }
        return !stop;
    });
}

}  // namespace statesum
