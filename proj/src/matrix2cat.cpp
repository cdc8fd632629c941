#include "statesum/matrix2cat.hpp"

#include <stdexcept>

namespace statesum {

long RigElement::deg() const {
    long d = 0;
    for (long c : counts) d += c;
    return d;
}

RigElement RigElement::operator+(const RigElement& o) const {
    RigElement r = *this;
    for (size_t i = 0; i < counts.size(); ++i) r.counts[i] += o.counts[i];
    return r;
}

RigElement RigElement::mul(const RigElement& o, const FiniteAbelianGroup& H) const {
    RigElement r = zero(H.n);
    for (int a = 0; a < H.n; ++a) {
        if (!counts[a]) continue;
        for (int b = 0; b < H.n; ++b)
            if (o.counts[b]) r.counts[H.add(a, b)] += counts[a] * o.counts[b];
    }
    return r;
}

OneMorphismMatrix OneMorphismMatrix::make(const FiniteAbelianGroup& H, int g, int rows,
                                          int cols) {
    OneMorphismMatrix f;
    f.H = H;
    f.g = g;
    f.rows = rows;
    f.cols = cols;
    f.e.assign((size_t)rows * cols, RigElement::zero(H.n));
    return f;
}

OneMorphismMatrix OneMorphismMatrix::identity(const FiniteAbelianGroup& H, int g, int n) {
    OneMorphismMatrix f = make(H, g, n, n);
    for (int i = 0; i < n; ++i) f.at(i, i) = RigElement::of(H.n, 0);
    return f;
}

bool OneMorphismMatrix::operator==(const OneMorphismMatrix& o) const {
    return g == o.g && rows == o.rows && cols == o.cols && e == o.e;
}

OneMorphismMatrix compose_1(const OneMorphismMatrix& f, const OneMorphismMatrix& g) {
    if (f.cols != g.rows || f.g != g.g || f.H.n != g.H.n)
        throw std::invalid_argument("compose_1: shape mismatch");
    OneMorphismMatrix r = OneMorphismMatrix::make(f.H, f.g, f.rows, g.cols);
    for (int i = 0; i < f.rows; ++i)
        for (int j = 0; j < g.cols; ++j)
            for (int k = 0; k < f.cols; ++k)
                r.at(i, j) = r.at(i, j) + f.at(i, k).mul(g.at(k, j), f.H);
    return r;
}

namespace {

CycMatrix cyc_zero(int rows, int cols, int m) {
    return CycMatrix(rows, std::vector<Cyclotomic>(cols, Cyclotomic::zero(m)));
}

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b, int m) {
    int r = (int)a.size(), k = (int)b.size(), c = k ? (int)b[0].size() : 0;
    CycMatrix out = cyc_zero(r, c, m);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            for (int t = 0; t < k; ++t) out[i][j] += a[i][t] * b[t][j];
    return out;
}

CycMatrix cyc_kron(const CycMatrix& a, const CycMatrix& b, int m) {
    int r1 = (int)a.size(), c1 = r1 ? (int)a[0].size() : 0;
    int r2 = (int)b.size(), c2 = r2 ? (int)b[0].size() : 0;
    CycMatrix out = cyc_zero(r1 * r2, c1 * c2, m);
    for (int i1 = 0; i1 < r1; ++i1)
        for (int j1 = 0; j1 < c1; ++j1)
            for (int i2 = 0; i2 < r2; ++i2)
                for (int j2 = 0; j2 < c2; ++j2)
                    out[i1 * r2 + i2][j1 * c2 + j2] = a[i1][j1] * b[i2][j2];
    return out;
}

void cyc_paste(CycMatrix& dst, const CycMatrix& src, int r0, int c0) {
    for (size_t i = 0; i < src.size(); ++i)
        for (size_t j = 0; j < src[i].size(); ++j) dst[r0 + i][c0 + j] = src[i][j];
}

}  // namespace

void TwoMorphismMatrix::validate() const {
    if (src.rows != tgt.rows || src.cols != tgt.cols || src.g != tgt.g)
        throw std::invalid_argument("2-morphism: source/target shapes differ");
    if (e.size() != src.e.size())
        throw std::invalid_argument("2-morphism: wrong number of entries");
    for (int i = 0; i < src.rows; ++i)
        for (int j = 0; j < src.cols; ++j) {
            const CycMatrix& a = at(i, j);
            long r = src.at(i, j).deg(), c = tgt.at(i, j).deg();
            if ((long)a.size() != r)
                throw std::invalid_argument("2-morphism: entry row count off");
            for (const auto& row : a)
                if ((long)row.size() != c)
                    throw std::invalid_argument("2-morphism: entry column count off");
        }
}

bool TwoMorphismMatrix::operator==(const TwoMorphismMatrix& o) const {
    return src == o.src && tgt == o.tgt && e == o.e;
}

TwoMorphismMatrix two_identity(const OneMorphismMatrix& f, int m) {
    TwoMorphismMatrix a;
    a.src = a.tgt = f;
    a.m = m;
    for (int i = 0; i < f.rows; ++i)
        for (int j = 0; j < f.cols; ++j) {
            int d = (int)f.at(i, j).deg();
            CycMatrix id = cyc_zero(d, d, m);
            for (int k = 0; k < d; ++k) id[k][k] = Cyclotomic::one(m);
            a.e.push_back(std::move(id));
        }
    return a;
}

TwoMorphismMatrix vcompose_2(const TwoMorphismMatrix& a, const TwoMorphismMatrix& b) {
    if (!(a.tgt == b.src) || a.m != b.m)
        throw std::invalid_argument("vcompose_2: shape mismatch");
    TwoMorphismMatrix r;
    r.src = a.src;
    r.tgt = b.tgt;
    r.m = a.m;
    for (size_t i = 0; i < a.e.size(); ++i) r.e.push_back(cyc_mul(a.e[i], b.e[i], a.m));
    return r;
}

TwoMorphismMatrix hcompose_2(const TwoMorphismMatrix& a, const TwoMorphismMatrix& b) {
    if (a.src.cols != b.src.rows || a.m != b.m)
        throw std::invalid_argument("hcompose_2: shape mismatch");
    TwoMorphismMatrix r;
    r.src = compose_1(a.src, b.src);
    r.tgt = compose_1(a.tgt, b.tgt);
    r.m = a.m;
    for (int i = 0; i < r.src.rows; ++i)
        for (int j = 0; j < r.src.cols; ++j) {
            CycMatrix entry =
                cyc_zero((int)r.src.at(i, j).deg(), (int)r.tgt.at(i, j).deg(), r.m);
            int r0 = 0, c0 = 0;
            for (int k = 0; k < a.src.cols; ++k) {
                CycMatrix block = cyc_kron(a.at(i, k), b.at(k, j), r.m);
                cyc_paste(entry, block, r0, c0);
                r0 += (int)block.size();
                c0 += block.empty() ? 0 : (int)block[0].size();
            }
            r.e.push_back(std::move(entry));
        }
    return r;
}

TwoMorphismMatrix dual_2(const TwoMorphismMatrix& a) {
    TwoMorphismMatrix r;
    r.src = a.tgt;
    r.tgt = a.src;
    r.m = a.m;
    for (const auto& entry : a.e) {
        int rows = (int)entry.size(), cols = rows ? (int)entry[0].size() : 0;
        CycMatrix t = cyc_zero(cols, rows, a.m);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t[j][i] = entry[i][j].conjugate();
        r.e.push_back(std::move(t));
    }
    return r;
}

CycMatrix swap_matrix(int p, int q, int m) {
    CycMatrix P = cyc_zero(p * q, q * p, m);
    for (int r = 0; r < p; ++r)
        for (int s = 0; s < q; ++s) P[r * q + s][s * p + r] = Cyclotomic::one(m);
    return P;
}

TwoMorphismMatrix tensorator_matrix(const OneMorphismMatrix& f,
                                    const OneMorphismMatrix& g, int m) {
    if (f.rows != 1 || f.cols != 1 || g.rows != 1 || g.cols != 1)
        throw std::invalid_argument("tensorator_matrix: 1x1 1-morphisms expected");
    TwoMorphismMatrix r;
    r.src = compose_1(f, g);
    r.tgt = compose_1(g, f);
    r.m = m;
    r.e.push_back(swap_matrix((int)f.at(0, 0).deg(), (int)g.at(0, 0).deg(), m));
    return r;
}

}  // namespace statesum
