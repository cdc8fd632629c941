#include "statesum/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace statesum {

std::vector<std::vector<int>> OrderedTriangulation::faces(int k) const {
    std::set<std::vector<int>> out;
    std::vector<int> idx(k + 1);
    for (const auto& f : facets) {
        // all (k+1)-subsets of f
        std::vector<int> sel(k + 1);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k + 1) {
                out.insert(sel);
                return;
            }
            for (int i = start; i <= (int)f.size() - (k + 1 - depth); ++i) {
                sel[depth] = f[i];
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }
    return std::vector<std::vector<int>>(out.begin(), out.end());
}

std::map<std::vector<int>, int> OrderedTriangulation::face_index(int k) const {
    std::map<std::vector<int>, int> m;
    auto fs = faces(k);
    for (int i = 0; i < (int)fs.size(); ++i) m[fs[i]] = i;
    return m;
}

std::vector<long> OrderedTriangulation::f_vector() const {
    std::vector<long> f;
    f.push_back(nverts);
    for (int k = 1; k <= dim; ++k) f.push_back((long)faces(k).size());
    return f;
}

long OrderedTriangulation::euler_characteristic() const {
    auto f = f_vector();
    long chi = 0;
    for (int k = 0; k < (int)f.size(); ++k) chi += (k % 2 ? -1 : 1) * f[k];
    return chi;
}

void OrderedTriangulation::validate() {
    if (facets.empty()) throw std::runtime_error("triangulation: no facets");
    std::set<std::vector<int>> seen;
    for (const auto& f : facets) {
        if ((int)f.size() != dim + 1) throw std::runtime_error("triangulation: facet of wrong size");
        for (int i = 0; i < dim; ++i)
            if (f[i] >= f[i + 1]) throw std::runtime_error("triangulation: facet not ascending");
        if (f.front() < 0 || f.back() >= nverts)
            throw std::runtime_error("triangulation: vertex out of range");
        if (!seen.insert(f).second) throw std::runtime_error("triangulation: duplicate facet");
    }
    // ridges -> (facet, omitted position)
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> ridge;
    for (int fi = 0; fi < (int)facets.size(); ++fi)
        for (int p = 0; p <= dim; ++p) {
            std::vector<int> r = facets[fi];
            r.erase(r.begin() + p);
            ridge[r].push_back({fi, p});
        }
    for (const auto& [r, owners] : ridge)
        if (owners.size() != 2)
            throw std::runtime_error("triangulation: ridge not shared by exactly two facets");

    // propagate orientation (first facet +1)
    eps.assign(facets.size(), 0);
    eps[0] = 1;
    std::queue<int> q;
    q.push(0);
    int visited = 1;
    std::map<int, std::vector<std::pair<int, int>>> adj;  // facet -> (other facet, parity sum)
    for (const auto& [r, o] : ridge) {
        adj[o[0].first].push_back({o[1].first, o[0].second + o[1].second});
        adj[o[1].first].push_back({o[0].first, o[0].second + o[1].second});
    }
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (auto [g, par] : adj[f]) {
            int want = -eps[f] * (par % 2 ? -1 : 1);
            if (eps[g] == 0) {
                eps[g] = want;
                ++visited;
                q.push(g);
            } else if (eps[g] != want) {
                throw std::runtime_error("triangulation: not orientable");
            }
        }
    }
    if (visited != (int)facets.size())
        throw std::runtime_error("triangulation: facet graph not connected");
}

OrderedTriangulation OrderedTriangulation::reversed() const {
    OrderedTriangulation t = *this;
    for (auto& e : t.eps) e = -e;
    return t;
}

OrderedTriangulation OrderedTriangulation::relabelled(uint64_t seed) const {
    std::vector<int> perm(nverts);
    for (int i = 0; i < nverts; ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    OrderedTriangulation t;
    t.dim = dim;
    t.nverts = nverts;
    for (const auto& f : facets) {
        std::vector<int> g;
        for (int v : f) g.push_back(perm[v]);
        std::sort(g.begin(), g.end());
        t.facets.push_back(g);
    }
    t.validate();
    return t;
}

std::string OrderedTriangulation::to_file_string() const {
    std::ostringstream os;
    os << "dim " << dim << "\n" << "vertices " << nverts << "\n";
    for (const auto& f : facets) {
        for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << "\n";
    }
    return os.str();
}

OrderedTriangulation OrderedTriangulation::from_file_string(const std::string& text) {
    std::istringstream is(text);
    std::string key;
    OrderedTriangulation t;
    if (!(is >> key >> t.dim) || key != "dim")
        throw std::runtime_error("triangulation file: expected 'dim <n>'");
    if (!(is >> key >> t.nverts) || key != "vertices")
        throw std::runtime_error("triangulation file: expected 'vertices <n>'");
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<int> f;
        int v;
        while (ls >> v) f.push_back(v);
        if (f.empty()) continue;
        if ((int)f.size() != t.dim + 1)
            throw std::runtime_error("triangulation file: facet of wrong size");
        t.facets.push_back(f);
    }
    t.validate();
    return t;
}

OrderedTriangulation OrderedTriangulation::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("triangulation file missing: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_file_string(buf.str());
}

OrderedTriangulation boundary_of_simplex(int dim) {
    OrderedTriangulation t;
    t.dim = dim;
    t.nverts = dim + 2;
    for (int omit = 0; omit < dim + 2; ++omit) {
        std::vector<int> f;
        for (int v = 0; v < dim + 2; ++v)
            if (v != omit) f.push_back(v);
        t.facets.push_back(f);
    }
    t.validate();
    return t;
}

OrderedTriangulation cross_polytope_s4() {
    // vertices 2i, 2i+1 are the opposite pair on axis i (5 axes)
    OrderedTriangulation t;
    t.dim = 4;
    t.nverts = 10;
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> f;
        for (int axis = 0; axis < 5; ++axis) f.push_back(2 * axis + ((mask >> axis) & 1));
        t.facets.push_back(f);
    }
    t.validate();
    return t;
}

OrderedTriangulation kuhnel_cp2() {
    const char* env = std::getenv("STATESUM_DATA_DIR");
    std::string dir = env ? env : STATESUM_DATA_DIR;
    OrderedTriangulation t = OrderedTriangulation::load(dir + "/cp2_9.tri");
    auto f = t.f_vector();
    if (f != std::vector<long>{9, 36, 84, 90, 36})
        throw std::runtime_error("cp2 data corrupt: wrong f-vector");
    return t;
}

namespace {

/// Faces of the boundary of the 4-dimensional cross-polytope: nonempty subsets
/// of the 8 signed unit vectors containing no opposite pair.  Encoded as
/// bitmasks over vertices 0..7 where vertices 2i, 2i+1 are opposite.
std::vector<int> cell_vertices(int mask) {
    std::vector<int> v;
    for (int i = 0; i < 8; ++i)
        if (mask >> i & 1) v.push_back(i);
    return v;
}

}  // namespace

OrderedTriangulation rp3_quotient() {
    // barycentric subdivision vertices = admissible cells
    std::vector<int> cells;
    std::map<int, int> cell_id;
    for (int mask = 1; mask < 256; ++mask) {
        bool ok = true;
        for (int axis = 0; axis < 4; ++axis)
            if ((mask >> (2 * axis) & 1) && (mask >> (2 * axis + 1) & 1)) ok = false;
        if (ok) {
            cell_id[mask] = (int)cells.size();
            cells.push_back(mask);
        }
    }
    auto antipode = [&](int mask) {
        int r = 0;
        for (int axis = 0; axis < 4; ++axis) {
            if (mask >> (2 * axis) & 1) r |= 1 << (2 * axis + 1);
            if (mask >> (2 * axis + 1) & 1) r |= 1 << (2 * axis);
        }
        return r;
    };
    // orbit representatives
    std::map<int, int> orbit;  // cell mask -> quotient vertex id
    int nq = 0;
    for (int c : cells) {
        if (orbit.count(c)) continue;
        orbit[c] = nq;
        orbit[antipode(c)] = nq;
        ++nq;
    }
    // flags v < e < t < tet
    std::set<std::vector<int>> qfacets;
    for (int tet : cells) {
        if (cell_vertices(tet).size() != 4) continue;
        for (int t3 : cells) {
            if (cell_vertices(t3).size() != 3 || (t3 & tet) != t3) continue;
            for (int e : cells) {
                if (cell_vertices(e).size() != 2 || (e & t3) != e) continue;
                for (int v : cells) {
                    if (cell_vertices(v).size() != 1 || (v & e) != v) continue;
                    std::vector<int> f = {orbit[v], orbit[e], orbit[t3], orbit[tet]};
                    std::sort(f.begin(), f.end());
                    qfacets.insert(f);
                }
            }
        }
    }
    OrderedTriangulation t;
    t.dim = 3;
    t.nverts = nq;
    t.facets.assign(qfacets.begin(), qfacets.end());
    t.validate();
    return t;
}

OrderedTriangulation product_with_circle(const OrderedTriangulation& m, int layers) {
    if (layers < 3) throw std::invalid_argument("product_with_circle: need layers >= 3");
    OrderedTriangulation t;
    t.dim = m.dim + 1;
    t.nverts = m.nverts * layers;
    auto vid = [&](int layer, int v) { return layer * m.nverts + v; };
    std::set<std::vector<int>> out;
    for (int layer = 0; layer < layers; ++layer) {
        int next = (layer + 1) % layers;
        for (const auto& f : m.facets) {
            for (int k = 0; k <= m.dim; ++k) {
                std::vector<int> s;
                for (int i = 0; i <= k; ++i) s.push_back(vid(layer, f[i]));
                for (int i = k; i <= m.dim; ++i) s.push_back(vid(next, f[i]));
                std::sort(s.begin(), s.end());
                out.insert(s);
            }
        }
    }
    t.facets.assign(out.begin(), out.end());
    t.validate();
    return t;
}

}  // namespace statesum
