#include "statesum/groups.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace statesum {

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul[a][b] != mul[b][a]) return false;
    return true;
}

void FiniteGroup::validate() const {
    if (n <= 0 || (int)mul.size() != n || (int)inv.size() != n)
        throw std::invalid_argument("group: bad table shape");
    for (int a = 0; a < n; ++a) {
        if ((int)mul[a].size() != n) throw std::invalid_argument("group: bad row");
        if (mul[0][a] != a || mul[a][0] != a)
            throw std::invalid_argument("group: element 0 is not the identity");
        if (inv[a] < 0 || inv[a] >= n || mul[a][inv[a]] != 0 || mul[inv[a]][a] != 0)
            throw std::invalid_argument("group: bad inverse");
        for (int b = 0; b < n; ++b) {
            if (mul[a][b] < 0 || mul[a][b] >= n)
                throw std::invalid_argument("group: entry out of range");
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::invalid_argument("group: not associative");
        }
    }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
    FiniteGroup g;
    g.n = n;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    }
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.n = a.n * b.n;
    g.mul.assign(g.n, std::vector<int>(g.n));
    g.inv.assign(g.n, 0);
    auto enc = [&](int x, int y) { return x + a.n * y; };
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1) {
            g.inv[enc(x1, y1)] = enc(a.inv[x1], b.inv[y1]);
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    g.mul[enc(x1, y1)][enc(x2, y2)] = enc(a.mul[x1][x2], b.mul[y1][y2]);
        }
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.n = (int)table.size();
    g.mul = std::move(table);
    g.inv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (a < (int)g.mul.size() && b < (int)g.mul[a].size() && g.mul[a][b] == 0) g.inv[a] = b;
    g.validate();
    return g;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> ord) : orders(std::move(ord)) {
    n = 1;
    for (int o : orders) {
        if (o < 1) throw std::invalid_argument("abelian group: factor order must be positive");
        n *= o;
    }
}

int FiniteAbelianGroup::add(int a, int b) const {
    int r = 0, mult = 1;
    for (int o : orders) {
        int ca = a % o, cb = b % o;
        a /= o; b /= o;
        r += ((ca + cb) % o) * mult;
        mult *= o;
    }
    return r;
}

int FiniteAbelianGroup::neg(int a) const {
    int r = 0, mult = 1;
    for (int o : orders) {
        int ca = a % o;
        a /= o;
        r += ((o - ca) % o) * mult;
        mult *= o;
    }
    return r;
}

std::vector<int> FiniteAbelianGroup::components(int a) const {
    std::vector<int> c(orders.size());
    for (size_t i = 0; i < orders.size(); ++i) {
        c[i] = a % orders[i];
        a /= orders[i];
    }
    return c;
}

int FiniteAbelianGroup::from_components(const std::vector<int>& c) const {
    int r = 0, mult = 1;
    for (size_t i = 0; i < orders.size(); ++i) {
        r += ((c[i] % orders[i] + orders[i]) % orders[i]) * mult;
        mult *= orders[i];
    }
    return r;
}

int FiniteAbelianGroup::exponent() const {
    int e = 1;
    for (int o : orders) e = std::lcm(e, o);
    return e;
}

std::string FiniteAbelianGroup::describe() const {
    if (orders.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << orders[i];
    }
    return os.str();
}

}  // namespace statesum
