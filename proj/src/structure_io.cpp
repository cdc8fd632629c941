#include <fstream>
#include <sstream>
#include <stdexcept>

#include "statesum/structure.hpp"

namespace statesum {

namespace {

const char* const kSections[7] = {"alpha0", "pi",    "alpha1", "tau",
                                  "iota1",  "iota2", "iota3"};

int section_arity(int s) {
    switch (s) {
        case 0: return 3;  // alpha0: G^3
        case 1: return 4;  // pi: G^4
        case 2: return 3;  // alpha1: H^3
        case 3: return 2;  // tau: H^2
        default: return 3;  // interchangers
    }
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw std::invalid_argument("structure file, line " + std::to_string(lineno) +
                                ": " + what);
}

}  // namespace

std::string structure_to_file_string(const SemiWeakStructure& S) {
    std::ostringstream os;
    if (!S.name.empty()) os << "# " << S.name << "\n";
    os << "# H elements appear as labels 0..n-1 in mixed-radix order of the\n"
          "# cyclic factors; exponents are powers of zeta_m.\n";
    if (S.G.is_abelian() && [&] {
            // Emit the compact form when G is cyclic with generator 1.
            int x = 0;
            for (int i = 1; i < S.G.n; ++i) {
                x = S.G.op(x, 1);
                if (x == 0) return false;
            }
            return S.G.n == 1 || S.G.op(x, 1) == 0;
        }()) {
        os << "G cyclic " << S.G.n << "\n";
    } else {
        os << "G table " << S.G.n << "\n";
        for (int a = 0; a < S.G.n; ++a) {
            for (int b = 0; b < S.G.n; ++b) os << (b ? " " : "") << S.G.op(a, b);
            os << "\n";
        }
    }
    os << "H cyclic";
    for (int o : S.H.orders) os << ' ' << o;
    os << "\nm " << S.m << "\n";
    auto dump = [&](int sec, auto size, auto value) {
        bool any = false;
        for (long i = 0; i < size(); ++i)
            if (value(i) != 0) any = true;
        if (!any) return;
        os << "\n" << kSections[sec] << "\n";
        // Recover the argument tuple from the flat index in display order.
        std::vector<int> radix;
        switch (sec) {
            case 0: radix = {S.G.n, S.G.n, S.G.n}; break;
            case 1: radix = {S.G.n, S.G.n, S.G.n, S.G.n}; break;
            case 2: radix = {S.H.n, S.H.n, S.H.n}; break;
            case 3: radix = {S.H.n, S.H.n}; break;
            case 4: radix = {S.H.n, S.G.n, S.G.n}; break;
            case 5: radix = {S.G.n, S.H.n, S.G.n}; break;
            case 6: radix = {S.G.n, S.G.n, S.H.n}; break;
        }
        for (long i = 0; i < size(); ++i) {
            if (value(i) == 0) continue;
            std::vector<int> args(radix.size());
            long rem = i;
            for (int k = (int)radix.size() - 1; k >= 0; --k) {
                args[k] = (int)(rem % radix[k]);
                rem /= radix[k];
            }
            for (size_t k = 0; k < args.size(); ++k) os << (k ? " " : "") << args[k];
            os << " -> " << value(i) << "\n";
        }
    };
    dump(0, [&] { return (long)S.alpha0.size(); }, [&](long i) { return (long)S.alpha0[i]; });
    dump(1, [&] { return (long)S.pi.size(); }, [&](long i) { return S.pi[i]; });
    dump(2, [&] { return (long)S.alpha1.size(); }, [&](long i) { return S.alpha1[i]; });
    dump(3, [&] { return (long)S.tau.size(); }, [&](long i) { return S.tau[i]; });
    dump(4, [&] { return (long)S.iota1.size(); }, [&](long i) { return S.iota1[i]; });
    dump(5, [&] { return (long)S.iota2.size(); }, [&](long i) { return S.iota2[i]; });
    dump(6, [&] { return (long)S.iota3.size(); }, [&](long i) { return S.iota3[i]; });
    return os.str();
}

SemiWeakStructure structure_from_file_string(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::optional<FiniteGroup> G;
    std::optional<FiniteAbelianGroup> H;
    long m = 0;
    int section = -1;
    std::optional<SemiWeakStructure> S;
    int pending_table_rows = 0;
    std::vector<std::vector<int>> table;

    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (pending_table_rows > 0) {
            std::vector<int> row;
            row.push_back(std::stoi(tok));
            int v;
            while (ls >> v) row.push_back(v);
            if ((int)row.size() != (int)table.capacity() && !table.empty() &&
                row.size() != table[0].size())
                fail(lineno, "ragged group table row");
            table.push_back(row);
            if (--pending_table_rows == 0) G = FiniteGroup::from_table(table);
            continue;
        }
        if (tok == "G") {
            std::string kind;
            if (!(ls >> kind)) fail(lineno, "expected 'cyclic n' or 'table n'");
            int n;
            if (!(ls >> n) || n <= 0) fail(lineno, "bad group order");
            if (kind == "cyclic") {
                G = FiniteGroup::cyclic(n);
            } else if (kind == "table") {
                pending_table_rows = n;
                table.clear();
            } else {
                fail(lineno, "unknown G kind '" + kind + "'");
            }
        } else if (tok == "H") {
            std::string kind;
            if (!(ls >> kind) || kind != "cyclic") fail(lineno, "expected 'H cyclic ...'");
            std::vector<int> orders;
            int n;
            while (ls >> n) {
                if (n <= 0) fail(lineno, "bad cyclic order");
                orders.push_back(n);
            }
            H = FiniteAbelianGroup(orders);
        } else if (tok == "m") {
            if (!(ls >> m) || m <= 0) fail(lineno, "bad root order m");
        } else {
            int sec = -1;
            for (int i = 0; i < 7; ++i)
                if (tok == kSections[i]) sec = i;
            if (sec >= 0) {
                if (!G || !H || m == 0)
                    fail(lineno, "G, H and m must precede map sections");
                if (!S) S = SemiWeakStructure::blank(*G, *H, m);
                section = sec;
                continue;
            }
            if (section < 0) fail(lineno, "unexpected token '" + tok + "'");
            // entry line: args -> value
            std::vector<int> args;
            args.push_back(std::stoi(tok));
            int arity = section_arity(section);
            for (int k = 1; k < arity; ++k) {
                int v;
                if (!(ls >> v)) fail(lineno, "expected " + std::to_string(arity) + " arguments");
                args.push_back(v);
            }
            std::string arrow;
            long val;
            if (!(ls >> arrow >> val) || arrow != "->") fail(lineno, "expected '-> value'");
            auto gok = [&](int v) { return v >= 0 && v < S->G.n; };
            auto hok = [&](int v) { return v >= 0 && v < S->H.n; };
            switch (section) {
                case 0:
                    if (!gok(args[0]) || !gok(args[1]) || !gok(args[2]) || !hok((int)val))
                        fail(lineno, "alpha0 entry out of range");
                    S->alpha0_ref(args[0], args[1], args[2]) = (int)val;
                    break;
                case 1:
                    if (!gok(args[0]) || !gok(args[1]) || !gok(args[2]) || !gok(args[3]))
                        fail(lineno, "pi entry out of range");
                    S->pi_ref(args[0], args[1], args[2], args[3]) = ((val % m) + m) % m;
                    break;
                case 2:
                    if (!hok(args[0]) || !hok(args[1]) || !hok(args[2]))
                        fail(lineno, "alpha1 entry out of range");
                    S->alpha1_ref(args[0], args[1], args[2]) = ((val % m) + m) % m;
                    break;
                case 3:
                    if (!hok(args[0]) || !hok(args[1])) fail(lineno, "tau entry out of range");
                    S->tau_ref(args[0], args[1]) = ((val % m) + m) % m;
                    break;
                case 4:
                    if (!hok(args[0]) || !gok(args[1]) || !gok(args[2]))
                        fail(lineno, "iota1 entry out of range");
                    S->iota1_ref(args[0], args[1], args[2]) = ((val % m) + m) % m;
                    break;
                case 5:
                    if (!gok(args[0]) || !hok(args[1]) || !gok(args[2]))
                        fail(lineno, "iota2 entry out of range");
                    S->iota2_ref(args[0], args[1], args[2]) = ((val % m) + m) % m;
                    break;
                case 6:
                    if (!gok(args[0]) || !gok(args[1]) || !hok(args[2]))
                        fail(lineno, "iota3 entry out of range");
                    S->iota3_ref(args[0], args[1], args[2]) = ((val % m) + m) % m;
                    break;
            }
        }
    }
    if (pending_table_rows > 0) fail(lineno, "truncated group table");
    if (!G || !H || m == 0)
        throw std::invalid_argument("structure file must define G, H and m");
    if (!S) S = SemiWeakStructure::blank(*G, *H, m);
    S->name = "file";
    return *S;
}

SemiWeakStructure structure_load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open structure file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    SemiWeakStructure S = structure_from_file_string(os.str());
    S.name = path;
    return S;
}

SemiWeakStructure structure_from_spec(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return structure_load(spec.substr(5));
    if (spec.rfind("combine:", 0) == 0) {
        std::string rest = spec.substr(8);
        auto plus = rest.find('+');
        if (plus == std::string::npos)
            throw std::invalid_argument("combine needs two '+'-separated specs");
        return combine(structure_from_spec(rest.substr(0, plus)),
                       structure_from_spec(rest.substr(plus + 1)));
    }
    auto colon = spec.find(':');
    std::string base = spec.substr(0, colon);
    std::vector<long> args;
    if (colon != std::string::npos) {
        std::istringstream as(spec.substr(colon + 1));
        std::string piece;
        while (std::getline(as, piece, ',')) args.push_back(std::stol(piece));
    }
    auto want = [&](size_t lo, size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw std::invalid_argument("bad argument count for builtin '" + base + "'");
    };
    if (base == "trivial") {
        want(0, 3);
        int ng = args.size() > 0 ? (int)args[0] : 1;
        int nh = args.size() > 1 ? (int)args[1] : 1;
        long m = args.size() > 2 ? args[2] : 1;
        return trivial_structure(FiniteGroup::cyclic(ng), FiniteAbelianGroup::cyclic(nh), m);
    }
    if (base == "br-tau") {
        want(2, 3);
        return br_tau((int)args[0], (int)args[1], args.size() > 2 ? args[2] : 0);
    }
    if (base == "br-iota1") {
        want(2, 2);
        return br_iota1((int)args[0], (int)args[1]);
    }
    if (base == "br-iota2") {
        want(2, 3);
        return br_iota2((int)args[0], (int)args[1], args.size() > 2 ? args[2] : 0);
    }
    throw std::invalid_argument("unknown structure spec: " + spec);
}

}  // namespace statesum
