#include "statesum/report.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "statesum/equivalence.hpp"
#include "statesum/labelling.hpp"
#include "statesum/statesum.hpp"
#include "statesum/structure.hpp"

namespace statesum {

OrderedTriangulation complex_from_spec(const std::string& spec) {
    auto layered = [&](const char* prefix) -> std::optional<int> {
        std::string p = std::string(prefix) + ":";
        if (spec.rfind(p, 0) != 0) return std::nullopt;
        return std::stoi(spec.substr(p.size()));
    };
    if (spec == "s4") return boundary_of_5simplex();
    if (spec == "s4-cross") return cross_polytope_s4();
    if (spec == "cp2") return kuhnel_cp2();
    if (spec == "rp3") return rp3_quotient();
    if (auto l = layered("s3xs1")) return product_with_circle(boundary_of_simplex(3), *l);
    if (auto l = layered("rp3xs1")) return product_with_circle(rp3_quotient(), *l);
    if (spec.rfind("file:", 0) == 0) return OrderedTriangulation::load(spec.substr(5));
    throw std::invalid_argument("unknown complex spec: " + spec);
}

namespace {

mpz_class default_budget() {
    if (const char* env = std::getenv("STATESUM_BUDGET")) return mpz_class(env);
    return mpz_class(1) << 33;
}

int cmd_verify_structure(const std::string& sspec, std::ostream& out) {
    SemiWeakStructure S = structure_from_spec(sspec);
    StructureReport R = verify_all(S);
    out << "structure: " << S.name << "\n" << R.render();
    return R.all_ok() ? 0 : 1;
}

int cmd_pachner(const std::string& sspec, const std::string& move, int threads,
                bool serial, std::ostream& out) {
    SemiWeakStructure S = structure_from_spec(sspec);
    std::vector<std::string> moves;
    if (move == "all")
        moves = {"3-3", "2-4", "1-5"};
    else
        moves = {move};
    int rc = 0;
    out << "structure: " << S.name << "\n";
    for (const auto& mv : moves) {
        PachnerResult r = pachner_oracle(S, mv, threads, serial);
        out << mv << ": " << (r.ok ? "ok" : "FAIL") << " (checked " << r.tuples_checked
            << ", inadmissible " << r.tuples_skipped << ")";
        if (!r.ok) {
            out << "\n  counterexample: " << r.counterexample;
            rc = 1;
        }
        out << "\n";
    }
    return rc;
}

int cmd_compute(const std::string& cspec, const std::string& sspec,
                const std::string& method, bool reversed, long long relabel_seed,
                bool relabel, int threads, bool serial, const mpz_class& budget,
                bool json, std::ostream& out, std::ostream& err) {
    OrderedTriangulation T = complex_from_spec(cspec);
    if (relabel) T = T.relabelled((uint64_t)relabel_seed);
    if (reversed) T = T.reversed();
    SemiWeakStructure S = structure_from_spec(sspec);
    ZOptions opt;
    opt.method = method_from_string(method);
    opt.budget = budget;
    opt.threads = threads;
    opt.serial_reference = serial;
    try {
        StateSumResult r = z_total(S, T, opt);
        if (json)
            out << r.render(true) << "\n";
        else
            out << "complex: " << cspec << (reversed ? " (reversed)" : "") << "\n"
                << "structure: " << S.name << "\n"
                << r.render(false);
        return 0;
    } catch (const BudgetExceeded& e) {
        err << "budget refusal: " << e.what() << "\n";
        return 3;
    }
}

int cmd_count(const std::string& cspec, const std::string& sspec, std::ostream& out) {
    OrderedTriangulation T = complex_from_spec(cspec);
    SemiWeakStructure S = structure_from_spec(sspec);
    ComplexTables C(T);
    out << count_labellings(C, S).get_str() << "\n";
    return 0;
}

int cmd_homology(const std::string& cspec, std::ostream& out) {
    OrderedTriangulation T = complex_from_spec(cspec);
    auto H = homology(T);
    for (size_t k = 0; k < H.size(); ++k)
        out << "H_" << k << " = " << H[k].describe() << "\n";
    return 0;
}

int cmd_equivalence(const std::string& aspec, const std::string& bspec,
                    const std::string& efile, bool search, long long budget, bool widen,
                    std::ostream& out, std::ostream& err) {
    SemiWeakStructure A = structure_from_spec(aspec);
    SemiWeakStructure B = structure_from_spec(bspec);
    if (search) {
        EquivalenceSearch r = search_equivalence(A, B, budget, widen);
        if (r.witness) {
            out << "witness found after " << r.tried << " candidates:\n"
                << equivalence_to_file_string(*r.witness);
            return 0;
        }
        if (!r.exhausted) {
            err << "budget refusal: " << r.tried << " candidates tried without "
                << "exhausting the space\n";
            return 3;
        }
        out << "no witness in the searched space (" << r.tried << " candidates)\n";
        return 1;
    }
    EquivalenceData E = efile.empty() ? EquivalenceData::identity(A)
                                      : equivalence_load(efile, A);
    EquivalenceReport R = verify_equivalence(A, B, E);
    out << R.render();
    return R.all_ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact state-sum invariants of closed oriented 4-manifolds"};
    app.require_subcommand(1);

    std::string sspec, s2spec, cspec, move = "all", method = "auto", efile;
    int threads = 0;
    bool serial = false, reversed = false, json = false, search = false, widen = false;
    long long relabel_seed = 0, search_budget = 1 << 20;
    std::string budget_str;
    bool relabel = false;

    auto* vs = app.add_subcommand("verify-structure", "verify the coherence identities");
    vs->add_option("--structure", sspec, "structure spec")->required();

    auto* pc = app.add_subcommand("pachner-check", "run a Pachner move oracle");
    pc->add_option("--structure", sspec, "structure spec")->required();
    pc->add_option("--move", move, "3-3 | 2-4 | 1-5 | all");
    pc->add_option("--threads", threads, "worker threads (0 = default)");
    pc->add_flag("--serial", serial, "use the serial reference kernels");

    auto* co = app.add_subcommand("compute", "compute the state-sum invariant");
    co->add_option("--complex", cspec, "complex spec")->required();
    co->add_option("--structure", sspec, "structure spec")->required();
    co->add_option("--method", method, "auto | brute | linear | quadratic | gray");
    co->add_flag("--reversed", reversed, "reverse the orientation");
    co->add_option("--relabel", relabel_seed, "relabel vertices with this seed");
    co->add_option("--threads", threads, "worker threads (0 = default)");
    co->add_flag("--serial", serial, "use the serial reference kernels");
    co->add_option("--budget", budget_str, "max labellings for enumeration");
    co->add_flag("--json", json, "machine-readable output");

    auto* cl = app.add_subcommand("count-labellings", "count admissible labellings");
    cl->add_option("--complex", cspec, "complex spec")->required();
    cl->add_option("--structure", sspec, "structure spec")->required();

    auto* ho = app.add_subcommand("homology", "integral homology of a complex");
    ho->add_option("--complex", cspec, "complex spec")->required();

    auto* eq = app.add_subcommand("equivalence-check", "verify or search 2-equivalence");
    eq->add_option("--structure", sspec, "first structure spec")->required();
    eq->add_option("--structure2", s2spec, "second structure spec")->required();
    eq->add_option("--equivalence", efile, "witness data file (default: identity)");
    eq->add_flag("--search", search, "search for a witness");
    eq->add_option("--budget", search_budget, "max witness candidates");
    eq->add_flag("--widen", widen, "also search nontrivial automorphisms");

    auto* lb = app.add_subcommand("list-builtins", "list builtin structures/complexes");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    relabel = co->count("--relabel") > 0;
    mpz_class budget = budget_str.empty() ? default_budget() : mpz_class(budget_str);

    try {
        if (vs->parsed()) return cmd_verify_structure(sspec, out);
        if (pc->parsed()) return cmd_pachner(sspec, move, threads, serial, out);
        if (co->parsed())
            return cmd_compute(cspec, sspec, method, reversed, relabel_seed, relabel,
                               threads, serial, budget, json, out, err);
        if (cl->parsed()) return cmd_count(cspec, sspec, out);
        if (ho->parsed()) return cmd_homology(cspec, out);
        if (eq->parsed())
            return cmd_equivalence(sspec, s2spec, efile, search, search_budget, widen,
                                   out, err);
        if (lb->parsed()) {
            out << "structures: trivial[:nG[,nH[,m]]]  br-tau:n,k[,m]  br-iota1:n,k  "
                   "br-iota2:n,k[,m]  combine:<a>+<b>  file:<path>\n"
                   "complexes:  s4  s4-cross  cp2  rp3  s3xs1:<layers>  "
                   "rp3xs1:<layers>  file:<path>\n";
            return 0;
        }
    } catch (const MethodUnavailable& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace statesum
