// Compares the OpenMP kernels against their serial reference implementations:
// the Pachner oracle sweeps and the Gray-code cocycle-kernel walk.
#include <chrono>
#include <iostream>

#include "statesum/complex.hpp"
#include "statesum/statesum.hpp"
#include "statesum/structure.hpp"

using namespace statesum;
using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main() {
    int rc = 0;

    {
        SemiWeakStructure S = br_tau(3, 1);
        std::cout << "pachner 3-3 oracle, " << S.name << ":\n";
        auto t0 = clock_type::now();
        PachnerResult serial = pachner_oracle(S, "3-3", 0, true);
        double ts = seconds_since(t0);
        t0 = clock_type::now();
        PachnerResult parallel = pachner_oracle(S, "3-3", 0, false);
        double tp = seconds_since(t0);
        bool agree = serial.ok == parallel.ok &&
                     serial.tuples_checked == parallel.tuples_checked &&
                     serial.tuples_skipped == parallel.tuples_skipped;
        std::cout << "  serial   " << ts << " s (checked " << serial.tuples_checked
                  << ")\n  parallel " << tp << " s (checked "
                  << parallel.tuples_checked << ")\n  agreement: "
                  << (agree ? "yes" : "NO") << ", speedup " << ts / tp << "x\n";
        if (!agree) rc = 1;
    }

    {
        SemiWeakStructure S = br_tau(2, 1);
        OrderedTriangulation T = kuhnel_cp2();
        std::cout << "gray kernel walk, " << S.name << " on cp2:\n";
        ZOptions opt;
        opt.method = Method::Gray;
        opt.serial_reference = true;
        auto t0 = clock_type::now();
        StateSumResult serial = z_total(S, T, opt);
        double ts = seconds_since(t0);
        opt.serial_reference = false;
        t0 = clock_type::now();
        StateSumResult parallel = z_total(S, T, opt);
        double tp = seconds_since(t0);
        bool agree = serial.value == parallel.value;
        std::cout << "  serial   " << ts << " s -> Z = " << serial.value.to_string()
                  << "\n  parallel " << tp << " s -> Z = " << parallel.value.to_string()
                  << "\n  agreement: " << (agree ? "yes" : "NO") << ", speedup "
                  << ts / tp << "x\n";
        if (!agree) rc = 1;
    }

    return rc;
}
