// Acceptance gate: one line per criterion, each backed by a named
// verification suite.  Exit 0 iff every executed criterion passes.
//
//   (no args)   run criteria 1-6 and 8; criterion 7 is reported SKIPPED
//               because its suite takes on the order of half an hour.
//   --slow      run all eight criteria.
//   --slow-only run only criterion 7.
//
// A criterion passes when its suite has no hard failures.  Checks against
// external reference values that exact computation refutes are printed as
// DEVIATION lines with the expected and computed values; each such check has
// a companion check pinning the computed value, and does not fail the gate.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "cmreg/cmreg.hpp"

namespace {

struct Criterion {
    int number;
    const char* suite;
    const char* what;
    bool slow;
};

const Criterion kCriteria[] = {
    {1, "ex21", "colon chain, regularities, Betti tables, radical chain, membership, "
                "saturation, Hilbert data of the base example", false},
    {2, "ex22", "monomial curve (1,6,8): pinned resolution, regularity, principal "
                "intersection and its regularity shifts", false},
    {3, "lemma24", "parametrized complete-intersection family at five sizes: "
                   "regularity, exactness, residual image, degree, radical, scaling", false},
    {4, "ex25", "second family at (1,3): colon identity, regularity, degree, minimal "
                "generators, intersection, Hilbert identity", false},
    {5, "appendix", "sumset counts: oracle vs closed formula, vanishing, Hilbert "
                    "function link, cohomology link, totals", false},
    {6, "ex34", "first pinned surface (characteristic 101): resolution length, "
                "canonical module, socle degrees, dual cohomology", false},
    {7, "ex35", "second pinned surface (characteristic 101): regularity 32, canonical "
                "module regularity, socle, truncation, depths", true},
    {8, "properties", "always-on invariants: basis determinism, series cross-validation, "
                      "regularity scaling, torsion inequality, Betti agreement", false},
};

}  // namespace

int main(int argc, char** argv) {
    bool run_slow = false, only_slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) run_slow = true;
        else if (std::strcmp(argv[i], "--slow-only") == 0) run_slow = only_slow = true;
        else {
            std::cerr << "usage: acceptance [--slow | --slow-only]" << std::endl;
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (c.slow && !run_slow) {
            std::cout << "[" << c.number << "/8] suite " << c.suite
                      << ": SKIPPED (slow; pass --slow to include) — " << c.what << "\n";
            continue;
        }
        if (only_slow && !c.slow) continue;

        auto t0 = std::chrono::steady_clock::now();
        cmreg::SuiteReport rep;
        try {
            rep = cmreg::run_suite(c.suite);
        } catch (const std::exception& e) {
            std::cout << "[" << c.number << "/8] suite " << c.suite
                      << ": FAIL — exception: " << e.what() << "\n";
            ++failures;
            continue;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

        bool pass = rep.ok();
        std::cout << "[" << c.number << "/8] suite " << c.suite << ": "
                  << (pass ? "PASS" : "FAIL") << " — " << rep.passed() << "/"
                  << rep.checks.size() << " checks";
        if (rep.deviations() > 0)
            std::cout << ", " << rep.deviations() << " documented deviation(s)";
        std::cout << " [" << ms << " ms] — " << c.what << "\n";

        for (const auto& ch : rep.checks) {
            if (ch.pass) continue;
            std::cout << "      " << (ch.documented_deviation ? "DEVIATION" : "FAIL") << " "
                      << ch.name << ": expected [" << ch.expected << "] got [" << ch.actual
                      << "]";
            if (!ch.note.empty()) std::cout << " — " << ch.note;
            std::cout << "\n";
        }
        if (!pass) ++failures;
    }

    if (failures == 0) {
        std::cout << "acceptance: all executed criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
