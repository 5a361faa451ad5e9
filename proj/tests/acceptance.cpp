// Acceptance gate: one pass/fail line per criterion. An optional argument
// restricts the run to a single criterion (used by the ctest registration).

#include <cstdio>
#include <cstdlib>
#include <string>

#include "phel/verify.hpp"

namespace {

const char* kDescriptions[9] = {
    "Table B.1 mean-occupation coefficients within 15%",
    "intensity-to-q mapping at Fig. 4 caption values within 1%",
    "normalization suite (p_k sum, Xi integral, position density)",
    "entropy-equality identity, exact electron vs asymptotic photon",
    "exact-vs-oracle consistency matrix",
    "exact-to-asymptotic convergence exponent in [-1.0, -0.5]",
    "Jackiw minimum-uncertainty suite",
    "figure shape checks (Fig. 1 channels, Fig. 2 profiles, Fig. 3 bounds)",
    "Susskind-Glogower operator algebra, interior rows, 1e-13",
};

bool run_criterion(int n) {
    auto checks = phel::verify::criterion(n);
    bool pass = phel::verify::all_pass(checks);
    std::printf("%s criterion-%d: %s\n", pass ? "PASS" : "FAIL", n,
                kDescriptions[n - 1]);
    for (const auto& c : checks) {
        if (c.pass && c.note.empty()) continue;
        std::printf("    %s %-45s deviation=%.3e tolerance=%.3e%s%s\n",
                    c.pass ? "ok  " : "FAIL", c.name.c_str(), c.deviation,
                    c.tolerance, c.note.empty() ? "" : "  # ", c.note.c_str());
    }
    return pass;
}

} // namespace

int main(int argc, char** argv) {
    bool all = true;
    if (argc > 1) {
        int n = std::atoi(argv[1]);
        if (n < 1 || n > 9) {
            std::fprintf(stderr, "usage: acceptance [1..9]\n");
            return 2;
        }
        all = run_criterion(n);
    } else {
        for (int n = 1; n <= 9; ++n) all = run_criterion(n) && all;
    }
    return all ? 0 : 1;
}
