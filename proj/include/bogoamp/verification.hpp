#ifndef BOGOAMP_VERIFICATION_HPP
#define BOGOAMP_VERIFICATION_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bogoamp::verification {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    // Multiplies one analytic reference by (1 + 1e-6); negative control
    // hook for the verify command. Never set in normal operation.
    bool perturb_convention = false;
};

// Cross-module invariant suite: analytic-numeric equivalences, symplectic
// identities, matching residuals. Each check is independent.
CheckResult check_dpa_gain_law(const Options& opt = {});
CheckResult check_odba(const Options& opt = {});
CheckResult check_oiba(const Options& opt = {});
CheckResult check_symplectic_suite(const Options& opt = {});
CheckResult check_squeezing(const Options& opt = {});
CheckResult check_qnd(const Options& opt = {});
CheckResult check_asymmetric_decay(const Options& opt = {});

std::vector<CheckResult> run_all(const Options& opt = {});

// Prints one pass/fail line per check; returns true when all passed.
bool report(const std::vector<CheckResult>& results, std::ostream& os);

} // namespace bogoamp::verification

#endif
