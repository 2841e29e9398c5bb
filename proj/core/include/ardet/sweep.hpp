#ifndef ARDET_SWEEP_HPP
#define ARDET_SWEEP_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ardet/checks.hpp"

namespace ardet {

std::vector<std::vector<Dir>> all_orientations(int n);

// Mirror image of an orientation under reflecting the line i <-> n+1-i.
std::vector<Dir> mirrored(const std::vector<Dir>& orientation);

// Seeded random reduced relation set on the given orientation: picks maximal
// directed runs (always at least one when any run can hold a relation) and
// places one or two random zero paths inside each, then drops contained
// ranges. Deterministic for a fixed engine state.
std::vector<Relation> random_reduced_relations(const Quiver& shape, std::mt19937_64& rng);

struct SweepOptions {
    int n_min = 2;
    int n_max = 8;
    bool mod_reflection = false;   // skip mirror-image orientations
    bool random_relations = false; // add seeded random bound cases per orientation
    std::uint64_t seed = 0;
    int trials = 2;      // relation sets per orientation
    bool full = false;   // run the whole invariant suite instead of the quick checks
    bool with_oracle = false; // definition-based determiner sweep on n <= oracle_n_max
    int oracle_n_max = 5;
};

struct SweepFailure {
    std::string quiver; // rendered text of the offending case
    std::string check;
    std::string detail;
};

struct SweepSummary {
    long cases = 0;
    long bound_cases = 0; // cases carrying a nonempty relation set
    std::vector<SweepFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Checks every case: the enumerated determiner count against the closed-form
// prediction, exactly n-1 one-middle-term sequences, the 2n-2 bound, and (for
// bound cases) monotonicity against the relation-free count.
SweepSummary run_sweep(const SweepOptions& opts);

} // namespace ardet

#endif
