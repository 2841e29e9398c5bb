#ifndef ARDET_CHECKS_HPP
#define ARDET_CHECKS_HPP

#include <string>
#include <vector>

#include "ardet/determiner.hpp"

namespace ardet::checks {

struct Failure {
    std::string name;
    std::string detail;
};

struct Options {
    bool with_matrix = true;  // dense-matrix Hom cross-check on all pairs
    bool with_oracle = false; // definition-based determinedness sweep (slow; keep n small)
    int assoc_limit = 26;     // full associativity scan only up to this many modules
};

// Runs every structural identity the library relies on against the given
// algebra and returns the violations (empty = all good).
std::vector<Failure> run_invariant_suite(const Quiver& q, const Options& opts = {});

// Independent Hom computation: explicit 0/1 matrices per vertex and arrow,
// one scalar unknown per overlap vertex, exact rational elimination.
// support is meaningful only when dim == 1.
struct MatrixHom {
    int dim = 0;
    Interval support{0, 0};
    bool contiguous = false;
};
MatrixHom matrix_hom(const Quiver& q, Interval m, Interval n);

// Independent count of indecomposables: enumerates walks on the line and
// tests the letter sequence of each relation (and its formal inverse) for a
// contiguous match.
int count_strings_by_walk(const Quiver& q);

// All submodule supports of m (downstream-closed vertex subsets), as sorted
// vertex lists. Brute force over subsets.
std::vector<std::vector<int>> submodule_supports(const Quiver& q, Interval m);

bool is_uniserial_bruteforce(const Quiver& q, Interval m);

} // namespace ardet::checks

#endif
