#ifndef ARDET_TESTS_SUPPORT_HPP
#define ARDET_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "ardet/sweep.hpp"

namespace ardet::testsupport {

inline Quiver make(const std::string& text) { return parse_quiver(text); }

// Example fixtures used across the suites.
inline Quiver a2() { return make("1 > 2"); }

// 1 <- 2 -> 3 <- 4 -> 5 <- 6
inline Quiver a6_example() { return make("1 < 2 > 3 < 4 > 5 < 6"); }

inline std::string a13_text() {
    return "1 > 2 < 3 > 4 > 5 < 6 < 7 < 8 > 9 > 10 > 11 > 12 > 13";
}

inline Quiver a13_path() { return make(a13_text()); }

inline Quiver a13_bound() {
    return make(a13_text() +
                "\nrel: 3 4 5\nrel: 8 7 6 5\nrel: 8 9 10\nrel: 11 12 13");
}

// Opposite of the 13-vertex quiver, with the mirrored relations.
inline Quiver a13_opposite() {
    return make("1 < 2 > 3 < 4 < 5 > 6 > 7 > 8 < 9 < 10 < 11 < 12 < 13"
                "\nrel: 5 4 3\nrel: 5 6 7 8\nrel: 10 9 8\nrel: 13 12 11");
}

// 1 -> 2 <- 3 -> 4 <- ... -> 2n
inline Quiver alternating(int two_n) {
    std::vector<Dir> orientation;
    for (int i = 1; i <= two_n - 1; ++i)
        orientation.push_back(i % 2 == 1 ? Dir::Right : Dir::Left);
    return Quiver::make(two_n, orientation);
}

inline Quiver linear(int n) {
    return Quiver::make(n, std::vector<Dir>(static_cast<size_t>(n - 1), Dir::Right));
}

template <typename F>
void for_each_orientation(int n, F&& body) {
    for (const std::vector<Dir>& o : all_orientations(n)) body(Quiver::make(n, o));
}

// Seeded bound quivers over every orientation of A_n.
template <typename F>
void for_each_random_bound(int n, int trials, std::uint64_t seed, F&& body) {
    std::mt19937_64 rng(seed);
    for (const std::vector<Dir>& o : all_orientations(n)) {
        const Quiver shape = Quiver::make(n, o);
        for (int t = 0; t < trials; ++t) {
            const std::vector<Relation> rels = random_reduced_relations(shape, rng);
            if (rels.empty()) continue;
            body(Quiver::make(n, o, rels));
        }
    }
}

// Every reduced relation set on the given orientation (antichains of
// candidate ranges). Only sensible for small n.
std::vector<std::vector<Relation>> all_reduced_relation_sets(const Quiver& shape);

} // namespace ardet::testsupport

#endif
