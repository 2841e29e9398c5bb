#ifndef ARDET_INTERVAL_HPP
#define ARDET_INTERVAL_HPP

#include <string>
#include <vector>

#include "ardet/quiver.hpp"

namespace ardet {

// The indecomposable module [a,b]: a 1-dimensional space at each vertex of
// a..b, zero elsewhere, identity maps on the arrows inside. Every
// indecomposable over these algebras has this shape.
struct Interval {
    int a = 1;
    int b = 1;

    int dim() const { return b - a + 1; }
    bool contains(int v) const { return a <= v && v <= b; }

    bool operator==(const Interval&) const = default;
    bool operator<(const Interval& o) const { return a != o.a ? a < o.a : b < o.b; }

    std::string str() const {
        return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
};

// [a,b] carries a module of KQ/I iff no relation lies fully inside it.
bool is_module(const Quiver& q, Interval m);

// All indecomposables, sorted by (a,b).
std::vector<Interval> all_indecomposables(const Quiver& q);

Interval simple(const Quiver& q, int i);

// Maximal interval reachable from i by nonzero directed paths: walk outward
// along arrows, stopping at an orientation reversal or where a relation's
// range would be fully covered.
Interval projective(const Quiver& q, int i);

// Dual: maximal interval whose vertices reach i by nonzero directed paths.
Interval injective(const Quiver& q, int i);

// rad P(i) decomposed into indecomposables: empty iff P(i) is simple, two
// summands iff i is an interior source, else one.
std::vector<Interval> radical_of_projective(const Quiver& q, int i);

// Simples at the vertices of m with no arrow leaving (resp. entering) them
// inside m. Returned sorted.
std::vector<Interval> socle(const Quiver& q, Interval m);
std::vector<Interval> top(const Quiver& q, Interval m);

// Vertices the socle/top live at.
std::vector<int> socle_vertices(const Quiver& q, Interval m);
std::vector<int> top_vertices(const Quiver& q, Interval m);

// "P(i)", "I(j)", "S(k)" tags that apply to m, in that order; empty if none.
std::vector<std::string> module_labels(const Quiver& q, Interval m);

} // namespace ardet

#endif
