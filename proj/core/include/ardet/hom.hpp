#ifndef ARDET_HOM_HPP
#define ARDET_HOM_HPP

#include <optional>
#include <string>

#include "ardet/interval.hpp"
#include "ardet/quiver.hpp"

namespace ardet {

// The canonical nonzero morphism between two interval modules: identity on
// the support, zero elsewhere. Hom spaces here are at most 1-dimensional, so
// this generator determines the whole space. Zero morphisms are represented
// as an absent std::optional<Hom>, never as a Hom with empty support.
struct Hom {
    Interval source;
    Interval target;
    Interval support; // quotient support of the source, submodule support of the target

    bool operator==(const Hom&) const = default;

    std::string str() const {
        return source.str() + " -> " + target.str() + " (supp " + support.str() + ")";
    }
};

// Solves the per-vertex scalar commutation system: each overlap vertex
// carries one unknown, arrows inside the overlap force equalities, and a
// boundary arrow whose source lies in one module only forces zero. A nonzero
// solution exists iff the whole overlap survives as the support.
std::optional<Hom> basis_hom(const Quiver& q, Interval m, Interval n);

int hom_dim(const Quiver& q, Interval m, Interval n); // 0 or 1

// Vertexwise complement of the support, decomposed into maximal intervals
// (0, 1 or 2 summands; each is an indecomposable).
std::vector<Interval> kernel(const Hom& f);   // inside the source
std::vector<Interval> cokernel(const Hom& f); // inside the target

inline Interval image(const Hom& f) { return f.support; }

// g o f; absent when the supports miss each other. Requires f.target equal
// to g.source. A nonzero composite is again the canonical generator.
std::optional<Hom> compose(const Hom& g, const Hom& f);

// True iff fprime = f o h for some h. With unit scalars this reduces to
// lifting through the canonical generator and comparing supports. Requires
// matching targets.
bool factors_through(const Quiver& q, const Hom& fprime, const Hom& f);

// Same, with the zero morphism allowed on the left (it factors trivially).
bool factors_through(const Quiver& q, const std::optional<Hom>& fprime, const Hom& f);

} // namespace ardet

#endif
