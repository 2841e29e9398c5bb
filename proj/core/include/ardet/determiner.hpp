#ifndef ARDET_DETERMINER_HPP
#define ARDET_DETERMINER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ardet/ar_quiver.hpp"

namespace ardet {

enum class Route { ClosedForm, SocleShortcut, Oracle };
enum class DetClass { Projective, TauInvKernel };

// One irreducible morphism with its minimal right determiner C(f).
// Monos determine a projective P(i) (socle of the cokernel); epis determine
// tau^{-1} of the kernel, which is never projective.
struct DeterminerRecord {
    IrreducibleMorphism morphism;
    Interval determiner;
    Route route = Route::ClosedForm;
    DetClass cls = DetClass::TauInvKernel;
    int proj_vertex = 0; // i with determiner = P(i), when cls == Projective
};

enum class FormulaBranch { PathPZero, PathPPositive, BoundROne, BoundRTwoPlus, NotApplicable };

std::string branch_name(FormulaBranch b);

struct Predicted {
    std::optional<int> count; // absent for n = 1
    FormulaBranch branch = FormulaBranch::NotApplicable;
};

// Closed-form count: a relation-free algebra predicts 2n-2 (no interior
// sources) or 2n-p-1; a bound algebra predicts 2n-2 for a unique sink and
// 2n-p-q-1 otherwise, with q the number of nonzero sink ideals.
Predicted predicted_count(const Quiver& q);

struct DetReport {
    std::vector<DeterminerRecord> records; // sorted by (source, target)
    std::vector<Interval> det_set;         // distinct determiners, sorted
    int det_count = 0;
    int p = 0;
    int q_ideals = 0; // 0 whenever sink ideals are undefined (r < 2)
    int r = 0;
    Predicted predicted;
};

// True iff the projective at p_vertex admits h into f's target whose image
// escapes f's image, with a radical map into f's source matching h on every
// radical summand. With unit scalars this is a finite support check.
bool almost_factors_through(const Quiver& q, int p_vertex, const Hom& f);

// Epi branch: C(f) = tau^{-1}(ker f). Mono branch: C(f) = P(i) with S(i) the
// socle of the cokernel, re-derived by scanning which projectives almost
// factor through f; the two routes must agree (InternalError otherwise).
DeterminerRecord minimal_right_determiner(const Quiver& q, const ARQuiver& ar,
                                          const IrreducibleMorphism& f);

// Records for every irreducible morphism plus the assembled determiner set
// and the counting data. Self-checks that the epic determiners are exactly
// the end terms of the n-1 one-middle-term sequences.
DetReport det_set(const Quiver& q);

// Brute-force transcription of the definition of "right determined by c":
// for every indecomposable X' and the canonical f' : X' -> target(f), if
// every composite through c factors through f then f' must as well.
bool is_right_determined_by(const Quiver& q, const Hom& f, Interval c);

// Scans all indecomposables with is_right_determined_by; since the minimal
// right determiner of an irreducible morphism is indecomposable, exactly one
// candidate must be marked. Throws InternalError otherwise.
Interval oracle_minimal_determiner(const Quiver& q, const IrreducibleMorphism& f);

} // namespace ardet

#endif
