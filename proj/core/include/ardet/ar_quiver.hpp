#ifndef ARDET_AR_QUIVER_HPP
#define ARDET_AR_QUIVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ardet/hom.hpp"
#include "ardet/interval.hpp"
#include "ardet/quiver.hpp"

namespace ardet {

enum class MorphKind { Mono, Epi };

// An arrow of the Auslander-Reiten quiver. Every irreducible morphism here
// is a proper mono or a proper epi, never both.
struct IrreducibleMorphism {
    Hom arrow;
    MorphKind kind = MorphKind::Mono;

    bool operator==(const IrreducibleMorphism&) const = default;
};

// 0 -> left -> middle_1 (+) middle_2 -> right -> 0 with left = tau(right).
// The middle has one or two summands; no other shapes occur.
struct AlmostSplitSeq {
    Interval left;
    std::vector<Interval> middle; // sorted
    Interval right;

    bool operator==(const AlmostSplitSeq&) const = default;
};

class ARQuiver {
public:
    const std::vector<Interval>& modules() const { return modules_; }
    const std::vector<IrreducibleMorphism>& irreducibles() const { return irreducibles_; }
    const std::vector<AlmostSplitSeq>& sequences() const { return sequences_; }

    bool is_projective(Interval m) const;
    bool is_injective(Interval m) const;

    // Left term of the sequence ending at m; absent iff m is projective.
    std::optional<Interval> tau(Interval m) const;
    // Right term of the sequence starting at m; absent iff m is injective.
    std::optional<Interval> tau_inv(Interval m) const;

private:
    friend ARQuiver build_ar_quiver(const Quiver& q);

    std::vector<Interval> modules_;
    std::vector<Interval> projectives_;
    std::vector<Interval> injectives_;
    std::vector<IrreducibleMorphism> irreducibles_;
    std::vector<AlmostSplitSeq> sequences_; // sorted by right term
};

// The basis morphism X -> Y is irreducible iff no third indecomposable Z
// admits nonzero X -> Z -> Y composing to something nonzero; with Hom spaces
// at most 1-dimensional, single middle factors generate everything.
std::vector<IrreducibleMorphism> irreducible_morphisms(const Quiver& q);

// Mesh construction: for each non-projective N, the middle collects every
// irreducible X -> N and the left term is the unique interval whose
// dimension vector is sum(middle) - dim N. Throws InternalError if that
// vector is not a valid interval (cannot happen).
ARQuiver build_ar_quiver(const Quiver& q);

// The sequence with indecomposable middle attached to arrow i (1..n-1),
// built by extending the arrow with inverse letters on both ends until a
// deep/peak or a relation stops the walk. Returns 0 -> U -> N -> V -> 0.
AlmostSplitSeq string_almost_split(const Quiver& q, int arrow);

// DOT digraph: one node per indecomposable (annotated P/I/S), solid edges
// for irreducible morphisms (mono black, epi red), dashed edges for tau.
std::string export_dot(const Quiver& q, const ARQuiver& ar);

} // namespace ardet

#endif
