#include "ardet/ar_quiver.hpp"

#include <algorithm>
#include <sstream>

namespace ardet {

std::vector<IrreducibleMorphism> irreducible_morphisms(const Quiver& q) {
    const std::vector<Interval> modules = all_indecomposables(q);
    std::vector<IrreducibleMorphism> out;
    for (const Interval& x : modules) {
        for (const Interval& y : modules) {
            if (x == y) continue;
            const std::optional<Hom> f = basis_hom(q, x, y);
            if (!f) continue;
            bool irreducible = true;
            for (const Interval& z : modules) {
                if (z == x || z == y) continue;
                const std::optional<Hom> g = basis_hom(q, x, z);
                if (!g) continue;
                const std::optional<Hom> h = basis_hom(q, z, y);
                if (!h) continue;
                if (compose(*h, *g)) {
                    irreducible = false;
                    break;
                }
            }
            if (!irreducible) continue;
            const bool monic = kernel(*f).empty();
            const bool epic = cokernel(*f).empty();
            if (monic == epic)
                throw InternalError("irreducible morphism " + f->str() +
                                    " is not a proper mono xor a proper epi");
            out.push_back({*f, monic ? MorphKind::Mono : MorphKind::Epi});
        }
    }
    return out;
}

ARQuiver build_ar_quiver(const Quiver& q) {
    ARQuiver ar;
    ar.modules_ = all_indecomposables(q);
    for (int i = 1; i <= q.n(); ++i) {
        ar.projectives_.push_back(projective(q, i));
        ar.injectives_.push_back(injective(q, i));
    }
    std::sort(ar.projectives_.begin(), ar.projectives_.end());
    std::sort(ar.injectives_.begin(), ar.injectives_.end());
    ar.irreducibles_ = irreducible_morphisms(q);

    for (const Interval& right : ar.modules_) {
        if (ar.is_projective(right)) continue;
        std::vector<Interval> middle;
        for (const IrreducibleMorphism& irr : ar.irreducibles_)
            if (irr.arrow.target == right) middle.push_back(irr.arrow.source);
        std::sort(middle.begin(), middle.end());
        if (middle.empty() || middle.size() > 2)
            throw InternalError("mesh at " + right.str() + " has " +
                                std::to_string(middle.size()) + " middle terms");

        // left term from mesh additivity: dim(left) = sum(middle) - dim(right)
        std::vector<int> dims(static_cast<size_t>(q.n()) + 1, 0);
        for (const Interval& m : middle)
            for (int v = m.a; v <= m.b; ++v) ++dims[static_cast<size_t>(v)];
        for (int v = right.a; v <= right.b; ++v) --dims[static_cast<size_t>(v)];
        int lo = 0, hi = 0;
        bool bad = false;
        for (int v = 1; v <= q.n(); ++v) {
            if (dims[static_cast<size_t>(v)] == 0) continue;
            if (dims[static_cast<size_t>(v)] != 1) bad = true;
            if (lo == 0) lo = v;
            if (hi != 0 && v != hi + 1) bad = true; // support must be contiguous
            hi = v;
        }
        const Interval left{lo, hi};
        if (bad || lo == 0 || !is_module(q, left))
            throw InternalError("mesh at " + right.str() +
                                " has no valid left term (dimension vector mismatch)");
        ar.sequences_.push_back({left, std::move(middle), right});
    }
    std::sort(ar.sequences_.begin(), ar.sequences_.end(),
              [](const AlmostSplitSeq& a, const AlmostSplitSeq& b) { return a.right < b.right; });
    return ar;
}

bool ARQuiver::is_projective(Interval m) const {
    return std::binary_search(projectives_.begin(), projectives_.end(), m);
}

bool ARQuiver::is_injective(Interval m) const {
    return std::binary_search(injectives_.begin(), injectives_.end(), m);
}

std::optional<Interval> ARQuiver::tau(Interval m) const {
    for (const AlmostSplitSeq& seq : sequences_)
        if (seq.right == m) return seq.left;
    return std::nullopt;
}

std::optional<Interval> ARQuiver::tau_inv(Interval m) const {
    for (const AlmostSplitSeq& seq : sequences_)
        if (seq.left == m) return seq.right;
    return std::nullopt;
}

AlmostSplitSeq string_almost_split(const Quiver& q, int arrow) {
    if (arrow < 1 || arrow > q.n() - 1)
        throw ValidationError("arrow index " + std::to_string(arrow) + " out of range 1.." +
                              std::to_string(q.n() - 1));
    // Extend both ends of the arrow with inverse letters: each added edge must
    // run against the walk direction, and adding a vertex must not cover a
    // relation. For a right arrow both extensions run over left arrows; for a
    // left arrow, over right ones.
    const Dir extend_over = opposite(q.dir(arrow));
    int lo = arrow;
    while (lo > 1 && q.dir(lo - 1) == extend_over && !q.relation_inside(lo - 1, arrow)) --lo;
    int hi = arrow + 1;
    while (hi < q.n() && q.dir(hi) == extend_over && !q.relation_inside(arrow + 1, hi + 1)) ++hi;

    // The walk through the arrow leaves from its source side, so the V part
    // (the end term) sits on the source side of the arrow.
    const Interval lower{lo, arrow};
    const Interval upper{arrow + 1, hi};
    const Interval whole{lo, hi};
    if (!is_module(q, whole))
        throw InternalError("string extension of arrow " + std::to_string(arrow) +
                            " covered a relation");
    if (q.arrow_right(arrow)) return {upper, {whole}, lower};
    return {lower, {whole}, upper};
}

std::string export_dot(const Quiver& q, const ARQuiver& ar) {
    std::ostringstream out;
    auto id = [](Interval m) {
        return "m_" + std::to_string(m.a) + "_" + std::to_string(m.b);
    };
    out << "digraph ar_quiver {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box];\n";
    for (const Interval& m : ar.modules()) {
        out << "  " << id(m) << " [label=\"" << m.str();
        const std::vector<std::string> labels = module_labels(q, m);
        if (!labels.empty()) {
            out << "\\n";
            for (size_t k = 0; k < labels.size(); ++k) {
                if (k) out << ' ';
                out << labels[k];
            }
        }
        out << "\"];\n";
    }
    for (const IrreducibleMorphism& irr : ar.irreducibles()) {
        out << "  " << id(irr.arrow.source) << " -> " << id(irr.arrow.target);
        if (irr.kind == MorphKind::Mono)
            out << " [color=black];\n";
        else
            out << " [color=red];\n";
    }
    for (const AlmostSplitSeq& seq : ar.sequences())
        out << "  " << id(seq.right) << " -> " << id(seq.left)
            << " [style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

} // namespace ardet
