#include "ardet/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ardet::checks {

namespace {

// Exact rational scalar for the generic elimination path.
struct Rat {
    long long num = 0;
    long long den = 1;

    static Rat of(long long n, long long d = 1) {
        Rat r{n, d};
        r.normalize();
        return r;
    }
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    bool zero() const { return num == 0; }
    Rat operator*(const Rat& o) const { return of(num * o.num, den * o.den); }
    Rat operator-(const Rat& o) const { return of(num * o.den - o.num * den, den * o.den); }
    Rat operator/(const Rat& o) const { return of(num * o.den, den * o.num); }
};

struct Rref {
    std::vector<std::vector<Rat>> rows;
    std::vector<int> pivot_col; // one entry per reduced row
};

Rref rref(std::vector<std::vector<Rat>> rows, int cols) {
    Rref out;
    int lead = 0;
    for (int c = 0; c < cols && lead < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = lead; r < static_cast<int>(rows.size()); ++r)
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(c)].zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(lead)], rows[static_cast<size_t>(pivot)]);
        auto& prow = rows[static_cast<size_t>(lead)];
        const Rat scale = prow[static_cast<size_t>(c)];
        for (auto& x : prow) x = x / scale;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == lead) continue;
            const Rat factor = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (factor.zero()) continue;
            for (int k = 0; k < cols; ++k)
                rows[static_cast<size_t>(r)][static_cast<size_t>(k)] =
                    rows[static_cast<size_t>(r)][static_cast<size_t>(k)] -
                    factor * prow[static_cast<size_t>(k)];
        }
        out.pivot_col.push_back(c);
        ++lead;
    }
    rows.resize(out.pivot_col.size());
    out.rows = std::move(rows);
    return out;
}

} // namespace

MatrixHom matrix_hom(const Quiver& q, Interval m, Interval n) {
    const int lo = std::max(m.a, n.a);
    const int hi = std::min(m.b, n.b);
    if (lo > hi) return {};
    const int cols = hi - lo + 1;
    auto col_of = [lo](int v) { return v - lo; };

    std::vector<std::vector<Rat>> rows;
    for (int w = 1; w <= q.n() - 1; ++w) {
        const int u = q.arrow_right(w) ? w : w + 1;
        const int v = q.arrow_right(w) ? w + 1 : w;
        if (!m.contains(u) || !n.contains(v)) continue; // both sides vanish
        std::vector<Rat> row(static_cast<size_t>(cols));
        bool nonzero = false;
        if (m.contains(v) && n.contains(v)) {
            row[static_cast<size_t>(col_of(v))] = Rat::of(1);
            nonzero = true;
        }
        if (m.contains(u) && n.contains(u)) {
            row[static_cast<size_t>(col_of(u))] =
                row[static_cast<size_t>(col_of(u))] - Rat::of(1);
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }

    const Rref red = rref(std::move(rows), cols);
    const int rank = static_cast<int>(red.pivot_col.size());
    MatrixHom result;
    result.dim = cols - rank;
    if (result.dim != 1) return result;

    // one free column: set it to 1, read the pivots off the reduced rows
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : red.pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_col = c;
    std::vector<Rat> x(static_cast<size_t>(cols));
    x[static_cast<size_t>(free_col)] = Rat::of(1);
    for (size_t r = 0; r < red.rows.size(); ++r)
        x[static_cast<size_t>(red.pivot_col[r])] =
            Rat::of(0) - red.rows[r][static_cast<size_t>(free_col)];

    int first = -1, last = -1;
    bool contiguous = true;
    for (int c = 0; c < cols; ++c) {
        if (x[static_cast<size_t>(c)].zero()) continue;
        if (first < 0) first = c;
        if (last >= 0 && c != last + 1) contiguous = false;
        last = c;
    }
    result.support = {lo + first, lo + last};
    result.contiguous = contiguous;
    return result;
}

int count_strings_by_walk(const Quiver& q) {
    using Letter = std::pair<int, bool>; // (edge, traversed along the arrow)
    std::vector<std::vector<Letter>> forbidden;
    for (const Relation& rel : q.relations()) {
        std::vector<Letter> word;
        for (size_t k = 0; k + 1 < rel.vertices.size(); ++k)
            word.emplace_back(std::min(rel.vertices[k], rel.vertices[k + 1]), true);
        std::vector<Letter> inverse(word.rbegin(), word.rend());
        for (Letter& l : inverse) l.second = !l.second;
        forbidden.push_back(std::move(word));
        forbidden.push_back(std::move(inverse));
    }

    auto contains = [](const std::vector<Letter>& walk, const std::vector<Letter>& word) {
        if (word.size() > walk.size()) return false;
        for (size_t s = 0; s + word.size() <= walk.size(); ++s) {
            bool hit = true;
            for (size_t k = 0; k < word.size(); ++k)
                if (walk[s + k] != word[k]) {
                    hit = false;
                    break;
                }
            if (hit) return true;
        }
        return false;
    };

    int count = 0;
    for (int a = 1; a <= q.n(); ++a)
        for (int b = a; b <= q.n(); ++b) {
            std::vector<Letter> walk;
            for (int w = a; w < b; ++w) walk.emplace_back(w, q.arrow_right(w));
            bool ok = true;
            for (const auto& word : forbidden)
                if (contains(walk, word)) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
        }
    return count;
}

std::vector<std::vector<int>> submodule_supports(const Quiver& q, Interval m) {
    const int d = m.dim();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        bool closed = true;
        for (int w = m.a; w < m.b && closed; ++w) {
            const int u = q.arrow_right(w) ? w : w + 1;
            const int v = q.arrow_right(w) ? w + 1 : w;
            const bool has_u = mask & (1u << (u - m.a));
            const bool has_v = mask & (1u << (v - m.a));
            if (has_u && !has_v) closed = false;
        }
        if (!closed) continue;
        std::vector<int> verts;
        for (int v = m.a; v <= m.b; ++v)
            if (mask & (1u << (v - m.a))) verts.push_back(v);
        out.push_back(std::move(verts));
    }
    return out;
}

bool is_uniserial_bruteforce(const Quiver& q, Interval m) {
    std::vector<int> per_dim(static_cast<size_t>(m.dim()) + 1, 0);
    for (const auto& sub : submodule_supports(q, m)) ++per_dim[sub.size()];
    return std::all_of(per_dim.begin(), per_dim.end(), [](int c) { return c <= 1; });
}

namespace {

using FailureList = std::vector<Failure>;

void fail(FailureList& out, const std::string& name, const std::string& detail) {
    out.push_back({name, detail});
}

std::string ivs(const std::vector<Interval>& v) {
    std::string s;
    for (const Interval& m : v) s += m.str();
    return s.empty() ? "(none)" : s;
}

void check_vertex_classes(const Quiver& q, FailureList& out) {
    const auto sources = q.sources();
    const auto sinks = q.sinks();
    for (int v = 1; v <= q.n(); ++v) {
        const bool src = q.is_source(v);
        const bool snk = q.is_sink(v);
        if (q.n() == 1) {
            if (!(src && snk)) fail(out, "vertex-classes", "isolated vertex must be both");
            continue;
        }
        if (src && snk) fail(out, "vertex-classes", "vertex " + std::to_string(v) + " is both");
    }
    if (q.n() > 1) {
        const long diff = static_cast<long>(sources.size()) - static_cast<long>(sinks.size());
        if (diff < -1 || diff > 1)
            fail(out, "source-sink-balance",
                 "counts differ by " + std::to_string(diff));
        // sources and sinks alternate along the line
        std::vector<std::pair<int, bool>> marks; // (vertex, is_source)
        for (int v = 1; v <= q.n(); ++v) {
            if (q.is_source(v)) marks.emplace_back(v, true);
            if (q.is_sink(v)) marks.emplace_back(v, false);
        }
        std::sort(marks.begin(), marks.end());
        for (size_t k = 0; k + 1 < marks.size(); ++k)
            if (marks[k].second == marks[k + 1].second)
                fail(out, "source-sink-alternation",
                     "two consecutive marks of the same kind at vertices " +
                         std::to_string(marks[k].first) + ", " +
                         std::to_string(marks[k + 1].first));
    }
}

void check_roundtrip(const Quiver& q, FailureList& out) {
    try {
        if (!(parse_quiver(q.render()) == q))
            fail(out, "render-parse-roundtrip", "parsed value differs");
    } catch (const std::exception& e) {
        fail(out, "render-parse-roundtrip", e.what());
    }
}

void check_sink_ideals(const Quiver& q, FailureList& out) {
    const int r = q.sink_count();
    if (r == 1 && q.interior_source_count() != 0)
        fail(out, "unique-sink-no-interior-source",
             "p = " + std::to_string(q.interior_source_count()));
    if (r < 2) return;
    try {
        const auto reports = sink_ideals(q);
        if (static_cast<int>(reports.size()) != r)
            fail(out, "sink-classifier-total", "report count != sink count");
        for (const auto& rep : reports) {
            if (rep.case_no < 1 || rep.case_no > 5)
                fail(out, "sink-classifier-total",
                     "sink " + std::to_string(rep.sink) + " got case " +
                         std::to_string(rep.case_no));
            if (rep.case_no <= 4 && rep.nonzero != !rep.restricted.empty())
                fail(out, "sink-ideal-predicate",
                     "case " + std::to_string(rep.case_no) + " nonzero flag mismatch");
        }
    } catch (const std::exception& e) {
        fail(out, "sink-classifier-total", e.what());
    }
}

void check_indecomposables(const Quiver& q, FailureList& out) {
    const auto modules = all_indecomposables(q);
    if (q.relations().empty() &&
        static_cast<int>(modules.size()) != q.n() * (q.n() + 1) / 2)
        fail(out, "indec-count-relation-free",
             "got " + std::to_string(modules.size()));
    if (static_cast<int>(modules.size()) != count_strings_by_walk(q))
        fail(out, "indec-count-walk-oracle",
             "interval count " + std::to_string(modules.size()) + " != walk count " +
                 std::to_string(count_strings_by_walk(q)));
    const std::set<Interval> mset(modules.begin(), modules.end());
    for (int i = 1; i <= q.n(); ++i) {
        for (Interval m : {projective(q, i), injective(q, i), simple(q, i)})
            if (!mset.count(m))
                fail(out, "special-modules-exist",
                     m.str() + " missing from the enumeration");
        const Interval p = projective(q, i);
        int rad_dim = 0;
        const auto rad = radical_of_projective(q, i);
        for (const Interval& s : rad) rad_dim += s.dim();
        if (p.dim() != 1 + rad_dim)
            fail(out, "projective-radical-dim", "P(" + std::to_string(i) + ")");
        const size_t expected =
            p.dim() == 1 ? 0u : (q.n() > 1 && i > 1 && i < q.n() && q.is_source(i) ? 2u : 1u);
        if (rad.size() != expected)
            fail(out, "radical-summand-count", "P(" + std::to_string(i) + ") has " +
                                                   std::to_string(rad.size()));
        const auto tops = top_vertices(q, p);
        if (tops != std::vector<int>{i})
            fail(out, "projective-top", "P(" + std::to_string(i) + ")");
        const auto socs = socle_vertices(q, injective(q, i));
        if (socs != std::vector<int>{i})
            fail(out, "injective-socle", "I(" + std::to_string(i) + ")");
    }
    for (const Interval& m : modules) {
        // socle/top against the subset oracle
        std::vector<int> soc_oracle, top_oracle;
        const auto subs = submodule_supports(q, m);
        const std::set<std::vector<int>> subset(subs.begin(), subs.end());
        for (int v = m.a; v <= m.b; ++v) {
            if (subset.count({v})) soc_oracle.push_back(v);
            std::vector<int> without;
            for (int w = m.a; w <= m.b; ++w)
                if (w != v) without.push_back(w);
            if (subset.count(without)) top_oracle.push_back(v);
        }
        if (socle_vertices(q, m) != soc_oracle)
            fail(out, "socle-vs-subset-oracle", m.str());
        if (top_vertices(q, m) != top_oracle)
            fail(out, "top-vs-subset-oracle", m.str());
        bool interior_extreme = false;
        for (int v = m.a + 1; v <= m.b - 1; ++v)
            if (q.is_source(v) || q.is_sink(v)) interior_extreme = true;
        if (is_uniserial_bruteforce(q, m) != !interior_extreme)
            fail(out, "uniserial-characterization", m.str());
        if ((socle_vertices(q, m).size() == 1) != (socle(q, m).size() == 1))
            fail(out, "socle-simple-characterization", m.str());
    }
}

void check_hom(const Quiver& q, const Options& opts, FailureList& out) {
    const auto modules = all_indecomposables(q);
    for (const Interval& m : modules) {
        const auto self = basis_hom(q, m, m);
        if (!self || self->support != m)
            fail(out, "identity-hom", m.str());
        for (const Interval& n : modules) {
            const auto f = basis_hom(q, m, n);
            if (opts.with_matrix) {
                const MatrixHom mh = matrix_hom(q, m, n);
                if (mh.dim > 1)
                    fail(out, "hom-dim-bound", m.str() + " -> " + n.str() + " has dim " +
                                                   std::to_string(mh.dim));
                if ((mh.dim == 1) != f.has_value())
                    fail(out, "hom-vs-matrix", m.str() + " -> " + n.str());
                else if (f && (!mh.contiguous || mh.support != f->support))
                    fail(out, "hom-support-vs-matrix", f->str());
            }
            if (!f) continue;
            int ker_dim = 0, coker_dim = 0;
            for (const Interval& k : kernel(*f)) ker_dim += k.dim();
            for (const Interval& c : cokernel(*f)) coker_dim += c.dim();
            if (m.dim() != ker_dim + image(*f).dim() ||
                n.dim() != image(*f).dim() + coker_dim)
                fail(out, "rank-nullity", f->str());
            // a nonzero composite with the identity is the morphism itself
            const auto idm = basis_hom(q, m, m);
            const auto idn = basis_hom(q, n, n);
            if (!(compose(*f, *idm) == f) || !(compose(*idn, *f) == f))
                fail(out, "identity-neutral", f->str());
        }
    }
    // composites of canonical generators are canonical generators
    for (const Interval& x : modules)
        for (const Interval& y : modules) {
            const auto f = basis_hom(q, x, y);
            if (!f) continue;
            for (const Interval& z : modules) {
                const auto g = basis_hom(q, y, z);
                if (!g) continue;
                const auto gf = compose(*g, *f);
                if (gf && !(gf == basis_hom(q, x, z)))
                    fail(out, "composite-is-basis", f->str() + " then " + g->str());
            }
        }
    if (static_cast<int>(modules.size()) <= opts.assoc_limit) {
        for (const Interval& x : modules)
            for (const Interval& y : modules) {
                const auto f = basis_hom(q, x, y);
                if (!f) continue;
                for (const Interval& z : modules) {
                    const auto g = basis_hom(q, y, z);
                    if (!g) continue;
                    for (const Interval& w : modules) {
                        const auto h = basis_hom(q, z, w);
                        if (!h) continue;
                        const auto gf = compose(*g, *f);
                        const auto hg = compose(*h, *g);
                        std::optional<Hom> left, right;
                        if (gf) left = compose(*h, *gf);
                        if (hg) right = compose(*hg, *f);
                        if (!(left == right))
                            fail(out, "compose-associativity",
                                 x.str() + y.str() + z.str() + w.str());
                    }
                }
            }
    }
}

void check_ar(const Quiver& q, FailureList& out) {
    ARQuiver ar;
    try {
        ar = build_ar_quiver(q);
    } catch (const std::exception& e) {
        fail(out, "ar-build", e.what());
        return;
    }
    for (const IrreducibleMorphism& irr : ar.irreducibles()) {
        if (kernel(irr.arrow).size() > 1 || cokernel(irr.arrow).size() > 1)
            fail(out, "irreducible-kernel-cokernel-indecomposable", irr.arrow.str());
        const bool monic = kernel(irr.arrow).empty();
        const bool epic = cokernel(irr.arrow).empty();
        if (monic == epic) fail(out, "irreducible-proper", irr.arrow.str());
    }

    int one_middle = 0;
    std::vector<Interval> lefts, rights;
    for (const AlmostSplitSeq& seq : ar.sequences()) {
        if (seq.middle.size() == 1) ++one_middle;
        if (seq.middle.empty() || seq.middle.size() > 2)
            fail(out, "middle-size", seq.right.str());
        std::vector<int> dims(static_cast<size_t>(q.n()) + 2, 0);
        for (const Interval& m : seq.middle)
            for (int v = m.a; v <= m.b; ++v) ++dims[static_cast<size_t>(v)];
        for (int v = seq.left.a; v <= seq.left.b; ++v) --dims[static_cast<size_t>(v)];
        for (int v = seq.right.a; v <= seq.right.b; ++v) --dims[static_cast<size_t>(v)];
        for (int v = 1; v <= q.n(); ++v)
            if (dims[static_cast<size_t>(v)] != 0) {
                fail(out, "mesh-additivity", seq.right.str());
                break;
            }
        if (ar.is_injective(seq.left))
            fail(out, "ass-left-noninjective", seq.left.str());
        if (ar.is_projective(seq.right))
            fail(out, "ass-right-nonprojective", seq.right.str());
        lefts.push_back(seq.left);
        rights.push_back(seq.right);

        if (seq.middle.size() == 2) {
            // maps into one middle term pair with maps out of the other:
            // each pair is both monic or both epic
            const auto l1 = basis_hom(q, seq.left, seq.middle[0]);
            const auto l2 = basis_hom(q, seq.left, seq.middle[1]);
            const auto r1 = basis_hom(q, seq.middle[0], seq.right);
            const auto r2 = basis_hom(q, seq.middle[1], seq.right);
            if (!l1 || !l2 || !r1 || !r2) {
                fail(out, "two-middle-maps-exist", seq.right.str());
            } else {
                const auto is_mono = [](const Hom& h) { return kernel(h).empty(); };
                if (is_mono(*l1) != is_mono(*r2) || is_mono(*l2) != is_mono(*r1))
                    fail(out, "two-middle-mono-epi-pairing", seq.right.str());
            }
        }
    }
    if (q.n() >= 2 && one_middle != q.n() - 1)
        fail(out, "one-middle-term-count",
             "got " + std::to_string(one_middle) + ", expected " + std::to_string(q.n() - 1));

    // lefts are exactly the non-injectives, rights exactly the non-projectives
    std::sort(lefts.begin(), lefts.end());
    std::sort(rights.begin(), rights.end());
    std::vector<Interval> noninj, nonproj;
    for (const Interval& m : ar.modules()) {
        if (!ar.is_injective(m)) noninj.push_back(m);
        if (!ar.is_projective(m)) nonproj.push_back(m);
    }
    if (lefts != noninj) fail(out, "ass-lefts-are-noninjectives", ivs(lefts));
    if (rights != nonproj) fail(out, "ass-rights-are-nonprojectives", ivs(rights));

    for (const Interval& m : ar.modules()) {
        const auto fwd = ar.tau(m);
        if (fwd.has_value() == ar.is_projective(m))
            fail(out, "tau-defined-iff-nonprojective", m.str());
        if (fwd && ar.tau_inv(*fwd) != m) fail(out, "tau-tauinv-identity", m.str());
        const auto bwd = ar.tau_inv(m);
        if (bwd.has_value() == ar.is_injective(m))
            fail(out, "tauinv-defined-iff-noninjective", m.str());
        if (bwd && ar.tau(*bwd) != m) fail(out, "tauinv-tau-identity", m.str());
    }

    for (int i = 1; i <= q.n() - 1; ++i) {
        const AlmostSplitSeq s = string_almost_split(q, i);
        const bool found =
            std::any_of(ar.sequences().begin(), ar.sequences().end(),
                        [&s](const AlmostSplitSeq& t) { return t == s; });
        if (!found)
            fail(out, "string-vs-mesh-sequence",
                 "arrow " + std::to_string(i) + ": 0 -> " + s.left.str() + " -> " +
                     s.middle.front().str() + " -> " + s.right.str() + " -> 0");
    }
}

void check_determiners(const Quiver& q, const Options& opts, FailureList& out) {
    DetReport report;
    try {
        report = det_set(q);
    } catch (const std::exception& e) {
        fail(out, "det-build", e.what());
        return;
    }
    const int n = q.n();
    if (report.predicted.count && report.det_count != *report.predicted.count)
        fail(out, "count-formula",
             "enumerated " + std::to_string(report.det_count) + " != predicted " +
                 std::to_string(*report.predicted.count) + " (" +
                 branch_name(report.predicted.branch) + ")");
    if (n >= 2 && report.det_count > 2 * n - 2)
        fail(out, "count-bound", std::to_string(report.det_count));

    std::set<Interval> projectives, injectives;
    for (int i = 1; i <= n; ++i) {
        projectives.insert(projective(q, i));
        injectives.insert(injective(q, i));
    }

    std::vector<const DeterminerRecord*> monos, epis;
    for (const DeterminerRecord& rec : report.records)
        (rec.morphism.kind == MorphKind::Mono ? monos : epis).push_back(&rec);

    for (const DeterminerRecord* rec : monos) {
        if (rec->cls != DetClass::Projective || !projectives.count(rec->determiner))
            fail(out, "mono-determiner-projective", rec->morphism.arrow.str());
        // a projective almost factoring through a mono admits no map into the
        // source and exactly one into the target
        if (hom_dim(q, rec->determiner, rec->morphism.arrow.source) != 0 ||
            hom_dim(q, rec->determiner, rec->morphism.arrow.target) != 1)
            fail(out, "almost-factoring-hom-dims", rec->morphism.arrow.str());
    }
    for (const DeterminerRecord* rec : epis) {
        if (rec->cls != DetClass::TauInvKernel || projectives.count(rec->determiner))
            fail(out, "epi-determiner-nonprojective", rec->morphism.arrow.str());
    }

    // same determiner iff same cokernel socle (monos) / same kernel (epis)
    for (const DeterminerRecord* f1 : monos)
        for (const DeterminerRecord* f2 : monos) {
            const bool same_det = f1->determiner == f2->determiner;
            const auto soc1 = socle_vertices(q, cokernel(f1->morphism.arrow).front());
            const auto soc2 = socle_vertices(q, cokernel(f2->morphism.arrow).front());
            if (same_det != (soc1 == soc2)) {
                fail(out, "mono-same-determiner-iff-same-socle",
                     f1->morphism.arrow.str() + " vs " + f2->morphism.arrow.str());
            }
        }
    for (const DeterminerRecord* g1 : epis)
        for (const DeterminerRecord* g2 : epis) {
            const bool same_det = g1->determiner == g2->determiner;
            const bool same_ker =
                kernel(g1->morphism.arrow).front() == kernel(g2->morphism.arrow).front();
            if (same_det != same_ker)
                fail(out, "epi-same-determiner-iff-same-kernel",
                     g1->morphism.arrow.str() + " vs " + g2->morphism.arrow.str());
        }

    // interior sources never contribute their projective
    for (int i = 2; i <= n - 1; ++i)
        if (q.is_source(i))
            for (const DeterminerRecord& rec : report.records)
                if (rec.determiner == projective(q, i) && rec.cls == DetClass::Projective &&
                    rec.proj_vertex == i)
                    fail(out, "interior-source-excluded", "P(" + std::to_string(i) + ")");

    // exact exclusion law: P(i) misses the determiner set precisely for the
    // interior sources, for the unique sink, and for sinks with a nonzero
    // sink ideal
    if (n >= 2) {
        std::set<int> excluded;
        for (int i = 2; i <= n - 1; ++i)
            if (q.is_source(i)) excluded.insert(i);
        if (q.sink_count() == 1)
            excluded.insert(q.sinks().front());
        else
            for (const SinkIdealReport& rep : sink_ideals(q))
                if (rep.nonzero) excluded.insert(rep.sink);
        std::set<int> got;
        for (const DeterminerRecord* rec : monos) got.insert(rec->proj_vertex);
        for (int i = 1; i <= n; ++i)
            if (got.count(i) == excluded.count(i))
                fail(out, "projective-determiner-exclusion-law",
                     "P(" + std::to_string(i) + ")");
    }

    // each epi determiner comes from a unique injective source
    {
        std::map<Interval, std::set<Interval>> inj_sources;
        for (const DeterminerRecord* rec : epis)
            if (injectives.count(rec->morphism.arrow.source))
                inj_sources[rec->determiner].insert(rec->morphism.arrow.source);
        for (const auto& [det, sources] : inj_sources)
            if (sources.size() != 1)
                fail(out, "epi-determiner-unique-injective-source", det.str());
    }

    // cokernels of monos = cokernels of monos into projectives = string end terms
    std::set<Interval> coker_all, coker_proj, string_ends, ker_all, ker_inj, string_starts;
    for (const DeterminerRecord* rec : monos) {
        coker_all.insert(cokernel(rec->morphism.arrow).front());
        if (projectives.count(rec->morphism.arrow.target))
            coker_proj.insert(cokernel(rec->morphism.arrow).front());
    }
    for (const DeterminerRecord* rec : epis) {
        ker_all.insert(kernel(rec->morphism.arrow).front());
        if (injectives.count(rec->morphism.arrow.source))
            ker_inj.insert(kernel(rec->morphism.arrow).front());
    }
    for (int i = 1; i <= n - 1; ++i) {
        const AlmostSplitSeq s = string_almost_split(q, i);
        string_ends.insert(s.right);
        string_starts.insert(s.left);
    }
    if (n >= 2) {
        if (coker_all != string_ends || coker_proj != string_ends)
            fail(out, "mono-cokernels-are-string-ends", "");
        if (ker_all != string_starts || ker_inj != string_starts)
            fail(out, "epi-kernels-are-string-starts", "");
    }

    // each epi determiner is the end of exactly one one-middle-term sequence;
    // each mono determiner is shared with a mono into a projective
    for (const DeterminerRecord* rec : epis) {
        int hits = 0;
        for (int i = 1; i <= n - 1; ++i)
            if (string_almost_split(q, i).right == rec->determiner) ++hits;
        if (hits != 1)
            fail(out, "epi-determiner-unique-arrow", rec->morphism.arrow.str());
    }
    for (const DeterminerRecord* rec : monos) {
        bool shared = false;
        for (const DeterminerRecord* other : monos)
            if (projectives.count(other->morphism.arrow.target) &&
                other->determiner == rec->determiner)
                shared = true;
        if (!shared)
            fail(out, "mono-determiner-shared-with-projective-mono",
                 rec->morphism.arrow.str());
    }

    // bounding by the relation-free algebra
    if (!q.relations().empty()) {
        const DetReport free_report = det_set(Quiver::make(n, q.orientation()));
        if (report.det_count > free_report.det_count)
            fail(out, "relation-monotonicity",
                 std::to_string(report.det_count) + " > " +
                     std::to_string(free_report.det_count));
    }

    // orientation recovery from the projective determiners
    if (n >= 2) {
        std::set<int> proj_vertices;
        for (const DeterminerRecord* rec : monos) proj_vertices.insert(rec->proj_vertex);
        std::set<int> low, high;
        for (int i = 1; i <= n - 1; ++i) low.insert(i);
        for (int i = 2; i <= n; ++i) high.insert(i);
        const bool all_right =
            std::all_of(q.orientation().begin(), q.orientation().end(),
                        [](Dir d) { return d == Dir::Right; });
        const bool all_left =
            std::all_of(q.orientation().begin(), q.orientation().end(),
                        [](Dir d) { return d == Dir::Left; });
        if (q.relations().empty()) {
            if ((report.det_count == 2 * n - 2 && proj_vertices == low) != all_right)
                fail(out, "orientation-recovery-right", "");
            if ((report.det_count == 2 * n - 2 && proj_vertices == high) != all_left)
                fail(out, "orientation-recovery-left", "");
        }
    }

    if (opts.with_oracle) {
        for (const DeterminerRecord& rec : report.records) {
            try {
                const Interval oracle = oracle_minimal_determiner(q, rec.morphism);
                if (!(oracle == rec.determiner))
                    fail(out, "oracle-vs-closed-form",
                         rec.morphism.arrow.str() + ": oracle " + oracle.str() +
                             ", closed form " + rec.determiner.str());
            } catch (const std::exception& e) {
                fail(out, "oracle-vs-closed-form", e.what());
            }
        }
    }
}

} // namespace

std::vector<Failure> run_invariant_suite(const Quiver& q, const Options& opts) {
    FailureList out;
    check_vertex_classes(q, out);
    check_roundtrip(q, out);
    check_sink_ideals(q, out);
    check_indecomposables(q, out);
    check_hom(q, opts, out);
    check_ar(q, out);
    check_determiners(q, opts, out);
    return out;
}

} // namespace ardet::checks
