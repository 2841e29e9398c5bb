#include "ardet/sweep.hpp"

#include <algorithm>

namespace ardet {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    return bound == 0 ? 0 : rng() % bound;
}

struct Run {
    int first_arrow = 0;
    int last_arrow = 0;
    Dir dir = Dir::Right;
    int arrows() const { return last_arrow - first_arrow + 1; }
};

std::vector<Run> directed_runs(const Quiver& q) {
    std::vector<Run> runs;
    for (int w = 1; w <= q.n() - 1; ++w) {
        if (!runs.empty() && runs.back().dir == q.dir(w) && runs.back().last_arrow == w - 1)
            runs.back().last_arrow = w;
        else
            runs.push_back({w, w, q.dir(w)});
    }
    return runs;
}

Relation relation_on(const Run& run, int lo_arrow, int hi_arrow) {
    Relation rel;
    if (run.dir == Dir::Right)
        for (int v = lo_arrow; v <= hi_arrow + 1; ++v) rel.vertices.push_back(v);
    else
        for (int v = hi_arrow + 1; v >= lo_arrow; --v) rel.vertices.push_back(v);
    return rel;
}

std::vector<checks::Failure> quick_case_checks(const Quiver& q) {
    std::vector<checks::Failure> out;
    DetReport report;
    try {
        report = det_set(q);
    } catch (const std::exception& e) {
        out.push_back({"det-build", e.what()});
        return out;
    }
    if (report.predicted.count && report.det_count != *report.predicted.count)
        out.push_back({"count-formula",
                       "enumerated " + std::to_string(report.det_count) + " != predicted " +
                           std::to_string(*report.predicted.count) + " (" +
                           branch_name(report.predicted.branch) + ")"});
    if (q.n() >= 2 && report.det_count > 2 * q.n() - 2)
        out.push_back({"count-bound", std::to_string(report.det_count)});
    try {
        const ARQuiver ar = build_ar_quiver(q);
        int one_middle = 0;
        for (const AlmostSplitSeq& seq : ar.sequences())
            if (seq.middle.size() == 1) ++one_middle;
        if (q.n() >= 2 && one_middle != q.n() - 1)
            out.push_back({"one-middle-term-count", std::to_string(one_middle)});
    } catch (const std::exception& e) {
        out.push_back({"ar-build", e.what()});
    }
    if (!q.relations().empty()) {
        const DetReport free_report = det_set(Quiver::make(q.n(), q.orientation()));
        if (report.det_count > free_report.det_count)
            out.push_back({"relation-monotonicity",
                           std::to_string(report.det_count) + " > " +
                               std::to_string(free_report.det_count)});
    }
    return out;
}

} // namespace

std::vector<std::vector<Dir>> all_orientations(int n) {
    std::vector<std::vector<Dir>> out;
    const int arrows = n - 1;
    for (std::uint32_t bits = 0; bits < (1u << arrows); ++bits) {
        std::vector<Dir> o(static_cast<size_t>(arrows));
        for (int k = 0; k < arrows; ++k)
            o[static_cast<size_t>(k)] = (bits >> k) & 1 ? Dir::Left : Dir::Right;
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<Dir> mirrored(const std::vector<Dir>& orientation) {
    std::vector<Dir> out(orientation.rbegin(), orientation.rend());
    for (Dir& d : out) d = opposite(d);
    return out;
}

std::vector<Relation> random_reduced_relations(const Quiver& shape, std::mt19937_64& rng) {
    std::vector<Run> eligible;
    for (const Run& run : directed_runs(shape))
        if (run.arrows() >= 2) eligible.push_back(run);
    if (eligible.empty()) return {};

    std::vector<bool> picked(eligible.size(), false);
    bool any = false;
    for (size_t k = 0; k < eligible.size(); ++k) {
        picked[k] = below(rng, 2) == 0;
        any = any || picked[k];
    }
    if (!any) picked[static_cast<size_t>(below(rng, eligible.size()))] = true;

    std::vector<Relation> rels;
    for (size_t k = 0; k < eligible.size(); ++k) {
        if (!picked[k]) continue;
        const Run& run = eligible[k];
        const int count = 1 + static_cast<int>(below(rng, 2));
        for (int j = 0; j < count; ++j) {
            // a zero path needs at least two arrows inside the run
            const int lo =
                run.first_arrow + static_cast<int>(below(rng, run.arrows() - 1));
            const int max_len = run.last_arrow - lo + 1;
            const int len = 2 + static_cast<int>(below(rng, max_len - 1));
            rels.push_back(relation_on(run, lo, lo + len - 1));
        }
    }

    // keep only minimal ranges (drop duplicates and containing ranges)
    std::vector<Relation> reduced;
    for (const Relation& cand : rels) {
        bool keep = true;
        for (const Relation& other : rels) {
            if (&other == &cand) continue;
            const bool contains_other =
                cand.lo() <= other.lo() && other.hi() <= cand.hi();
            const bool same = cand.lo() == other.lo() && cand.hi() == other.hi();
            if (contains_other && !same) keep = false;
            if (same && &other < &cand) keep = false; // drop later duplicates
        }
        if (keep) reduced.push_back(cand);
    }
    return reduced;
}

SweepSummary run_sweep(const SweepOptions& opts) {
    SweepSummary summary;
    std::mt19937_64 rng(opts.seed);

    auto record = [&summary](const Quiver& q, const std::vector<checks::Failure>& failures) {
        ++summary.cases;
        if (!q.relations().empty()) ++summary.bound_cases;
        for (const checks::Failure& f : failures)
            summary.failures.push_back({q.render(), f.name, f.detail});
    };

    for (int n = opts.n_min; n <= opts.n_max; ++n) {
        for (const std::vector<Dir>& orientation : all_orientations(n)) {
            if (opts.mod_reflection) {
                const std::vector<Dir> mirror = mirrored(orientation);
                if (std::lexicographical_compare(mirror.begin(), mirror.end(),
                                                 orientation.begin(), orientation.end(),
                                                 [](Dir a, Dir b) {
                                                     return static_cast<int>(a) <
                                                            static_cast<int>(b);
                                                 }))
                    continue;
            }
            const Quiver path = Quiver::make(n, orientation);
            checks::Options copts;
            copts.with_oracle = opts.with_oracle && n <= opts.oracle_n_max;
            record(path, opts.full ? checks::run_invariant_suite(path, copts)
                                   : quick_case_checks(path));
            if (!opts.random_relations) continue;
            for (int t = 0; t < opts.trials; ++t) {
                const std::vector<Relation> rels = random_reduced_relations(path, rng);
                if (rels.empty()) continue; // orientation admits no zero path
                const Quiver bound = Quiver::make(n, orientation, rels);
                record(bound, opts.full ? checks::run_invariant_suite(bound, copts)
                                        : quick_case_checks(bound));
            }
        }
    }
    return summary;
}

} // namespace ardet
