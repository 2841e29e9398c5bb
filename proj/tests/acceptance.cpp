// Acceptance suite: one pass/fail line per criterion, exact tolerances,
// wall-clock budgets where stated. Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ardet/checks.hpp"
#include "ardet/report.hpp"
#include "ardet/sweep.hpp"

using namespace ardet;

namespace {

Interval iv(int a, int b) { return {a, b}; }

Quiver a13_path() {
    return parse_quiver("1 > 2 < 3 > 4 > 5 < 6 < 7 < 8 > 9 > 10 > 11 > 12 > 13");
}

Quiver a13_bound() {
    return parse_quiver("1 > 2 < 3 > 4 > 5 < 6 < 7 < 8 > 9 > 10 > 11 > 12 > 13\n"
                        "rel: 3 4 5\nrel: 8 7 6 5\nrel: 8 9 10\nrel: 11 12 13");
}

Quiver alternating(int two_n) {
    std::vector<Dir> orientation;
    for (int i = 1; i <= two_n - 1; ++i)
        orientation.push_back(i % 2 == 1 ? Dir::Right : Dir::Left);
    return Quiver::make(two_n, orientation);
}

const DeterminerRecord* find_record(const DetReport& report, Interval from, Interval to) {
    for (const DeterminerRecord& rec : report.records)
        if (rec.morphism.arrow.source == from && rec.morphism.arrow.target == to) return &rec;
    return nullptr;
}

// ---- criteria ----------------------------------------------------------

bool criterion_six_vertex(std::string& detail) {
    const Quiver q = parse_quiver("1 < 2 > 3 < 4 > 5 < 6");
    const DetReport report = det_set(q);
    const Interval p3 = projective(q, 3);
    if (!(p3 == iv(3, 3))) {
        detail = "P(3) is not [3,3]";
        return false;
    }
    // the three labeled monos: P(1) -> P(2), P(5) -> P(4), and the unique
    // irreducible out of P(6) (its target is tau^{-1} P(5) = [3,6])
    const DeterminerRecord* f = find_record(report, projective(q, 1), projective(q, 2));
    const DeterminerRecord* g = find_record(report, projective(q, 5), projective(q, 4));
    const DeterminerRecord* h = find_record(report, projective(q, 6), iv(3, 6));
    if (!f || !g || !h) {
        detail = "a labeled mono is missing from the AR quiver";
        return false;
    }
    for (const DeterminerRecord* rec : {f, g, h}) {
        if (rec->morphism.kind != MorphKind::Mono) {
            detail = "labeled morphism is not monic";
            return false;
        }
        if (!(rec->determiner == p3)) {
            detail = rec->morphism.arrow.str() + " determined by " + rec->determiner.str();
            return false;
        }
    }
    return true;
}

bool criterion_alternating(std::string& detail) {
    for (int half = 2; half <= 5; ++half) {
        const int n = 2 * half;
        const Quiver q = alternating(n);
        const DetReport report = det_set(q);
        if (report.det_count != 3 * half) {
            detail = "2n=" + std::to_string(n) + ": det_count " +
                     std::to_string(report.det_count) + " != " + std::to_string(3 * half);
            return false;
        }
        std::set<Interval> expected{projective(q, 1), injective(q, 1), injective(q, n)};
        for (int i = 1; i <= half; ++i) expected.insert(projective(q, 2 * i));
        for (int j = 2; j <= n - 2; ++j) expected.insert(iv(j, j + 1));
        const std::set<Interval> got(report.det_set.begin(), report.det_set.end());
        if (got != expected) {
            detail = "2n=" + std::to_string(n) + ": set mismatch";
            return false;
        }
    }
    return true;
}

bool criterion_thirteen_vertex(std::string& detail) {
    const Quiver path = a13_path();
    const Quiver bound = a13_bound();

    if (!(string_almost_split(path, 2).right == iv(3, 5)) ||
        !(string_almost_split(bound, 2).right == iv(3, 4)) ||
        !(string_almost_split(path, 8).right == iv(5, 8)) ||
        !(string_almost_split(bound, 8).right == iv(6, 8))) {
        detail = "string end terms around arrows 2 and 8 are wrong";
        return false;
    }

    const DetReport path_report = det_set(path);
    if (path_report.det_count != 23) {
        detail = "path algebra det_count " + std::to_string(path_report.det_count);
        return false;
    }
    std::set<Interval> expected;
    for (int i = 1; i <= 13; ++i)
        if (i != 3 && i != 8) expected.insert(projective(path, i));
    for (int s : {1, 4, 6, 7, 9, 10, 11, 12}) expected.insert(iv(s, s));
    for (Interval m : {iv(3, 5), iv(2, 3), iv(8, 13), iv(5, 8)}) expected.insert(m);
    if (std::set<Interval>(path_report.det_set.begin(), path_report.det_set.end()) !=
        expected) {
        detail = "path algebra set mismatch";
        return false;
    }

    const DetReport bound_report = det_set(bound);
    if (bound_report.det_count != 21) {
        detail = "bound algebra det_count " + std::to_string(bound_report.det_count);
        return false;
    }
    expected.clear();
    for (int i = 1; i <= 13; ++i)
        if (i != 3 && i != 5 && i != 8 && i != 13) expected.insert(projective(bound, i));
    for (int s : {1, 4, 6, 7, 9, 10, 11, 12}) expected.insert(iv(s, s));
    for (Interval m : {iv(3, 4), iv(2, 3), iv(8, 9), iv(6, 8)}) expected.insert(m);
    if (std::set<Interval>(bound_report.det_set.begin(), bound_report.det_set.end()) !=
        expected) {
        detail = "bound algebra set mismatch";
        return false;
    }
    return true;
}

bool criterion_path_formula(std::string& detail) {
    long cases = 0;
    for (int n = 2; n <= 8; ++n)
        for (const std::vector<Dir>& o : all_orientations(n)) {
            const Quiver q = Quiver::make(n, o);
            const DetReport report = det_set(q);
            const int p = q.interior_source_count();
            const int expected = p == 0 ? 2 * n - 2 : 2 * n - p - 1;
            if (report.det_count != expected) {
                detail = q.render() + "det_count " + std::to_string(report.det_count) +
                         " != " + std::to_string(expected);
                return false;
            }
            ++cases;
        }
    if (cases != 254) {
        detail = "expected 254 orientations, swept " + std::to_string(cases);
        return false;
    }
    detail = "254 orientations";
    return true;
}

// shared by criteria 5 and 7
std::vector<Quiver> seeded_bound_cases() {
    std::vector<Quiver> out;
    std::mt19937_64 rng(20260809);
    for (int n = 3; n <= 8; ++n)
        for (const std::vector<Dir>& o : all_orientations(n)) {
            const Quiver shape = Quiver::make(n, o);
            for (int t = 0; t < 2; ++t) {
                const std::vector<Relation> rels = random_reduced_relations(shape, rng);
                if (!rels.empty()) out.push_back(Quiver::make(n, o, rels));
            }
        }
    return out;
}

bool criterion_bound_formula(std::string& detail) {
    const std::vector<Quiver> cases = seeded_bound_cases();
    if (cases.size() < 200) {
        detail = "only " + std::to_string(cases.size()) + " bound cases generated";
        return false;
    }
    for (const Quiver& q : cases) {
        const int n = q.n();
        const int r = q.sink_count();
        const int expected = r == 1 ? 2 * n - 2
                                    : 2 * n - q.interior_source_count() -
                                          nonzero_sink_ideal_count(q) - 1;
        const DetReport report = det_set(q);
        if (report.det_count != expected) {
            detail = q.render() + "det_count " + std::to_string(report.det_count) + " != " +
                     std::to_string(expected);
            return false;
        }
    }
    detail = std::to_string(cases.size()) + " seeded bound cases";
    return true;
}

bool criterion_oracle(std::string& detail) {
    long morphisms = 0;
    for (int n = 2; n <= 5; ++n)
        for (const std::vector<Dir>& o : all_orientations(n)) {
            const Quiver q = Quiver::make(n, o);
            const DetReport report = det_set(q);
            for (const DeterminerRecord& rec : report.records) {
                Interval oracle{0, 0};
                try {
                    // throws unless exactly one candidate is marked
                    oracle = oracle_minimal_determiner(q, rec.morphism);
                } catch (const InternalError& e) {
                    detail = q.render() + e.what();
                    return false;
                }
                if (!(oracle == rec.determiner)) {
                    detail = q.render() + rec.morphism.arrow.str() + ": oracle " +
                             oracle.str() + " vs closed form " + rec.determiner.str();
                    return false;
                }
                ++morphisms;
            }
        }
    detail = std::to_string(morphisms) + " irreducible morphisms";
    return true;
}

bool criterion_one_middle_count(std::string& detail) {
    auto count_ok = [&detail](const Quiver& q) {
        const ARQuiver ar = build_ar_quiver(q);
        int one_middle = 0;
        for (const AlmostSplitSeq& seq : ar.sequences())
            if (seq.middle.size() == 1) ++one_middle;
        if (one_middle != q.n() - 1) {
            detail = q.render() + std::to_string(one_middle) + " one-middle-term sequences";
            return false;
        }
        return true;
    };
    long cases = 0;
    for (int n = 2; n <= 8; ++n)
        for (const std::vector<Dir>& o : all_orientations(n)) {
            if (!count_ok(Quiver::make(n, o))) return false;
            ++cases;
        }
    for (const Quiver& q : seeded_bound_cases()) {
        if (!count_ok(q)) return false;
        ++cases;
    }
    detail = std::to_string(cases) + " swept cases";
    return true;
}

bool criterion_structural_suite(std::string& detail) {
    checks::Options opts; // matrix cross-check on, oracle covered separately
    long cases = 0;
    for (int n = 2; n <= 8; ++n)
        for (const std::vector<Dir>& o : all_orientations(n)) {
            const Quiver q = Quiver::make(n, o);
            const auto failures = checks::run_invariant_suite(q, opts);
            if (!failures.empty()) {
                detail = q.render() + failures.front().name + ": " + failures.front().detail;
                return false;
            }
            ++cases;
        }
    for (const Quiver& q : seeded_bound_cases()) {
        const auto failures = checks::run_invariant_suite(q, opts);
        if (!failures.empty()) {
            detail = q.render() + failures.front().name + ": " + failures.front().detail;
            return false;
        }
        ++cases;
    }
    // both linear orientations carry exactly the projectives and simples
    // away from the closed end
    for (int n = 2; n <= 8; ++n) {
        const Quiver q = Quiver::make(n, std::vector<Dir>(static_cast<size_t>(n - 1),
                                                          Dir::Right));
        const DetReport report = det_set(q);
        std::set<Interval> expected;
        for (int i = 1; i <= n - 1; ++i) {
            expected.insert(projective(q, i));
            expected.insert(simple(q, i));
        }
        if (std::set<Interval>(report.det_set.begin(), report.det_set.end()) != expected) {
            detail = "linear A_" + std::to_string(n) + " determiner set mismatch";
            return false;
        }
    }
    detail = std::to_string(cases) + " cases through the invariant suite";
    return true;
}

} // namespace

int main() {
    struct Criterion {
        std::string name;
        double budget_seconds; // 0 = no stated budget
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {"six-vertex showcase: the three labeled monos are all determined by P(3)=[3,3]",
         1.0, criterion_six_vertex},
        {"alternating A_2n (n=2..5): |Det| = 3n with the exact determiner set", 1.0,
         criterion_alternating},
        {"13-vertex quiver: |Det| = 23 relation-free and 21 bound, element for element",
         1.0, criterion_thirteen_vertex},
        {"relation-free count formula on every orientation, 2 <= n <= 8", 30.0,
         criterion_path_formula},
        {"bound count formula on >= 200 seeded random relation sets, n <= 8", 60.0,
         criterion_bound_formula},
        {"brute-force determinedness oracle equals the closed form, n <= 5", 300.0,
         criterion_oracle},
        {"exactly n-1 one-middle-term sequences on every swept case", 0.0,
         criterion_one_middle_count},
        {"structural property suite on every orientation and bound case, n <= 8", 0.0,
         criterion_structural_suite},
    };

    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[k].run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criteria[k].budget_seconds > 0 && seconds > criteria[k].budget_seconds) {
            ok = false;
            detail = "exceeded the " + std::to_string(criteria[k].budget_seconds) +
                     " s budget";
        }
        std::printf("%s  %zu. %s%s%s  (%.2f s)\n", ok ? "PASS" : "FAIL", k + 1,
                    criteria[k].name.c_str(), detail.empty() ? "" : ": ", detail.c_str(),
                    seconds);
        if (!ok) ++failed;
    }
    if (failed) {
        std::printf("%d of %zu criteria failed\n", failed, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
