#include "support.hpp"

namespace ardet::testsupport {

std::vector<std::vector<Relation>> all_reduced_relation_sets(const Quiver& shape) {
    // candidate zero paths: every range of >= 2 arrows inside a directed run
    std::vector<Relation> candidates;
    for (int lo = 1; lo <= shape.n() - 2; ++lo) {
        for (int hi = lo + 1; hi <= shape.n() - 1; ++hi) {
            bool same_dir = true;
            for (int w = lo; w <= hi; ++w)
                if (shape.dir(w) != shape.dir(lo)) same_dir = false;
            if (!same_dir) continue;
            Relation rel;
            if (shape.dir(lo) == Dir::Right)
                for (int v = lo; v <= hi + 1; ++v) rel.vertices.push_back(v);
            else
                for (int v = hi + 1; v >= lo; --v) rel.vertices.push_back(v);
            candidates.push_back(std::move(rel));
        }
    }

    std::vector<std::vector<Relation>> out;
    const size_t k = candidates.size();
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::vector<Relation> set;
        for (size_t j = 0; j < k; ++j)
            if (mask & (1ull << j)) set.push_back(candidates[j]);
        bool reduced = true;
        for (size_t i = 0; i < set.size() && reduced; ++i)
            for (size_t j = 0; j < set.size() && reduced; ++j)
                if (i != j && set[j].lo() <= set[i].lo() && set[i].hi() <= set[j].hi())
                    reduced = false;
        if (reduced) out.push_back(std::move(set));
    }
    return out;
}

} // namespace ardet::testsupport
