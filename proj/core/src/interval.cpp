#include "ardet/interval.hpp"

#include <algorithm>

namespace ardet {

bool is_module(const Quiver& q, Interval m) {
    return 1 <= m.a && m.a <= m.b && m.b <= q.n() && !q.relation_inside(m.a, m.b);
}

std::vector<Interval> all_indecomposables(const Quiver& q) {
    std::vector<Interval> out;
    for (int a = 1; a <= q.n(); ++a)
        for (int b = a; b <= q.n(); ++b)
            if (!q.relation_inside(a, b)) out.push_back({a, b});
    return out;
}

namespace {

void require_vertex(const Quiver& q, int i) {
    if (i < 1 || i > q.n())
        throw ValidationError("vertex " + std::to_string(i) + " out of range 1.." +
                              std::to_string(q.n()));
}

} // namespace

Interval simple(const Quiver& q, int i) {
    require_vertex(q, i);
    return {i, i};
}

Interval projective(const Quiver& q, int i) {
    require_vertex(q, i);
    int s = i;
    while (s > 1 && q.arrow_left(s - 1) && !q.relation_inside(s - 1, i)) --s;
    int t = i;
    while (t < q.n() && q.arrow_right(t) && !q.relation_inside(i, t + 1)) ++t;
    return {s, t};
}

Interval injective(const Quiver& q, int i) {
    require_vertex(q, i);
    int s = i;
    while (s > 1 && q.arrow_right(s - 1) && !q.relation_inside(s - 1, i)) --s;
    int t = i;
    while (t < q.n() && q.arrow_left(t) && !q.relation_inside(i, t + 1)) ++t;
    return {s, t};
}

std::vector<Interval> radical_of_projective(const Quiver& q, int i) {
    const Interval p = projective(q, i);
    std::vector<Interval> out;
    if (p.a <= i - 1) out.push_back({p.a, i - 1});
    if (i + 1 <= p.b) out.push_back({i + 1, p.b});
    return out;
}

std::vector<int> socle_vertices(const Quiver& q, Interval m) {
    std::vector<int> out;
    for (int v = m.a; v <= m.b; ++v) {
        const bool leaves_left = v > m.a && q.arrow_left(v - 1);
        const bool leaves_right = v < m.b && q.arrow_right(v);
        if (!leaves_left && !leaves_right) out.push_back(v);
    }
    return out;
}

std::vector<int> top_vertices(const Quiver& q, Interval m) {
    std::vector<int> out;
    for (int v = m.a; v <= m.b; ++v) {
        const bool enters_left = v > m.a && q.arrow_right(v - 1);
        const bool enters_right = v < m.b && q.arrow_left(v);
        if (!enters_left && !enters_right) out.push_back(v);
    }
    return out;
}

std::vector<Interval> socle(const Quiver& q, Interval m) {
    std::vector<Interval> out;
    for (int v : socle_vertices(q, m)) out.push_back({v, v});
    return out;
}

std::vector<Interval> top(const Quiver& q, Interval m) {
    std::vector<Interval> out;
    for (int v : top_vertices(q, m)) out.push_back({v, v});
    return out;
}

std::vector<std::string> module_labels(const Quiver& q, Interval m) {
    std::vector<std::string> out;
    for (int i = 1; i <= q.n(); ++i)
        if (projective(q, i) == m) out.push_back("P(" + std::to_string(i) + ")");
    for (int i = 1; i <= q.n(); ++i)
        if (injective(q, i) == m) out.push_back("I(" + std::to_string(i) + ")");
    if (m.a == m.b) out.push_back("S(" + std::to_string(m.a) + ")");
    return out;
}

} // namespace ardet
