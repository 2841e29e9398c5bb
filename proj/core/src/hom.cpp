#include "ardet/hom.hpp"

#include <stdexcept>

namespace ardet {

std::optional<Hom> basis_hom(const Quiver& q, Interval m, Interval n) {
    const int lo = std::max(m.a, n.a);
    const int hi = std::min(m.b, n.b);
    if (lo > hi) return std::nullopt;

    // Arrows joining two overlap vertices force all scalars equal, so the
    // support is either the whole overlap or empty. The four boundary arrows
    // decide which:
    //   left end:  target-only vertex feeding the overlap kills the scalar;
    //   source-only vertex is harmless only when the arrow exits the overlap.
    if (m.a < n.a && !q.arrow_left(n.a - 1)) return std::nullopt;
    if (m.a > n.a && !q.arrow_right(m.a - 1)) return std::nullopt;
    if (m.b < n.b && !q.arrow_left(m.b)) return std::nullopt;
    if (m.b > n.b && !q.arrow_right(n.b)) return std::nullopt;

    return Hom{m, n, {lo, hi}};
}

int hom_dim(const Quiver& q, Interval m, Interval n) {
    return basis_hom(q, m, n) ? 1 : 0;
}

std::vector<Interval> kernel(const Hom& f) {
    std::vector<Interval> out;
    if (f.source.a <= f.support.a - 1) out.push_back({f.source.a, f.support.a - 1});
    if (f.support.b + 1 <= f.source.b) out.push_back({f.support.b + 1, f.source.b});
    return out;
}

std::vector<Interval> cokernel(const Hom& f) {
    std::vector<Interval> out;
    if (f.target.a <= f.support.a - 1) out.push_back({f.target.a, f.support.a - 1});
    if (f.support.b + 1 <= f.target.b) out.push_back({f.support.b + 1, f.target.b});
    return out;
}

std::optional<Hom> compose(const Hom& g, const Hom& f) {
    if (!(f.target == g.source))
        throw std::invalid_argument("compose: f.target " + f.target.str() +
                                    " != g.source " + g.source.str());
    const int lo = std::max(f.support.a, g.support.a);
    const int hi = std::min(f.support.b, g.support.b);
    if (lo > hi) return std::nullopt;
    return Hom{f.source, g.target, {lo, hi}};
}

bool factors_through(const Quiver& q, const Hom& fprime, const Hom& f) {
    if (!(fprime.target == f.target))
        throw std::invalid_argument("factors_through: targets differ, " + fprime.target.str() +
                                    " vs " + f.target.str());
    const std::optional<Hom> lift = basis_hom(q, fprime.source, f.source);
    if (!lift) return false;
    const std::optional<Hom> composite = compose(f, *lift);
    return composite && composite->support == fprime.support;
}

bool factors_through(const Quiver& q, const std::optional<Hom>& fprime, const Hom& f) {
    return !fprime || factors_through(q, *fprime, f);
}

} // namespace ardet
