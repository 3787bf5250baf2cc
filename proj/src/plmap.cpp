#include "swc/plmap.hpp"

#include <algorithm>

namespace swc {

void pl_validate(const PLMap1D& map) {
    const auto& v = map.pts;
    if (v.empty())
        return;
    if (v.size() == 1) {
        if (v[0].first != v[0].second)
            throw DomainError("PLMap1D: single breakpoint must be a fixed point");
        return;
    }
    for (size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1].first < v[i].first))
            throw DomainError("PLMap1D: inputs not strictly increasing");
        if (!(v[i - 1].second < v[i].second))
            throw DomainError("PLMap1D: outputs not strictly increasing");
    }
    if (v.front().first != v.front().second || v.back().first != v.back().second)
        throw DomainError("PLMap1D: endpoints must be fixed points");
}

PLMap1D pl_from_points(std::vector<std::pair<Rat, Rat>> pts) {
    PLMap1D m{std::move(pts)};
    pl_validate(m);
    return m;
}

namespace {

Rat interp(const Rat& a, const Rat& fa, const Rat& b, const Rat& fb, const Rat& s) {
    return fa + (s - a) * (fb - fa) / (b - a);
}

} // namespace

Rat pl_eval(const PLMap1D& map, const Rat& s) {
    const auto& v = map.pts;
    if (v.empty() || s <= v.front().first || s >= v.back().first)
        return s;
    // first breakpoint with input >= s
    auto it = std::lower_bound(v.begin(), v.end(), s,
                               [](const auto& bp, const Rat& x) { return bp.first < x; });
    if (it->first == s)
        return it->second;
    auto prev = it - 1;
    return interp(prev->first, prev->second, it->first, it->second, s);
}

Rat pl_inverse_eval(const PLMap1D& map, const Rat& t) {
    const auto& v = map.pts;
    if (v.empty() || t <= v.front().second || t >= v.back().second)
        return t;
    auto it = std::lower_bound(v.begin(), v.end(), t,
                               [](const auto& bp, const Rat& y) { return bp.second < y; });
    if (it->second == t)
        return it->first;
    auto prev = it - 1;
    return interp(prev->second, prev->first, it->second, it->first, t);
}

PLMap1D pl_compose(const PLMap1D& outer, const PLMap1D& inner) {
    if (inner.empty())
        return outer;
    if (outer.empty())
        return inner;
    std::vector<Rat> xs;
    xs.reserve(inner.size() + outer.size());
    for (const auto& bp : inner.pts)
        xs.push_back(bp.first);
    for (const auto& bp : outer.pts)
        xs.push_back(pl_inverse_eval(inner, bp.first));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs)
        pts.emplace_back(x, pl_eval(outer, pl_eval(inner, x)));
    // collinear or redundant identity tails may violate nothing; validate anyway
    PLMap1D out{std::move(pts)};
    pl_validate(out);
    return out;
}

PLMap1D pl_inverse(const PLMap1D& map) {
    PLMap1D inv;
    inv.pts.reserve(map.size());
    for (const auto& bp : map.pts)
        inv.pts.emplace_back(bp.second, bp.first);
    return inv;
}

TentProfile::TentProfile(Rat d) : delta(std::move(d)) {
    if (!(delta > 0) || !(delta < rat(1, 2)))
        throw DomainError("TentProfile: delta must lie in (0, 1/2), got " + rat_str(delta));
}

Rat TentProfile::eval(const Rat& y) const {
    if (y <= 0 || y >= 1)
        return rat(0);
    if (y < delta)
        return y / delta;
    Rat om = 1 - delta;
    if (y > om)
        return (1 - y) / delta;
    return rat(1);
}

} // namespace swc
