#pragma once

#include <utility>
#include <vector>

#include "swc/rat.hpp"

namespace swc {

/* Strictly increasing piecewise-linear self-map of the line, stored as its
 * finite breakpoint list. The first and last breakpoints are fixed points
 * (input == output), so the map extends to an increasing bijection of R that
 * is the identity outside the breakpoint span. The empty list is the
 * identity map. */
struct PLMap1D {
    std::vector<std::pair<Rat, Rat>> pts;

    static PLMap1D identity() { return {}; }
    bool empty() const { return pts.empty(); }
    size_t size() const { return pts.size(); }
};

/* Throws DomainError unless inputs and outputs are strictly increasing and
 * the first/last breakpoints are fixed points. */
void pl_validate(const PLMap1D& map);

PLMap1D pl_from_points(std::vector<std::pair<Rat, Rat>> pts);

Rat pl_eval(const PLMap1D& map, const Rat& s);
Rat pl_inverse_eval(const PLMap1D& map, const Rat& t);

/* Evaluates as outer(inner(s)) everywhere. Breakpoint inputs are the inputs
 * of inner plus the inner-preimages of the inputs of outer. */
PLMap1D pl_compose(const PLMap1D& outer, const PLMap1D& inner);

PLMap1D pl_inverse(const PLMap1D& map);

/* Cross-section damping profile: 0 at 0 and 1, 1 on [delta, 1-delta],
 * linear in between, 0 outside (0,1). Requires 0 < delta < 1/2. */
struct TentProfile {
    Rat delta;

    explicit TentProfile(Rat d);
    Rat eval(const Rat& y) const;
};

} // namespace swc
