#include "swc/geometry.hpp"

namespace swc {

Rat chart_fwd(const Rat& t) {
    if (!(t > 0) || !(t < 1))
        throw DomainError("chart_fwd: t must lie in (0,1), got " + rat_str(t));
    return t / (1 - t);
}

Rat chart_inv(const Rat& s) {
    if (!(s > 0))
        throw DomainError("chart_inv: s must be positive, got " + rat_str(s));
    return s / (1 + s);
}

Rat chart_map(const Rat& t, bool forward) {
    return forward ? chart_fwd(t) : chart_inv(t);
}

namespace {

void check_index(long long n, const Int& k) {
    if (n < 0)
        throw IndexError("level must be nonnegative");
    if (n > kMaxLevel)
        throw DepthLimitError("level " + std::to_string(n) + " exceeds the configured bound");
    if (k < 0 || k >= pow2(static_cast<unsigned long>(n)))
        throw IndexError("index " + k.get_str() + " out of range at level " + std::to_string(n));
}

} // namespace

IntervalBox interval_of(long long n, const Int& k) {
    check_index(n, k);
    Int den = 3 * pow2(static_cast<unsigned long>(n));
    Rat lo = n + rat(1 + 3 * k, den);
    Rat hi = n + rat(2 + 3 * k, den);
    return IntervalBox{n, k, lo, hi};
}

Ball ball_of(long long n, const Int& k) {
    IntervalBox box = interval_of(n, k);
    return Ball{n, k, chart_inv(box.lo), chart_inv(box.hi)};
}

CoreBall core_ball_of(long long n, const Int& k, const Rat& delta) {
    if (!(delta > 0) || !(delta < rat(1, 2)))
        throw DomainError("core_ball_of: delta must lie in (0,1/2)");
    return CoreBall{ball_of(n, k), delta};
}

std::optional<BallIndex> locate_slab(const Rat& s) {
    if (!(s > 0))
        return std::nullopt;
    Int nz = rat_floor(s);
    if (!nz.fits_slong_p() || nz.get_si() > kMaxLevel)
        throw DepthLimitError("locate: slab index " + nz.get_str() + " exceeds the configured bound");
    long long n = nz.get_si();
    Rat f = s - nz; // in [0,1)
    if (f == 0)
        return std::nullopt; // slab boundary
    Rat u = 3 * pow2(static_cast<unsigned long>(n)) * f;
    Int j = rat_floor(u);
    if (u == j)
        return std::nullopt; // exactly on a subdivision point, hence a boundary
    if (j % 3 != 1)
        return std::nullopt; // in a gap between middle thirds
    return BallIndex{n, (j - 1) / 3};
}

std::optional<BallIndex> locate(std::span<const Rat> p) {
    if (p.empty())
        throw DimensionMismatch("locate: empty point");
    for (size_t i = 1; i < p.size(); ++i)
        if (!(p[i] > 0) || !(p[i] < 1))
            return std::nullopt;
    if (!(p[0] > 0) || !(p[0] < 1))
        return std::nullopt;
    return locate_slab(chart_fwd(p[0]));
}

} // namespace swc
