#pragma once

#include <optional>
#include <span>
#include <utility>

#include "swc/rat.hpp"

namespace swc {

/* Chart between the open unit interval and the half line:
 *   h(t) = t / (1 - t),  h^{-1}(s) = s / (1 + s).
 * Both directions map rationals to rationals, which is what makes
 * zero-tolerance verification possible downstream. */
Rat chart_fwd(const Rat& t);  // (0,1) -> (0,inf); DomainError outside
Rat chart_inv(const Rat& s);  // (0,inf) -> (0,1); DomainError outside
Rat chart_map(const Rat& t, bool forward);

/* Levels are capped so 2^n stays materializable; see DepthLimitError. */
inline constexpr long long kMaxLevel = 1ll << 31;

struct BallIndex {
    long long n; // level, n >= 0
    Int k;       // 0 <= k < 2^n

    bool operator==(const BallIndex&) const = default;
};

/* First-coordinate slab interval at (level n, index k):
 *   ( n + (1+3k)/(3*2^n), n + (2+3k)/(3*2^n) ) x (0,1)^{m-1}. */
struct IntervalBox {
    long long n;
    Int k;
    Rat lo, hi;
};

IntervalBox interval_of(long long n, const Int& k);
inline IntervalBox interval_of(long long n, long long k) { return interval_of(n, Int(k)); }

/* Preimage of IntervalBox(n,k) under h x id: an open box inside (0,1)^m.
 * Only the first coordinate is recorded; the cross-section is (0,1)^{m-1}. */
struct Ball {
    long long n;
    Int k;
    Rat xlo, xhi;

    Rat center_x() const { return (xlo + xhi) / 2; }
};

Ball ball_of(long long n, const Int& k);
inline Ball ball_of(long long n, long long k) { return ball_of(n, Int(k)); }

/* Ball with its cross-section shrunk to [delta, 1-delta]^{m-1}. All function
 * supports live inside cores, where the damping profile is identically 1. */
struct CoreBall {
    Ball base;
    Rat delta;
};

CoreBall core_ball_of(long long n, const Int& k, const Rat& delta);

/* Unique (n,k) with p in Ball(n,k), if any. Points on ball boundaries, slab
 * boundaries, or outside the open cube return nullopt. */
std::optional<BallIndex> locate(std::span<const Rat> p);

/* Same test in slab coordinates: s = h(x1), cross coordinates unchecked. */
std::optional<BallIndex> locate_slab(const Rat& s);

} // namespace swc
