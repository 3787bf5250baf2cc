#include "swc/swindle.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>

namespace swc {

bool kind_is_phi(SwindleKind k) {
    return k == SwindleKind::phi_minus || k == SwindleKind::phi_plus;
}

bool kind_is_plus(SwindleKind k) {
    return k == SwindleKind::phi_plus || k == SwindleKind::psi_plus;
}

long long source_level(SwindleKind k, long long family_n) {
    return kind_is_phi(k) ? 2 * family_n : 2 * family_n + 1;
}

Int target_index(SwindleKind k, long long src_level, const Int& src_k) {
    return kind_is_plus(k) ? pow2(static_cast<unsigned long>(src_level)) + src_k : src_k;
}

std::string kind_name(SwindleKind k) {
    switch (k) {
    case SwindleKind::phi_minus: return "phi-minus";
    case SwindleKind::phi_plus: return "phi-plus";
    case SwindleKind::psi_minus: return "psi-minus";
    case SwindleKind::psi_plus: return "psi-plus";
    }
    return "?";
}

SwindleKind kind_from_name(std::string_view s) {
    if (s == "phi-minus") return SwindleKind::phi_minus;
    if (s == "phi-plus") return SwindleKind::phi_plus;
    if (s == "psi-minus") return SwindleKind::psi_minus;
    if (s == "psi-plus") return SwindleKind::psi_plus;
    throw DomainError("unknown map kind '" + std::string(s) + "'");
}

namespace {

Rat interp(const Rat& a, const Rat& fa, const Rat& b, const Rat& fb, const Rat& s) {
    return fa + (s - a) * (fb - fa) / (b - a);
}

/* One window [L, L+2] of a kind's slab map; L is the source level. */
struct Window {
    SwindleKind kind;
    long long L;
    Int K;      // 2^L sources
    Int threeK; // 3*2^L

    Rat src_lo(const Int& k) const { return Rat(L) + rat(1 + 3 * k, threeK); }
    Rat src_hi(const Int& k) const { return Rat(L) + rat(2 + 3 * k, threeK); }
    Int tgt_index(const Int& k) const { return kind_is_plus(kind) ? K + k : k; }
    Rat tgt_lo(const Int& k) const { return Rat(L + 1) + rat(1 + 3 * tgt_index(k), 2 * threeK); }
    Rat tgt_hi(const Int& k) const { return Rat(L + 1) + rat(2 + 3 * tgt_index(k), 2 * threeK); }
    Rat window_end() const { return Rat(L + 2); }
};

/* Window containing s, or nullopt where the map is the identity (at or below
 * the first window, or exactly on a window endpoint). */
std::optional<Window> window_of(SwindleKind kind, const Rat& s) {
    const int start = kind_is_phi(kind) ? 0 : 1;
    if (s <= start)
        return std::nullopt;
    Int w = rat_floor((s - start) / 2);
    Int Lz = start + 2 * w;
    if (!Lz.fits_slong_p() || Lz.get_si() > kMaxLevel)
        throw DepthLimitError("slab map: window level " + Lz.get_str() +
                              " exceeds the configured bound");
    long long L = Lz.get_si();
    if (s == Lz)
        return std::nullopt; // window endpoint, fixed
    Window win{kind, L, pow2(static_cast<unsigned long>(L)), Int()};
    win.threeK = 3 * win.K;
    return win;
}

} // namespace

Rat slab_map_eval(SwindleKind kind, const Rat& s) {
    auto w = window_of(kind, s);
    if (!w)
        return s;
    const Rat t = s - w->L; // (0,2)
    const Rat u = t * w->threeK;
    if (u < 1) // [L, lo_0] -> [L, tgt_lo(0)]
        return interp(Rat(w->L), Rat(w->L), w->src_lo(0), w->tgt_lo(0), s);
    if (u >= w->threeK - 1) // [hi_{K-1}, L+2] -> [tgt_hi(K-1), L+2]
        return interp(w->src_hi(w->K - 1), w->tgt_hi(w->K - 1), w->window_end(), w->window_end(), s);
    Int j = rat_floor(u);
    Int r = j % 3;
    if (r == 1) { // inside source k (or at its left endpoint)
        Int k = (j - 1) / 3;
        return interp(w->src_lo(k), w->tgt_lo(k), w->src_hi(k), w->tgt_hi(k), s);
    }
    Int k = (r == 2) ? (j - 2) / 3 : j / 3 - 1; // gap [hi_k, lo_{k+1}]
    return interp(w->src_hi(k), w->tgt_hi(k), w->src_lo(k + 1), w->tgt_lo(k + 1), s);
}

Rat slab_map_inverse_eval(SwindleKind kind, const Rat& t) {
    auto w = window_of(kind, t);
    if (!w)
        return t;
    const Int first = kind_is_plus(kind) ? w->K : Int(0);
    const Int last = kind_is_plus(kind) ? 2 * w->K - 1 : w->K - 1;
    // image segments of the initial piece and the final gap
    if (t <= w->tgt_lo(0))
        return interp(Rat(w->L), Rat(w->L), w->tgt_lo(0), w->src_lo(0), t);
    if (t >= w->tgt_hi(w->K - 1))
        return interp(w->tgt_hi(w->K - 1), w->src_hi(w->K - 1), w->window_end(), w->window_end(), t);
    // strictly between the first target's lo and the last target's hi, so in
    // the upper slab (L+1, L+2); locate against level-(L+1) subdivision
    const Rat v = (t - (w->L + 1)) * 2 * w->threeK;
    Int jj = rat_floor(v);
    Int rr = jj % 3;
    Int kappa;
    if (rr == 1) { // inside target kappa
        kappa = (jj - 1) / 3;
        if (kappa < first || kappa > last)
            throw VerificationFailure("slab inverse: value " + rat_str(t) +
                                      " in a non-target interval of " + kind_name(kind));
        Int k = kappa - first;
        return interp(w->tgt_lo(k), w->src_lo(k), w->tgt_hi(k), w->src_hi(k), t);
    }
    kappa = (rr == 2) ? (jj - 2) / 3 : jj / 3 - 1; // gap [tgt_hi(kappa), tgt_lo(kappa+1)]
    assert(kappa >= first && kappa + 1 <= last);
    Int k = kappa - first;
    return interp(w->tgt_hi(k), w->src_hi(k), w->tgt_lo(k + 1), w->src_lo(k + 1), t);
}

Rat slab_blend_eval(SwindleKind kind, const Rat& s, const Rat& lambda) {
    if (lambda == 0)
        return s;
    if (lambda == 1)
        return slab_map_eval(kind, s);
    return (1 - lambda) * s + lambda * slab_map_eval(kind, s);
}

namespace {

/* Breakpoints of one window, indexed 0..2K+1:
 * b_0 = L, b_{2k+1} = lo_k, b_{2k+2} = hi_k, b_{2K+1} = L+2. */
struct Breakpoint {
    Rat x;  // source position
    Rat fx; // F(x)
};

Breakpoint breakpoint_at(const Window& w, const Int& i) {
    if (i == 0)
        return {Rat(w.L), Rat(w.L)};
    if (i == 2 * w.K + 1)
        return {w.window_end(), w.window_end()};
    if (i % 2 == 1) {
        Int k = (i - 1) / 2;
        return {w.src_lo(k), w.tgt_lo(k)};
    }
    Int k = i / 2 - 1;
    return {w.src_hi(k), w.tgt_hi(k)};
}

Rat blend_at(const Breakpoint& b, const Rat& lambda) {
    return (1 - lambda) * b.x + lambda * b.fx;
}

} // namespace

Rat slab_blend_inverse_eval(SwindleKind kind, const Rat& t, const Rat& lambda) {
    if (lambda == 0)
        return t;
    if (lambda == 1)
        return slab_map_inverse_eval(kind, t);
    auto w = window_of(kind, t);
    if (!w)
        return t;
    auto invert_segment = [&](const Breakpoint& a, const Breakpoint& b) {
        return interp(blend_at(a, lambda), a.x, blend_at(b, lambda), b.x, t);
    };
    Breakpoint b0{Rat(w->L), Rat(w->L)};
    Breakpoint firstbp = breakpoint_at(*w, 1);
    if (t <= blend_at(firstbp, lambda))
        return invert_segment(b0, firstbp);
    Breakpoint lastbp = breakpoint_at(*w, 2 * w->K);
    Breakpoint bend{w->window_end(), w->window_end()};
    if (t >= blend_at(lastbp, lambda))
        return invert_segment(lastbp, bend);
    // largest i in [1, 2K-1] with G(b_i) <= t, by binary search; each probe is
    // a closed-form breakpoint, so deep windows stay cheap
    Int loI = 1, hiI = 2 * w->K - 1;
    while (loI < hiI) {
        Int mid = (loI + hiI + 1) / 2;
        if (blend_at(breakpoint_at(*w, mid), lambda) <= t)
            loI = mid;
        else
            hiI = mid - 1;
    }
    return invert_segment(breakpoint_at(*w, loI), breakpoint_at(*w, loI + 1));
}

PLMap1D window_map(SwindleKind kind, long long family_n) {
    if (family_n < 0)
        throw IndexError("window_map: family index must be nonnegative");
    long long L = source_level(kind, family_n);
    if (L > 20)
        throw DepthLimitError("window_map: 2^" + std::to_string(L) +
                              " breakpoints is beyond the materialization bound");
    Window w{kind, L, pow2(static_cast<unsigned long>(L)), Int()};
    w.threeK = 3 * w.K;
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(static_cast<size_t>(2 * w.K.get_ui() + 2));
    pts.emplace_back(Rat(L), Rat(L));
    for (Int k = 0; k < w.K; ++k) {
        pts.emplace_back(w.src_lo(k), w.tgt_lo(k));
        pts.emplace_back(w.src_hi(k), w.tgt_hi(k));
    }
    pts.emplace_back(w.window_end(), w.window_end());
    return pl_from_points(std::move(pts));
}

SwindleHomeo::SwindleHomeo(SwindleKind k, Rat delta, int dim)
    : kind(k), damping(std::move(delta)), m(dim) {
    if (dim < 1)
        throw DimensionMismatch("SwindleHomeo: dimension must be >= 1");
}

Rat SwindleHomeo::cross_damping(const Point& p) const {
    Rat lam = rat(1);
    for (size_t i = 1; i < p.size(); ++i) {
        Rat v = damping.eval(p[i]);
        if (v < lam)
            lam = v;
        if (lam == 0)
            break;
    }
    return lam;
}

Point SwindleHomeo::apply(const Point& p) const {
    if (static_cast<int>(p.size()) != m)
        throw DimensionMismatch("SwindleHomeo::apply: wrong point dimension");
    if (p[0] <= 0 || p[0] >= 1)
        return p;
    Rat lam = cross_damping(p);
    if (lam == 0)
        return p;
    Point out = p;
    out[0] = chart_inv(slab_blend_eval(kind, chart_fwd(p[0]), lam));
    return out;
}

Point SwindleHomeo::apply_inverse(const Point& p) const {
    if (static_cast<int>(p.size()) != m)
        throw DimensionMismatch("SwindleHomeo::apply_inverse: wrong point dimension");
    if (p[0] <= 0 || p[0] >= 1)
        return p;
    Rat lam = cross_damping(p);
    if (lam == 0)
        return p;
    Point out = p;
    out[0] = chart_inv(slab_blend_inverse_eval(kind, chart_fwd(p[0]), lam));
    return out;
}

int HomeoHandle::dim() const {
    if (!node_)
        throw DomainError("HomeoHandle: empty handle");
    return node_->m;
}

bool HomeoHandle::is_identity() const {
    return node_ && node_->kind == Kind::identity;
}

HomeoHandle identity_handle(int m) {
    auto n = std::make_shared<HomeoHandle::Node>();
    n->kind = HomeoHandle::Kind::identity;
    n->m = m;
    return HomeoHandle(std::move(n));
}

HomeoHandle swindle_handle(SwindleKind kind, const Rat& delta, int m) {
    auto n = std::make_shared<HomeoHandle::Node>();
    n->kind = HomeoHandle::Kind::swindle;
    n->m = m;
    n->sw = std::make_shared<SwindleHomeo>(kind, delta, m);
    return HomeoHandle(std::move(n));
}

HomeoHandle affine_handle(std::vector<Rat> scale, std::vector<Rat> offset) {
    if (scale.size() != offset.size() || scale.empty())
        throw DimensionMismatch("affine_handle: scale/offset size mismatch");
    for (const auto& s : scale)
        if (!(s > 0))
            throw DomainError("affine_handle: scales must be positive");
    auto n = std::make_shared<HomeoHandle::Node>();
    n->kind = HomeoHandle::Kind::affine;
    n->m = static_cast<int>(scale.size());
    n->scale = std::move(scale);
    n->offset = std::move(offset);
    return HomeoHandle(std::move(n));
}

HomeoHandle inverse(const HomeoHandle& h) {
    const auto& n = h.node();
    if (!n)
        throw DomainError("inverse: empty handle");
    if (n->kind == HomeoHandle::Kind::identity)
        return h;
    if (n->kind == HomeoHandle::Kind::inverse)
        return HomeoHandle(n->a);
    auto out = std::make_shared<HomeoHandle::Node>();
    out->kind = HomeoHandle::Kind::inverse;
    out->m = n->m;
    out->a = n;
    return HomeoHandle(std::move(out));
}

HomeoHandle compose(const HomeoHandle& outer, const HomeoHandle& inner) {
    const auto& a = outer.node();
    const auto& b = inner.node();
    if (!a || !b)
        throw DomainError("compose: empty handle");
    if (a->m != b->m)
        throw DimensionMismatch("compose: dimension mismatch");
    if (a->kind == HomeoHandle::Kind::identity)
        return inner;
    if (b->kind == HomeoHandle::Kind::identity)
        return outer;
    if (a->kind == HomeoHandle::Kind::inverse && a->a == b)
        return identity_handle(a->m);
    if (b->kind == HomeoHandle::Kind::inverse && b->a == a)
        return identity_handle(a->m);
    auto out = std::make_shared<HomeoHandle::Node>();
    out->kind = HomeoHandle::Kind::compose;
    out->m = a->m;
    out->a = a;
    out->b = b;
    return HomeoHandle(std::move(out));
}

namespace {

Point eval_node(const HomeoHandle::NodePtr& n, Point p, bool inv) {
    switch (n->kind) {
    case HomeoHandle::Kind::identity:
        return p;
    case HomeoHandle::Kind::swindle:
        return inv ? n->sw->apply_inverse(p) : n->sw->apply(p);
    case HomeoHandle::Kind::affine: {
        if (p.size() != n->scale.size())
            throw DimensionMismatch("affine eval: wrong point dimension");
        for (size_t i = 0; i < p.size(); ++i)
            p[i] = inv ? (p[i] - n->offset[i]) / n->scale[i] : n->scale[i] * p[i] + n->offset[i];
        return p;
    }
    case HomeoHandle::Kind::inverse:
        return eval_node(n->a, std::move(p), !inv);
    case HomeoHandle::Kind::compose:
        if (inv)
            return eval_node(n->b, eval_node(n->a, std::move(p), true), true);
        return eval_node(n->a, eval_node(n->b, std::move(p), false), false);
    }
    throw DomainError("eval_node: corrupt handle");
}

} // namespace

Point homeo_eval(const HomeoHandle& h, const Point& p) {
    if (!h.node())
        throw DomainError("homeo_eval: empty handle");
    if (static_cast<int>(p.size()) != h.dim())
        throw DimensionMismatch("homeo_eval: wrong point dimension");
    return eval_node(h.node(), p, false);
}

Point homeo_eval_inverse(const HomeoHandle& h, const Point& p) {
    if (!h.node())
        throw DomainError("homeo_eval_inverse: empty handle");
    if (static_cast<int>(p.size()) != h.dim())
        throw DimensionMismatch("homeo_eval_inverse: wrong point dimension");
    return eval_node(h.node(), p, true);
}

bool BoxRm::contains(const Point& p, bool strict) const {
    if (p.size() != lo.size())
        throw DimensionMismatch("BoxRm::contains: wrong point dimension");
    for (size_t i = 0; i < p.size(); ++i) {
        if (strict ? !(p[i] > lo[i] && p[i] < hi[i]) : !(p[i] >= lo[i] && p[i] <= hi[i]))
            return false;
    }
    return true;
}

namespace {

BoxRm image_box_node(const HomeoHandle::NodePtr& n, BoxRm box, bool inv) {
    switch (n->kind) {
    case HomeoHandle::Kind::identity:
        return box;
    case HomeoHandle::Kind::affine: {
        for (size_t i = 0; i < box.lo.size(); ++i) {
            if (inv) {
                box.lo[i] = (box.lo[i] - n->offset[i]) / n->scale[i];
                box.hi[i] = (box.hi[i] - n->offset[i]) / n->scale[i];
            } else {
                box.lo[i] = n->scale[i] * box.lo[i] + n->offset[i];
                box.hi[i] = n->scale[i] * box.hi[i] + n->offset[i];
            }
        }
        return box;
    }
    case HomeoHandle::Kind::swindle: {
        // conservative: the damped action keeps x1 between the identity and
        // the full slab map, and never touches cross coordinates
        auto stretch = [&](const Rat& x, bool lower) {
            if (x <= 0 || x >= 1)
                return x;
            Rat s = chart_fwd(x);
            Rat fs = inv ? slab_map_inverse_eval(n->sw->kind, s) : slab_map_eval(n->sw->kind, s);
            return chart_inv(lower ? std::min(s, fs) : std::max(s, fs));
        };
        box.lo[0] = stretch(box.lo[0], true);
        box.hi[0] = stretch(box.hi[0], false);
        return box;
    }
    case HomeoHandle::Kind::inverse:
        return image_box_node(n->a, std::move(box), !inv);
    case HomeoHandle::Kind::compose:
        if (inv)
            return image_box_node(n->b, image_box_node(n->a, std::move(box), true), true);
        return image_box_node(n->a, image_box_node(n->b, std::move(box), false), false);
    }
    throw DomainError("image_box_node: corrupt handle");
}

} // namespace

BoxRm homeo_image_box(const HomeoHandle& h, const BoxRm& box) {
    if (!h.node())
        throw DomainError("homeo_image_box: empty handle");
    if (box.dim() != h.dim())
        throw DimensionMismatch("homeo_image_box: wrong box dimension");
    return image_box_node(h.node(), box, false);
}

BoxMappingReport verify_box_mapping(SwindleKind kind, long long family_max, const Rat& delta,
                                    int m, int core_samples_per_box) {
    if (family_max < 0 || source_level(kind, family_max) > 24)
        throw DepthLimitError("verify_box_mapping: family bound too large to enumerate");
    BoxMappingReport rep{kind, family_max, delta, m, {}, 0};
    SwindleHomeo homeo(kind, delta, m);
    auto fail = [&](long long L, const Int& k, const std::string& what) {
        std::ostringstream os;
        os << "box mapping failed for " << kind_name(kind) << " at level " << L << ", k="
           << k.get_str() << ": " << what;
        throw VerificationFailure(os.str());
    };
    for (long long fam = 0; fam <= family_max; ++fam) {
        long long L = source_level(kind, fam);
        Int K = pow2(static_cast<unsigned long>(L));
        for (Int k = 0; k < K; ++k) {
            IntervalBox src = interval_of(L, k);
            Int kappa = target_index(kind, L, k);
            IntervalBox tgt = interval_of(L + 1, kappa);
            bool endpoints_ok = slab_map_eval(kind, src.lo) == tgt.lo &&
                                slab_map_eval(kind, src.hi) == tgt.hi &&
                                slab_map_inverse_eval(kind, tgt.lo) == src.lo &&
                                slab_map_inverse_eval(kind, tgt.hi) == src.hi;
            if (!endpoints_ok)
                fail(L, k, "endpoint image mismatch");
            Ball sball = ball_of(L, k);
            Ball tball = ball_of(L + 1, kappa);
            bool core_ok = true;
            for (int i = 1; i <= core_samples_per_box && core_ok; ++i) {
                Rat x = sball.xlo + (sball.xhi - sball.xlo) * rat(i, core_samples_per_box + 1);
                for (int cross = 0; cross < 2 && core_ok; ++cross) {
                    Point p(static_cast<size_t>(m), cross == 0 ? rat(1, 2) : delta);
                    p[0] = x;
                    Point q = homeo.apply(p);
                    if (!(q[0] > tball.xlo && q[0] < tball.xhi))
                        core_ok = false;
                    for (size_t c = 1; c < q.size(); ++c)
                        if (q[c] != p[c])
                            core_ok = false;
                    if (homeo.apply_inverse(q) != p)
                        core_ok = false;
                    if (m == 1)
                        break;
                }
            }
            if (!core_ok)
                fail(L, k, "core sample escaped the target core ball");
            rep.checks.push_back(BoxCheck{L, k, endpoints_ok, core_ok});
            ++rep.boxes_checked;
        }
    }
    return rep;
}

std::vector<SlopeRow> slope_table(SwindleKind kind, long long levels) {
    if (levels < 0 || source_level(kind, levels) > 20)
        throw DepthLimitError("slope_table: level bound too large to enumerate");
    std::vector<SlopeRow> rows;
    for (long long fam = 0; fam <= levels; ++fam) {
        long long L = source_level(kind, fam);
        Int K = pow2(static_cast<unsigned long>(L));
        std::optional<Rat> mn, mx;
        for (Int k = 0; k < K; ++k) {
            Ball s = ball_of(L, k);
            Ball t = ball_of(L + 1, target_index(kind, L, k));
            Rat quot = (t.xhi - t.xlo) / (s.xhi - s.xlo);
            if (!mn || quot < *mn)
                mn = quot;
            if (!mx || quot > *mx)
                mx = quot;
        }
        rows.push_back(SlopeRow{fam, L, *mn, *mx});
    }
    return rows;
}

} // namespace swc
