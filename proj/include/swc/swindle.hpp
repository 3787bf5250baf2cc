#pragma once

#include <memory>
#include <string>
#include <vector>

#include "swc/geometry.hpp"
#include "swc/plmap.hpp"
#include "swc/rat.hpp"

namespace swc {

enum class SwindleKind { phi_minus, phi_plus, psi_minus, psi_plus };

/* phi kinds act on even source levels (windows [2n, 2n+2]); psi kinds on odd
 * source levels (windows [2n+1, 2n+3]). "plus" kinds send index k to 2^L + k,
 * "minus" kinds keep k, always one level down the telescope. */
bool kind_is_phi(SwindleKind k);
bool kind_is_plus(SwindleKind k);
long long source_level(SwindleKind k, long long family_n);
Int target_index(SwindleKind k, long long src_level, const Int& src_k);

std::string kind_name(SwindleKind k);            // "phi-minus", ...
SwindleKind kind_from_name(std::string_view s);  // DomainError on unknown

/* The global monotone slab map F of a kind: identity below the first window,
 * fixes every window endpoint, and maps each source interval at level L
 * linearly onto its target interval at level L+1, linear in between. Piece
 * location is O(1) dyadic arithmetic; no breakpoint list is materialized. */
Rat slab_map_eval(SwindleKind kind, const Rat& s);
Rat slab_map_inverse_eval(SwindleKind kind, const Rat& t);

/* Damped slab action (1-lambda)*s + lambda*F(s) and its exact inverse. */
Rat slab_blend_eval(SwindleKind kind, const Rat& s, const Rat& lambda);
Rat slab_blend_inverse_eval(SwindleKind kind, const Rat& t, const Rat& lambda);

/* Finite materialization of one window of F (2*2^L + 2 breakpoints), for
 * inspection and small-level tests. DepthLimitError when 2^L is too large. */
PLMap1D window_map(SwindleKind kind, long long family_n);

/* One of the four global homeomorphisms of R^m: identity outside [0,1]^m,
 * cross coordinates preserved, first coordinate moved by the chart-conjugated
 * slab map damped by the tent profile of the cross-section. */
struct SwindleHomeo {
    SwindleKind kind;
    TentProfile damping;
    int m;

    SwindleHomeo(SwindleKind k, Rat delta, int dim);

    Rat cross_damping(const Point& p) const; // min of tent over cross coordinates
    Point apply(const Point& p) const;
    Point apply_inverse(const Point& p) const;
};

/* Exactly evaluable and exactly invertible homeomorphism expression. */
class HomeoHandle {
  public:
    enum class Kind { identity, swindle, affine, inverse, compose };

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        Kind kind;
        int m;
        // swindle
        std::shared_ptr<const SwindleHomeo> sw;
        // affine: x_i -> scale_i * x_i + offset_i, scale_i > 0
        std::vector<Rat> scale, offset;
        // inverse / compose children
        NodePtr a, b; // compose: a = outer, b = inner
    };

    HomeoHandle() = default;
    explicit HomeoHandle(NodePtr n) : node_(std::move(n)) {}

    const NodePtr& node() const { return node_; }
    int dim() const;
    bool is_identity() const;

  private:
    NodePtr node_;
};

HomeoHandle identity_handle(int m);
HomeoHandle swindle_handle(SwindleKind kind, const Rat& delta, int m);
HomeoHandle affine_handle(std::vector<Rat> scale, std::vector<Rat> offset);
HomeoHandle inverse(const HomeoHandle& h);
/* compose(f, g) evaluates as f(g(x)); cancels f with its own inverse and
 * elides identities, so certificate products collapse structurally. */
HomeoHandle compose(const HomeoHandle& outer, const HomeoHandle& inner);

Point homeo_eval(const HomeoHandle& h, const Point& p);
Point homeo_eval_inverse(const HomeoHandle& h, const Point& p);

struct BoxRm {
    std::vector<Rat> lo, hi; // lo[i] <= hi[i]

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const Point& p, bool strict = false) const;
};

/* Conservative bounding box of the image of `box` (exact for affine maps). */
BoxRm homeo_image_box(const HomeoHandle& h, const BoxRm& box);

struct BoxCheck {
    long long level; // source level
    Int k;
    bool endpoints_ok;
    bool core_ok;
};

struct BoxMappingReport {
    SwindleKind kind;
    long long family_max;
    Rat delta;
    int m;
    std::vector<BoxCheck> checks;
    size_t boxes_checked = 0;
};

/* Checks, for families 0..family_max: both endpoints of every source interval
 * map exactly onto the target interval's endpoints under F, and sampled core
 * points of each source ball land in the target core ball (and return under
 * the inverse). Throws VerificationFailure on the first counterexample. */
BoxMappingReport verify_box_mapping(SwindleKind kind, long long family_max, const Rat& delta,
                                    int m, int core_samples_per_box = 3);

/* Per-family min/max x-space difference quotients across source balls,
 * diagnostic only (the construction is not C^1 and does not claim to be). */
struct SlopeRow {
    long long family_n;
    long long src_level;
    Rat min_quotient, max_quotient;
};
std::vector<SlopeRow> slope_table(SwindleKind kind, long long levels);

} // namespace swc
