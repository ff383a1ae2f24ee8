#pragma once
// Generic constructions available once an instance has companions and/or
// conjoints: sliding horizontal arrows in and out of the vertical columns,
// the hat transform turning a cell into a globular one, and the canonical
// isomorphisms relating (hf)_* with h_*∘f_*.
//
// All operations take and return TCells so that coherence transports are
// threaded automatically; use tnormalize to land on clean boundaries.

#include "core.hpp"

namespace rk {

// whiskering in Vert(A): u∘(-) and (-)∘u
TCell twhisker_after(const Instance& A, const VArrow& u, const TCell& t);
TCell twhisker_before(const Instance& A, const TCell& t, const VArrow& u);

// transport a TCell onto new (coherent) boundary expressions
TCell treframe(const Instance& A, const TCell& t, const VExpr& left, const VExpr& right);

// α over (g∘f, v, w, h)  <->  over (f, v, w∘g_*, h)
// the inverse takes the expression of the remaining column w explicitly
TCell slide_top(const Instance& A, const TCell& a, const HArrow& f, const HArrow& g);
TCell slide_top_inv(const Instance& A, const TCell& b, const HArrow& f, const HArrow& g,
                    const VExpr& w);

// α over (f, v, w, h∘g)  <->  over (f, g_*∘v, w, h)
TCell slide_bottom(const Instance& A, const TCell& a, const HArrow& g, const HArrow& h);
TCell slide_bottom_inv(const Instance& A, const TCell& b, const HArrow& g, const HArrow& h,
                       const VExpr& v);

// conjoint versions:
// α over (g∘f, v, w, h)  <->  over (g, v∘f^*, w, h)
TCell flip_top(const Instance& A, const TCell& a, const HArrow& f, const HArrow& g);
TCell flip_top_inv(const Instance& A, const TCell& b, const HArrow& f, const HArrow& g,
                   const VExpr& v);
// α over (f, v, w, h∘g)  <->  over (f, v, h^*∘w, g)
TCell flip_bottom(const Instance& A, const TCell& a, const HArrow& g, const HArrow& h);
TCell flip_bottom_inv(const Instance& A, const TCell& b, const HArrow& g, const HArrow& h,
                      const VExpr& w);

// hat: cell over (f, v, w, g)  <->  globular cell  g_*∘v => w∘f_*
TCell hat(const Instance& A, const TCell& a);
TCell unhat(const Instance& A, const TCell& g, const HArrow& f, const HArrow& gb,
            const VExpr& v, const VExpr& w);

// canonical isos between the companion of a composite and the composite of
// companions (globular, mutually inverse after normalization)
TCell iso_comp_to(const Instance& A, const HArrow& h, const HArrow& f);    // (hf)_* => h_*∘f_*
TCell iso_comp_from(const Instance& A, const HArrow& h, const HArrow& f);  // h_*∘f_* => (hf)_*
// conjoint duals
TCell iso_conj_to(const Instance& A, const HArrow& h, const HArrow& f);    // (hf)^* => f^*∘h^*
TCell iso_conj_from(const Instance& A, const HArrow& h, const HArrow& f);  // f^*∘h^* => (hf)^*

}  // namespace rk
