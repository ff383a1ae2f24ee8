#include "retrokit/companions.hpp"

namespace rk {

TCell twhisker_after(const Instance& A, const VArrow& u, const TCell& t) {
    return tvcompose(A, t, tcell(A.cell_vid(u), VExpr::L(u), VExpr::L(u)));
}
TCell twhisker_before(const Instance& A, const TCell& t, const VArrow& u) {
    return tvcompose(A, tcell(A.cell_vid(u), VExpr::L(u), VExpr::L(u)), t);
}

static TCell tc(const Instance& A, const Cell& c) { return tcell(A, c); }

TCell treframe(const Instance& A, const TCell& t, const VExpr& left, const VExpr& right) {
    Cell cl = coherence(A, left, t.left).fwd;
    Cell cr = coherence(A, t.right, right).fwd;
    return tcell(A.hcompose(A.hcompose(cl, t.cell), cr), left, right);
}

TCell slide_top(const Instance& A, const TCell& a, const HArrow& f, const HArrow& g) {
    if (a.cell.top != A.hcomp(g, f))
        throw BoundaryError("slide_top: top arrow is not the given composite");
    // [id_f | psi_g] on top of a
    TCell row = tc(A, A.hcompose(A.cell_hid(f), A.psi(g)));
    return tvcompose(A, row, a);
}

TCell slide_top_inv(const Instance& A, const TCell& b, const HArrow& f, const HArrow& g,
                    const VExpr& w) {
    if (b.cell.top != f) throw BoundaryError("slide_top_inv: top arrow mismatch");
    // right boundary of b must be (a bracketing of) w∘g_*
    TCell b2 = treframe(A, b, b.left, VExpr::C(w, VExpr::L(A.companion(g))));
    // paste [chi_g over 1_w] on the right
    TCell side = tvcompose(A, tc(A, A.chi(g)), tcell(A.cell_vid(eval_vexpr(A, w)), w, w));
    return thcompose(A, b2, side);
}

TCell slide_bottom(const Instance& A, const TCell& a, const HArrow& g, const HArrow& h) {
    if (a.cell.bottom != A.hcomp(h, g))
        throw BoundaryError("slide_bottom: bottom arrow is not the given composite");
    TCell row = tc(A, A.hcompose(A.chi(g), A.cell_hid(h)));
    return tvcompose(A, a, row);
}

TCell slide_bottom_inv(const Instance& A, const TCell& b, const HArrow& g, const HArrow& h,
                       const VExpr& v) {
    if (b.cell.bottom != h) throw BoundaryError("slide_bottom_inv: bottom arrow mismatch");
    // left boundary of b must be (a bracketing of) g_*∘v
    TCell b2 = treframe(A, b, VExpr::C(VExpr::L(A.companion(g)), v), b.right);
    TCell side = tvcompose(A, tcell(A.cell_vid(eval_vexpr(A, v)), v, v), tc(A, A.psi(g)));
    return thcompose(A, side, b2);
}

TCell flip_top(const Instance& A, const TCell& a, const HArrow& f, const HArrow& g) {
    if (a.cell.top != A.hcomp(g, f))
        throw BoundaryError("flip_top: top arrow is not the given composite");
    TCell row = tc(A, A.hcompose(A.conj_beta(f), A.cell_hid(g)));
    return tvcompose(A, row, a);
}

TCell flip_top_inv(const Instance& A, const TCell& b, const HArrow& f, const HArrow& g,
                   const VExpr& v) {
    if (b.cell.top != g) throw BoundaryError("flip_top_inv: top arrow mismatch");
    // left boundary of b must be (a bracketing of) v∘f^*
    TCell b2 = treframe(A, b, VExpr::C(v, VExpr::L(A.conjoint(f))), b.right);
    TCell side = tvcompose(A, tc(A, A.conj_alpha(f)),
                           tcell(A.cell_vid(eval_vexpr(A, v)), v, v));
    return thcompose(A, side, b2);
}

TCell flip_bottom(const Instance& A, const TCell& a, const HArrow& g, const HArrow& h) {
    if (a.cell.bottom != A.hcomp(h, g))
        throw BoundaryError("flip_bottom: bottom arrow is not the given composite");
    TCell row = tc(A, A.hcompose(A.cell_hid(g), A.conj_alpha(h)));
    return tvcompose(A, a, row);
}

TCell flip_bottom_inv(const Instance& A, const TCell& b, const HArrow& g, const HArrow& h,
                      const VExpr& w) {
    if (b.cell.bottom != g) throw BoundaryError("flip_bottom_inv: bottom arrow mismatch");
    // right boundary of b must be (a bracketing of) h^*∘w
    TCell b2 = treframe(A, b, b.left, VExpr::C(VExpr::L(A.conjoint(h)), w));
    TCell side = tvcompose(A, tcell(A.cell_vid(eval_vexpr(A, w)), w, w),
                           tc(A, A.conj_beta(h)));
    return thcompose(A, b2, side);
}

TCell hat(const Instance& A, const TCell& a) {
    HArrow f = a.cell.top, g = a.cell.bottom;
    TCell s1 = slide_top(A, a, A.hid(f.src), f);
    return slide_bottom(A, s1, g, A.hid(g.dst));
}

TCell unhat(const Instance& A, const TCell& gc, const HArrow& f, const HArrow& gb,
            const VExpr& v, const VExpr& w) {
    // gc : globular g_*∘v => w∘f_*; rebuild a cell over (f, v, w, gb)
    TCell s1 = slide_bottom_inv(A, gc, gb, A.hid(gb.dst), v);
    return slide_top_inv(A, s1, A.hid(f.src), f, w);
}

TCell iso_comp_to(const Instance& A, const HArrow& h, const HArrow& f) {
    TCell r1 = tc(A, A.psi(f));
    TCell r2 = tc(A, A.hcompose(A.cell_hid(f), A.psi(h)));
    TCell r3 = tc(A, A.chi(A.hcomp(h, f)));
    return tvcompose(A, tvcompose(A, r1, r2), r3);
}

TCell iso_comp_from(const Instance& A, const HArrow& h, const HArrow& f) {
    TCell r1 = tc(A, A.psi(A.hcomp(h, f)));
    TCell r2 = tc(A, A.hcompose(A.chi(f), A.cell_hid(h)));
    TCell r3 = tc(A, A.hcompose(A.cell_vid(A.companion(h)), A.chi(h)));
    return tvcompose(A, tvcompose(A, r1, r2), r3);
}

TCell iso_conj_to(const Instance& A, const HArrow& h, const HArrow& f) {
    TCell r1 = tc(A, A.conj_beta(A.hcomp(h, f)));
    TCell r2 = tc(A, A.hcompose(A.cell_hid(f), A.conj_alpha(h)));
    TCell r3 = tc(A, A.conj_alpha(f));
    return tvcompose(A, tvcompose(A, r1, r2), r3);
}

TCell iso_conj_from(const Instance& A, const HArrow& h, const HArrow& f) {
    TCell r1 = tc(A, A.conj_beta(h));
    TCell r2 = tc(A, A.hcompose(A.conj_beta(f), A.cell_hid(h)));
    TCell r3 = tc(A, A.conj_alpha(A.hcomp(h, f)));
    return tvcompose(A, tvcompose(A, r1, r2), r3);
}

}  // namespace rk
