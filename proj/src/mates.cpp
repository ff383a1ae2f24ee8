#include "retrokit/mates.hpp"

namespace rk {

namespace {

TCell tid(const Instance& A, const VArrow& u) {
    return tcell(A.cell_vid(u), VExpr::L(u), VExpr::L(u));
}
TCell tidx(const Instance& A, const VArrow& u, const VExpr& ux) {
    return tcell(A.cell_vid(u), ux, ux);
}
VExpr pairx(const VArrow& a, const VArrow& b) {
    return VExpr::C(VExpr::L(a), VExpr::L(b));
}

}  // namespace

HAdjunction make_hadjunction(const Instance& A, const HArrow& left, const HArrow& right,
                             const Cell& counit, const Cell& unit) {
    if (left.src != right.dst || left.dst != right.src)
        throw BoundaryError("make_hadjunction: arrows are not opposed");
    const Value &X = right.src, &Y = right.dst;
    if (counit.top != A.hcomp(left, right) || counit.bottom != A.hid(X) ||
        counit.left != A.vid(X) || counit.right != A.vid(X))
        throw BoundaryError("make_hadjunction: bad counit boundary");
    if (unit.top != A.hid(Y) || unit.bottom != A.hcomp(right, left) ||
        unit.left != A.vid(Y) || unit.right != A.vid(Y))
        throw BoundaryError("make_hadjunction: bad unit boundary");
    // triangle for the right adjoint: (right ; unit) over (counit ; right)
    TCell r1 = tvcompose(A, tcell(A, A.hcompose(A.cell_hid(right), unit)),
                         tcell(A, A.hcompose(counit, A.cell_hid(right))));
    if (!tequal(A, r1, tcell(A, A.cell_hid(right))))
        throw BoundaryError("make_hadjunction: right triangle identity fails");
    // triangle for the left adjoint: (unit ; left) over (left ; counit)
    TCell l1 = tvcompose(A, tcell(A, A.hcompose(unit, A.cell_hid(left))),
                         tcell(A, A.hcompose(A.cell_hid(left), counit)));
    if (!tequal(A, l1, tcell(A, A.cell_hid(left))))
        throw BoundaryError("make_hadjunction: left triangle identity fails");
    return HAdjunction{left, right, counit, unit};
}

VAdjunction make_vadjunction(const Instance& A, const VArrow& left, const VArrow& right,
                             const TCell& counit, const TCell& unit) {
    if (left.src != right.dst || left.dst != right.src)
        throw BoundaryError("make_vadjunction: arrows are not opposed");
    Cell cu = tnormalize(A, counit), un = tnormalize(A, unit);
    VArrow lr = eval_vexpr(A, normal_form_expr(A, pairx(left, right)));
    VArrow rl = eval_vexpr(A, normal_form_expr(A, pairx(right, left)));
    if (cu.left != lr || cu.right != A.vid(right.src))
        throw BoundaryError("make_vadjunction: bad counit boundary");
    if (un.left != A.vid(left.src) || un.right != rl)
        throw BoundaryError("make_vadjunction: bad unit boundary");
    // right ==> (right∘left)∘right ==> right
    TCell tr = thcompose(A, twhisker_before(A, unit, right),
                         twhisker_after(A, right, counit));
    if (!tequal(A, tr, tid(A, right)))
        throw BoundaryError("make_vadjunction: right triangle identity fails");
    // left ==> left∘(right∘left) ==> left
    TCell tl = thcompose(A, twhisker_after(A, left, unit),
                         twhisker_before(A, counit, left));
    if (!tequal(A, tl, tid(A, left)))
        throw BoundaryError("make_vadjunction: left triangle identity fails");
    return VAdjunction{left, right, counit, unit};
}

HAdjunction trivial_hadjunction(const Instance& A, const Value& obj) {
    Cell c = A.cell_hid(A.hid(obj));
    return make_hadjunction(A, A.hid(obj), A.hid(obj), c, c);
}

VAdjunction trivial_vadjunction(const Instance& A, const Value& obj) {
    VExpr two = VExpr::C(VExpr::L(A.vid(obj)), VExpr::L(A.vid(obj)));
    return make_vadjunction(A, A.vid(obj), A.vid(obj), tcoherence(A, two, VExpr::I(obj)),
                            tcoherence(A, VExpr::I(obj), two));
}

VAdjunction canonical_vadjunction(const Instance& A, const HArrow& f) {
    TCell unit = tvcompose(A, tcell(A, A.psi(f)), tcell(A, A.conj_alpha(f)));
    TCell counit = tvcompose(A, tcell(A, A.conj_beta(f)), tcell(A, A.chi(f)));
    return make_vadjunction(A, A.companion(f), A.conjoint(f), counit, unit);
}

AdjForms adjunction_forms(const Instance& A, const HAdjunction& adj) {
    const HArrow &h = adj.left, &f = adj.right;
    HArrow hidX = A.hid(f.src), hidY = A.hid(f.dst);
    AdjForms F;
    F.a1 = tcell(A, adj.counit);
    F.a2 = slide_top(A, F.a1, f, h);
    F.a3 = slide_top(A, F.a2, hidX, f);
    F.b1 = tcell(A, adj.unit);
    F.b2 = slide_bottom(A, F.b1, h, f);
    F.b3 = slide_bottom(A, F.b2, f, hidY);
    if (A.has_conjoints()) {
        F.has_conj = true;
        F.a4 = flip_top(A, F.a1, f, h);
        F.a5 = flip_top(A, F.a2, f, hidY);
        F.a6 = flip_top(A, F.a4, h, hidX);
        F.b4 = flip_bottom(A, F.b1, h, f);
        F.b5 = flip_bottom(A, F.b2, hidX, f);
        F.b6 = flip_bottom(A, F.b4, hidY, h);
    }
    return F;
}

namespace {

// transport without the (redundant, but slow) triangle re-validation
VAdjunction transport_raw(const Instance& A, const HAdjunction& adj) {
    const HArrow &h = adj.left, &f = adj.right;
    TCell a3 = slide_top(A, slide_top(A, tcell(A, adj.counit), f, h), A.hid(f.src), f);
    TCell b3 = slide_bottom(A, slide_bottom(A, tcell(A, adj.unit), h, f), f, A.hid(f.dst));
    return VAdjunction{A.companion(f), A.companion(h), b3, a3};
}

}  // namespace

VAdjunction adjunction_transport(const Instance& A, const HAdjunction& adj) {
    VAdjunction t = transport_raw(A, adj);
    return make_vadjunction(A, t.left, t.right, t.counit, t.unit);
}

VAdjunction adjunction_transport_conj(const Instance& A, const HAdjunction& adj) {
    AdjForms F = adjunction_forms(A, adj);
    if (!F.has_conj) throw NotFoundError("adjunction_transport_conj: no conjoints");
    return make_vadjunction(A, A.conjoint(adj.right), A.conjoint(adj.left), F.a6, F.b6);
}

std::pair<TCell, TCell> adjunction_iso(const Instance& A, const HAdjunction& adj) {
    AdjForms F = adjunction_forms(A, adj);
    if (!F.has_conj) throw NotFoundError("adjunction_iso: no conjoints");
    return {F.a5, F.b5};
}

VAdjunction vadj_replace_right(const Instance& A, const VAdjunction& adj,
                               const TCell& iso_fwd, const TCell& iso_bwd,
                               const VArrow& r2) {
    const VArrow& L = adj.left;
    TCell unit = thcompose(A, adj.unit, tvcompose(A, tid(A, L), iso_fwd));
    TCell counit = thcompose(A, tvcompose(A, iso_bwd, tid(A, L)), adj.counit);
    return make_vadjunction(A, L, r2, counit, unit);
}

namespace {

// The usual bicategory mate in Vert(A).  phi: b∘u => u2∘a; with l ⊣ u and
// l2 ⊣ u2 its mate is psi: l2∘b => a∘l, pasted as
//   l2∘b => (l2∘b)∘(u∘l) => l2∘(b∘u)∘l => l2∘(u2∘a)∘l => (l2∘u2)∘(a∘l) => a∘l
TCell mate_cols(const Instance& A, const TCell& phi, const VAdjunction& lu,
                const VAdjunction& l2u2, const VArrow& b, const VArrow& a) {
    const VArrow &l = lu.left, &l2 = l2u2.left;
    TCell s1 = tvcompose(A, lu.unit, tidx(A, A.vcomp(l2, b), pairx(l2, b)));
    TCell s2 = tvcompose(A, tvcompose(A, tid(A, l), phi), tid(A, l2));
    TCell s3 = tvcompose(A, tidx(A, A.vcomp(a, l), pairx(a, l)), l2u2.counit);
    return thcompose(A, thcompose(A, s1, s2), s3);
}

// inverse mate: psi: l2∘b => a∘l back to phi: b∘u => u2∘a
TCell mate_cols_inv(const Instance& A, const TCell& psi, const VAdjunction& lu,
                    const VAdjunction& l2u2, const VArrow& b, const VArrow& a) {
    const VArrow &u = lu.right, &u2 = l2u2.right;
    TCell s1 = tvcompose(A, tidx(A, A.vcomp(b, u), pairx(b, u)), l2u2.unit);
    TCell s2 = tvcompose(A, tvcompose(A, tid(A, u), psi), tid(A, u2));
    TCell s3 = tvcompose(A, lu.counit, tidx(A, A.vcomp(u2, a), pairx(u2, a)));
    return thcompose(A, thcompose(A, s1, s2), s3);
}

// mate across adjunctions of the outer factors: phi: b∘u => u2∘a with
// b ⊣ br and a ⊣ ar gives psi: u∘ar => br∘u2
TCell mate_rows(const Instance& A, const TCell& phi, const VAdjunction& b_adj,
                const VAdjunction& a_adj, const VArrow& u, const VArrow& u2) {
    const VArrow &ar = a_adj.right, &br = b_adj.right;
    TCell s1 = tvcompose(A, tidx(A, A.vcomp(u, ar), pairx(u, ar)), b_adj.unit);
    TCell s2 = tvcompose(A, tvcompose(A, tid(A, ar), phi), tid(A, br));
    TCell s3 = tvcompose(A, a_adj.counit, tidx(A, A.vcomp(br, u2), pairx(br, u2)));
    return thcompose(A, thcompose(A, s1, s2), s3);
}

// inverse: psi: u∘ar => br∘u2 back to phi: b∘u => u2∘a
TCell mate_rows_inv(const Instance& A, const TCell& psi, const VAdjunction& b_adj,
                    const VAdjunction& a_adj, const VArrow& u, const VArrow& u2) {
    const VArrow &a = a_adj.left, &b = b_adj.left;
    TCell s1 = tvcompose(A, a_adj.unit, tidx(A, A.vcomp(b, u), pairx(b, u)));
    TCell s2 = tvcompose(A, tvcompose(A, tid(A, a), psi), tid(A, b));
    TCell s3 = tvcompose(A, tidx(A, A.vcomp(u2, a), pairx(u2, a)), b_adj.counit);
    return thcompose(A, thcompose(A, s1, s2), s3);
}

}  // namespace

Retrocell mate_vertical(const Instance& A, const Cell& alpha, const VAdjunction& xv,
                        const VAdjunction& yw) {
    if (xv.right != alpha.left || yw.right != alpha.right)
        throw BoundaryError("mate_vertical: adjunctions do not match the columns");
    TCell phi = hat(A, tcell(A, alpha));  // g_*∘v => w∘f_*
    TCell psi = mate_cols(A, phi, xv, yw, A.companion(alpha.bottom),
                          A.companion(alpha.top));
    return make_retrocell(A, alpha.bottom, xv.left, yw.left, alpha.top, psi);
}

Cell mate_vertical_inv(const Instance& A, const Retrocell& beta, const VAdjunction& xv,
                       const VAdjunction& yw) {
    if (beta.v != xv.left || beta.w != yw.left)
        throw BoundaryError("mate_vertical_inv: adjunctions do not match the columns");
    TCell phi = mate_cols_inv(A, beta.under, xv, yw, A.companion(beta.f),
                              A.companion(beta.g));
    TCell a = unhat(A, phi, beta.g, beta.f, VExpr::L(xv.right), VExpr::L(yw.right));
    return tnormalize(A, a);
}

Retrocell mate_horizontal(const Instance& A, const Cell& alpha, const HAdjunction& hf,
                          const HAdjunction& kg) {
    if (hf.right != alpha.top || kg.right != alpha.bottom)
        throw BoundaryError("mate_horizontal: adjunctions do not match the rows");
    TCell phi = hat(A, tcell(A, alpha));
    TCell psi = mate_rows(A, phi, transport_raw(A, kg), transport_raw(A, hf), alpha.left,
                          alpha.right);  // v∘h_* => k_*∘w
    return make_retrocell(A, hf.left, alpha.right, alpha.left, kg.left, psi);
}

Cell mate_horizontal_inv(const Instance& A, const Retrocell& gamma, const HAdjunction& hf,
                         const HAdjunction& kg) {
    if (gamma.f != hf.left || gamma.g != kg.left)
        throw BoundaryError("mate_horizontal_inv: adjunctions do not match the rows");
    TCell phi = mate_rows_inv(A, gamma.under, transport_raw(A, kg), transport_raw(A, hf),
                              gamma.w, gamma.v);
    TCell a = unhat(A, phi, hf.right, kg.right, VExpr::L(gamma.w), VExpr::L(gamma.v));
    return tnormalize(A, a);
}

HAdjunction hadj_to_ret(const RetInstance& R, const HAdjunction& adj) {
    const Instance& A = R.base();
    const HArrow &h = adj.left, &f = adj.right;
    const Value &X = f.src, &Y = f.dst;
    // the carrier of the new counit is the hat of the old unit, and dually
    Cell ce = R.from_retro(make_retrocell(A, A.hcomp(f, h), A.vid(Y), A.vid(Y), A.hid(Y),
                                          hat(A, tcell(A, adj.unit))));
    Cell un = R.from_retro(make_retrocell(A, A.hid(X), A.vid(X), A.vid(X), A.hcomp(h, f),
                                          hat(A, tcell(A, adj.counit))));
    return HAdjunction{f, h, ce, un};
}

VAdjunction vadj_to_ret(const RetInstance& R, const VAdjunction& adj) {
    const Instance& A = R.base();
    const VArrow &L = adj.left, &Rt = adj.right;
    Cell cu = tnormalize(A, adj.counit);  // L∘Rt => id
    Cell un = tnormalize(A, adj.unit);    // id => Rt∘L
    // exprs must evaluate to the normalized boundaries the carriers landed on
    VExpr cux = normal_form_expr(A, adj.counit.left);
    VExpr unx = normal_form_expr(A, adj.unit.right);
    Cell unit2 = R.from_retro(retro_globular(A, A.vid(Rt.src), cu.left, cu));
    Cell counit2 = R.from_retro(retro_globular(A, un.right, A.vid(L.src), un));
    return VAdjunction{Rt, L, tcell(counit2, unx, VExpr::I(L.src)),
                       tcell(unit2, VExpr::I(Rt.src), cux)};
}

HAdjunction hadj_to_co(const CoInstance& Aco, const HAdjunction& adj) {
    return HAdjunction{adj.right, adj.left, Aco.cflip(adj.unit), Aco.cflip(adj.counit)};
}

namespace {

VExpr vexpr_co(const CoInstance& Aco, const VExpr& e) {
    switch (e.kind) {
        case VExpr::Leaf: return VExpr::L(Aco.vflip(e.leaf));
        case VExpr::Id: return VExpr::I(e.obj);
        default: return VExpr::C(vexpr_co(Aco, *e.before), vexpr_co(Aco, *e.after));
    }
}

TCell tcell_co(const CoInstance& Aco, const TCell& t) {
    return tcell(Aco.cflip(t.cell), vexpr_co(Aco, t.left), vexpr_co(Aco, t.right));
}

}  // namespace

VAdjunction vadj_to_co(const CoInstance& Aco, const VAdjunction& adj) {
    return VAdjunction{Aco.vflip(adj.right), Aco.vflip(adj.left),
                       tcell_co(Aco, adj.counit), tcell_co(Aco, adj.unit)};
}

Cell mate_corner(std::shared_ptr<const Instance> A, const Cell& alpha,
                 const HAdjunction& hf, const HAdjunction& kg, const VAdjunction& vx,
                 const VAdjunction& wy) {
    auto R = std::make_shared<RetInstance>(A);
    RetInstance Rret(R);
    Retrocell g1 = mate_horizontal(*A, alpha, hf, kg);  // over (h, w, v, k)
    Cell c1 = R->from_retro(g1);
    // in ret(A) the right adjoints x, y have become left adjoints
    Retrocell d = mate_vertical(*R, c1, vadj_to_ret(*R, wy), vadj_to_ret(*R, vx));
    return double_dual_from(Rret, Rret.from_retro(d));  // over (k, y, x, h)
}

Cell mate_corner_inv(std::shared_ptr<const Instance> A, const Cell& delta,
                     const HAdjunction& hf, const HAdjunction& kg, const VAdjunction& vx,
                     const VAdjunction& wy) {
    auto R = std::make_shared<RetInstance>(A);
    RetInstance Rret(R);
    Retrocell d = Rret.to_retro(double_dual_to(Rret, delta));
    Cell c1 = mate_vertical_inv(*R, d, vadj_to_ret(*R, wy), vadj_to_ret(*R, vx));
    return mate_horizontal_inv(*A, R->to_retro(c1), hf, kg);
}

Cell mate_corner_alt(std::shared_ptr<const Instance> A, const Cell& alpha,
                     const HAdjunction& fh, const HAdjunction& gk, const VAdjunction& xv,
                     const VAdjunction& yw) {
    auto R = std::make_shared<RetInstance>(A);
    RetInstance Rret(R);
    Retrocell g1 = mate_vertical(*A, alpha, xv, yw);  // over (g, x, y, f)
    Cell c1 = R->from_retro(g1);
    // in ret(A) the right adjoints h, k have become left adjoints
    Retrocell d = mate_horizontal(*R, c1, hadj_to_ret(*R, gk), hadj_to_ret(*R, fh));
    return double_dual_from(Rret, Rret.from_retro(d));  // over (k, y, x, h)
}

Coretrocell comate_vertical(const CoInstance& Aco, const Cell& alpha,
                            const VAdjunction& vx, const VAdjunction& wy) {
    if (vx.left != alpha.left || wy.left != alpha.right)
        throw BoundaryError("comate_vertical: adjunctions do not match the columns");
    Cell a2 = Aco.cflip(alpha);  // over (g, v', w', f) in co(A)
    Retrocell b =
        mate_vertical(Aco, a2, vadj_to_co(Aco, vx), vadj_to_co(Aco, wy));
    return co_retro_to_coretro(Aco, b);  // over (g, x, y, f)
}

Cell comate_vertical_inv(const CoInstance& Aco, const Coretrocell& beta,
                         const VAdjunction& vx, const VAdjunction& wy) {
    Retrocell b = coretro_to_co_retro(Aco, beta);
    Cell a2 = mate_vertical_inv(Aco, b, vadj_to_co(Aco, vx), vadj_to_co(Aco, wy));
    return Aco.cflip(a2);
}

Coretrocell comate_horizontal(const CoInstance& Aco, const Cell& alpha,
                              const HAdjunction& fh, const HAdjunction& gk) {
    if (fh.left != alpha.top || gk.left != alpha.bottom)
        throw BoundaryError("comate_horizontal: adjunctions do not match the rows");
    Cell a2 = Aco.cflip(alpha);  // over (g, v', w', f)
    Retrocell b =
        mate_horizontal(Aco, a2, hadj_to_co(Aco, gk), hadj_to_co(Aco, fh));
    return co_retro_to_coretro(Aco, b);  // over (h, w, v, k)
}

Cell comate_horizontal_inv(const CoInstance& Aco, const Coretrocell& gamma,
                           const HAdjunction& fh, const HAdjunction& gk) {
    Retrocell b = coretro_to_co_retro(Aco, gamma);
    Cell a2 = mate_horizontal_inv(Aco, b, hadj_to_co(Aco, gk), hadj_to_co(Aco, fh));
    return Aco.cflip(a2);
}

}  // namespace rk
