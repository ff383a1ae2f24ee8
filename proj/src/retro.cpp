#include "retrokit/retro.hpp"

namespace rk {

namespace {

TCell tid(const Instance& A, const VArrow& u) {
    return tcell(A.cell_vid(u), VExpr::L(u), VExpr::L(u));
}

// identity cell on u carrying a factorization of u
TCell tidx(const Instance& A, const VArrow& u, const VExpr& ux) {
    return tcell(A.cell_vid(u), ux, ux);
}

void check_frame(const Instance& A, const HArrow& f, const VArrow& v, const VArrow& w,
                 const HArrow& g, const char* what) {
    if (f.src != v.src || f.dst != w.src || v.dst != g.src || w.dst != g.dst)
        throw BoundaryError(std::string(what) + ": arrows do not frame a square");
    (void)A;
}

}  // namespace

static Retrocell make_retrocell_x(const Instance& A, const HArrow& f, const VArrow& v,
                                  const VArrow& w, const HArrow& g, const TCell& under,
                                  VExpr vx, VExpr wx) {
    check_frame(A, f, v, w, g, "make_retrocell");
    if (under.cell.top != A.hid(f.src) || under.cell.bottom != A.hid(g.dst))
        throw BoundaryError("make_retrocell: carrier is not globular");
    VExpr le = VExpr::C(wx, VExpr::L(A.companion(f)));
    VExpr re = VExpr::C(VExpr::L(A.companion(g)), vx);
    return Retrocell{f, g, v, w, treframe(A, under, le, re), std::move(vx), std::move(wx)};
}

Retrocell make_retrocell(const Instance& A, const HArrow& f, const VArrow& v,
                         const VArrow& w, const HArrow& g, const TCell& under) {
    return make_retrocell_x(A, f, v, w, g, under, VExpr::L(v), VExpr::L(w));
}

Retrocell make_retrocell(const Instance& A, const HArrow& f, const VArrow& v,
                         const VArrow& w, const HArrow& g, const TCell& under, VExpr vx,
                         VExpr wx) {
    return make_retrocell_x(A, f, v, w, g, under, std::move(vx), std::move(wx));
}

Retrocell make_retrocell(const Instance& A, const HArrow& f, const VArrow& v,
                         const VArrow& w, const HArrow& g, const Cell& under) {
    return make_retrocell(A, f, v, w, g, tcell(A, under));
}

static Coretrocell make_coretrocell_x(const Instance& A, const HArrow& f, const VArrow& v,
                                      const VArrow& w, const HArrow& g, const TCell& under,
                                      VExpr vx, VExpr wx) {
    check_frame(A, f, v, w, g, "make_coretrocell");
    if (under.cell.top != A.hid(f.dst) || under.cell.bottom != A.hid(g.src))
        throw BoundaryError("make_coretrocell: carrier is not globular");
    VExpr le = VExpr::C(VExpr::L(A.conjoint(g)), wx);
    VExpr re = VExpr::C(vx, VExpr::L(A.conjoint(f)));
    return Coretrocell{f, g, v, w, treframe(A, under, le, re), std::move(vx), std::move(wx)};
}

Coretrocell make_coretrocell(const Instance& A, const HArrow& f, const VArrow& v,
                             const VArrow& w, const HArrow& g, const TCell& under) {
    return make_coretrocell_x(A, f, v, w, g, under, VExpr::L(v), VExpr::L(w));
}

Coretrocell make_coretrocell(const Instance& A, const HArrow& f, const VArrow& v,
                             const VArrow& w, const HArrow& g, const Cell& under) {
    return make_coretrocell(A, f, v, w, g, tcell(A, under));
}

Retrocell retro_vid(const Instance& A, const HArrow& f) {
    VArrow fs = A.companion(f);
    VExpr le = VExpr::C(VExpr::L(A.vid(f.dst)), VExpr::L(fs));
    VExpr re = VExpr::C(VExpr::L(fs), VExpr::L(A.vid(f.src)));
    return make_retrocell(A, f, A.vid(f.src), A.vid(f.dst), f, tcoherence(A, le, re));
}

Retrocell retro_hid(const Instance& A, const VArrow& v) {
    VExpr le = VExpr::C(VExpr::L(v), VExpr::L(A.vid(v.src)));
    VExpr re = VExpr::C(VExpr::L(A.vid(v.dst)), VExpr::L(v));
    return make_retrocell(A, A.hid(v.src), v, v, A.hid(v.dst), tcoherence(A, le, re));
}

Retrocell retro_globular(const Instance& A, const VArrow& x, const VArrow& y,
                         const Cell& down) {
    if (down.left != y || down.right != x)
        throw BoundaryError("retro_globular: carrier must go y => x");
    return make_retrocell(A, A.hid(x.src), x, y, A.hid(x.dst), down);
}

Retrocell retro_hcompose(const Instance& A, const Retrocell& a, const Retrocell& b) {
    if (a.w != b.v || a.f.dst != b.f.src || a.g.dst != b.g.src)
        throw BoundaryError("retro_hcompose: boundaries do not match");
    const HArrow &f = a.f, &g = a.g, &h = b.f, &k = b.g;
    // x∘(hf)_* => x∘(h_*∘f_*) => (k_*∘w)∘f_* => k_*∘(g_*∘v) => (kg)_*∘v
    TCell c1 = tvcompose(A, iso_comp_to(A, h, f), tidx(A, b.w, b.wx));
    TCell c2 = tvcompose(A, tid(A, A.companion(f)), b.under);
    TCell c3 = tvcompose(A, a.under, tid(A, A.companion(k)));
    TCell c4 = tvcompose(A, tidx(A, a.v, a.vx), iso_comp_from(A, k, g));
    TCell under = thcompose(A, thcompose(A, thcompose(A, c1, c2), c3), c4);
    return make_retrocell_x(A, A.hcomp(h, f), a.v, b.w, A.hcomp(k, g), under, a.vx, b.wx);
}

Retrocell retro_vcompose(const Instance& A, const Retrocell& t, const Retrocell& b) {
    if (t.g != b.f) throw BoundaryError("retro_vcompose: boundaries do not match");
    // (w'∘w)∘f_* => w'∘(g_*∘v) => (h_*∘v')∘v => h_*∘(v'∘v)
    TCell c1 = tvcompose(A, t.under, tidx(A, b.w, b.wx));
    TCell c2 = tvcompose(A, tidx(A, t.v, t.vx), b.under);
    TCell under = thcompose(A, c1, c2);
    return make_retrocell_x(A, t.f, A.vcomp(b.v, t.v), A.vcomp(b.w, t.w), b.g, under,
                            VExpr::C(b.vx, t.vx), VExpr::C(b.wx, t.wx));
}

std::vector<Retrocell> enumerate_retrocells(const Instance& A, const Boundary& bd) {
    VArrow fs = A.companion(bd.top), gs = A.companion(bd.bottom);
    Boundary carrier{A.hid(bd.top.src), A.vcomp(bd.right, fs), A.vcomp(gs, bd.left),
                     A.hid(bd.bottom.dst)};
    std::vector<Retrocell> out;
    for (auto& c : A.enumerate_cells(carrier))
        out.push_back(make_retrocell(A, bd.top, bd.left, bd.right, bd.bottom, c));
    return out;
}

Coretrocell coretro_vid(const Instance& A, const HArrow& f) {
    VArrow fc = A.conjoint(f);
    VExpr le = VExpr::C(VExpr::L(fc), VExpr::L(A.vid(f.dst)));
    VExpr re = VExpr::C(VExpr::L(A.vid(f.src)), VExpr::L(fc));
    return make_coretrocell(A, f, A.vid(f.src), A.vid(f.dst), f, tcoherence(A, le, re));
}

Coretrocell coretro_hid(const Instance& A, const VArrow& v) {
    VExpr le = VExpr::C(VExpr::L(A.vid(v.dst)), VExpr::L(v));
    VExpr re = VExpr::C(VExpr::L(v), VExpr::L(A.vid(v.src)));
    return make_coretrocell(A, A.hid(v.src), v, v, A.hid(v.dst), tcoherence(A, le, re));
}

Coretrocell coretro_hcompose(const Instance& A, const Coretrocell& a, const Coretrocell& b) {
    if (a.w != b.v || a.f.dst != b.f.src || a.g.dst != b.g.src)
        throw BoundaryError("coretro_hcompose: boundaries do not match");
    const HArrow &f = a.f, &g = a.g, &h = b.f, &k = b.g;
    // (kg)^*∘x => (g^*∘k^*)∘x => g^*∘(w∘h^*) => (v∘f^*)∘h^* => v∘(hf)^*
    TCell c1 = tvcompose(A, tidx(A, b.w, b.wx), iso_conj_to(A, k, g));
    TCell c2 = tvcompose(A, b.under, tid(A, A.conjoint(g)));
    TCell c3 = tvcompose(A, tid(A, A.conjoint(h)), a.under);
    TCell c4 = tvcompose(A, iso_conj_from(A, h, f), tidx(A, a.v, a.vx));
    TCell under = thcompose(A, thcompose(A, thcompose(A, c1, c2), c3), c4);
    return make_coretrocell_x(A, A.hcomp(h, f), a.v, b.w, A.hcomp(k, g), under, a.vx, b.wx);
}

Coretrocell coretro_vcompose(const Instance& A, const Coretrocell& t, const Coretrocell& b) {
    if (t.g != b.f) throw BoundaryError("coretro_vcompose: boundaries do not match");
    // h^*∘(w'∘w) => (v'∘g^*)∘w => v'∘(v∘f^*) => (v'∘v)∘f^*
    TCell c1 = tvcompose(A, tidx(A, t.w, t.wx), b.under);
    TCell c2 = tvcompose(A, t.under, tidx(A, b.v, b.vx));
    TCell under = thcompose(A, c1, c2);
    return make_coretrocell_x(A, t.f, A.vcomp(b.v, t.v), A.vcomp(b.w, t.w), b.g, under,
                              VExpr::C(b.vx, t.vx), VExpr::C(b.wx, t.wx));
}

std::vector<Coretrocell> enumerate_coretrocells(const Instance& A, const Boundary& bd) {
    VArrow fc = A.conjoint(bd.top), gc = A.conjoint(bd.bottom);
    Boundary carrier{A.hid(bd.top.dst), A.vcomp(gc, bd.right), A.vcomp(bd.left, fc),
                     A.hid(bd.bottom.src)};
    std::vector<Coretrocell> out;
    for (auto& c : A.enumerate_cells(carrier))
        out.push_back(make_coretrocell(A, bd.top, bd.left, bd.right, bd.bottom, c));
    return out;
}

// ------------------------------------------------------------------ ret(A)

RetInstance::RetInstance(std::shared_ptr<const Instance> base) : base_(std::move(base)) {
    if (!base_->has_companions())
        throw DcatError("ret: base instance has no companions");
}

std::string RetInstance::name() const { return "ret(" + base_->name() + ")"; }
bool RetInstance::strict() const { return base_->strict(); }
HArrow RetInstance::hid(const Value& o) const { return base_->hid(o); }
VArrow RetInstance::vid(const Value& o) const { return base_->vid(o); }
HArrow RetInstance::hcomp(const HArrow& s, const HArrow& f) const { return base_->hcomp(s, f); }
VArrow RetInstance::vcomp(const VArrow& s, const VArrow& f) const { return base_->vcomp(s, f); }

Cell RetInstance::from_retro(const Retrocell& r) const {
    return Cell{r.f, r.v, r.w, r.g, r.under.cell.pay};
}

Retrocell RetInstance::to_retro(const Cell& c) const {
    const Instance& A = *base_;
    VArrow fs = A.companion(c.top), gs = A.companion(c.bottom);
    Cell carrier{A.hid(c.top.src), A.vcomp(c.right, fs), A.vcomp(gs, c.left),
                 A.hid(c.bottom.dst), c.pay};
    return make_retrocell(A, c.top, c.left, c.right, c.bottom, carrier);
}

Cell RetInstance::cell_hid(const HArrow& f) const { return from_retro(retro_vid(*base_, f)); }
Cell RetInstance::cell_vid(const VArrow& v) const { return from_retro(retro_hid(*base_, v)); }

Cell RetInstance::hcompose(const Cell& l, const Cell& r) const {
    return from_retro(retro_hcompose(*base_, to_retro(l), to_retro(r)));
}
Cell RetInstance::vcompose(const Cell& t, const Cell& b) const {
    return from_retro(retro_vcompose(*base_, to_retro(t), to_retro(b)));
}

std::vector<Cell> RetInstance::enumerate_cells(const Boundary& b) const {
    std::vector<Cell> out;
    for (auto& r : enumerate_retrocells(*base_, b)) out.push_back(from_retro(r));
    return out;
}

Cell RetInstance::associator(const VArrow& u, const VArrow& v, const VArrow& w) const {
    const Instance& A = *base_;
    VArrow x = A.vcomp(A.vcomp(w, v), u), y = A.vcomp(w, A.vcomp(v, u));
    return from_retro(retro_globular(A, x, y, A.associator_inv(u, v, w)));
}
Cell RetInstance::associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const {
    const Instance& A = *base_;
    VArrow x = A.vcomp(w, A.vcomp(v, u)), y = A.vcomp(A.vcomp(w, v), u);
    return from_retro(retro_globular(A, x, y, A.associator(u, v, w)));
}
Cell RetInstance::lunitor(const VArrow& v) const {
    const Instance& A = *base_;
    return from_retro(retro_globular(A, A.vcomp(A.vid(v.dst), v), v, A.lunitor_inv(v)));
}
Cell RetInstance::lunitor_inv(const VArrow& v) const {
    const Instance& A = *base_;
    return from_retro(retro_globular(A, v, A.vcomp(A.vid(v.dst), v), A.lunitor(v)));
}
Cell RetInstance::runitor(const VArrow& v) const {
    const Instance& A = *base_;
    return from_retro(retro_globular(A, A.vcomp(v, A.vid(v.src)), v, A.runitor_inv(v)));
}
Cell RetInstance::runitor_inv(const VArrow& v) const {
    const Instance& A = *base_;
    return from_retro(retro_globular(A, v, A.vcomp(v, A.vid(v.src)), A.runitor(v)));
}

bool RetInstance::has_companions() const { return true; }
VArrow RetInstance::companion(const HArrow& f) const { return base_->companion(f); }

Cell RetInstance::psi(const HArrow& f) const {
    const Instance& A = *base_;
    VArrow fs = A.companion(f);
    VExpr e = VExpr::C(VExpr::L(fs), VExpr::L(A.vid(f.src)));
    TCell under = tcell(A.cell_vid(A.vcomp(fs, A.vid(f.src))), e, e);
    return from_retro(make_retrocell(A, A.hid(f.src), A.vid(f.src), fs, f, under));
}

Cell RetInstance::chi(const HArrow& f) const {
    const Instance& A = *base_;
    VArrow fs = A.companion(f);
    VExpr e = VExpr::C(VExpr::L(A.vid(f.dst)), VExpr::L(fs));
    TCell under = tcell(A.cell_vid(A.vcomp(A.vid(f.dst), fs)), e, e);
    return from_retro(make_retrocell(A, f, fs, A.vid(f.dst), A.hid(f.dst), under));
}

// ------------------------------------------------------------------- co(A)

CoInstance::CoInstance(std::shared_ptr<const Instance> base) : base_(std::move(base)) {}

VArrow CoInstance::vflip(const VArrow& v) const { return VArrow{v.dst, v.src, v.pay}; }
Cell CoInstance::cflip(const Cell& c) const {
    return Cell{c.bottom, vflip(c.left), vflip(c.right), c.top, c.pay};
}

std::string CoInstance::name() const { return "co(" + base_->name() + ")"; }
bool CoInstance::strict() const { return base_->strict(); }
HArrow CoInstance::hid(const Value& o) const { return base_->hid(o); }
VArrow CoInstance::vid(const Value& o) const { return base_->vid(o); }
HArrow CoInstance::hcomp(const HArrow& s, const HArrow& f) const { return base_->hcomp(s, f); }
VArrow CoInstance::vcomp(const VArrow& s, const VArrow& f) const {
    return vflip(base_->vcomp(vflip(f), vflip(s)));
}
Cell CoInstance::cell_hid(const HArrow& f) const { return cflip(base_->cell_hid(f)); }
Cell CoInstance::cell_vid(const VArrow& v) const { return cflip(base_->cell_vid(vflip(v))); }
Cell CoInstance::hcompose(const Cell& l, const Cell& r) const {
    return cflip(base_->hcompose(cflip(l), cflip(r)));
}
Cell CoInstance::vcompose(const Cell& t, const Cell& b) const {
    return cflip(base_->vcompose(cflip(b), cflip(t)));
}
std::vector<Cell> CoInstance::enumerate_cells(const Boundary& b) const {
    Boundary fb{b.bottom, vflip(b.left), vflip(b.right), b.top};
    std::vector<Cell> out;
    for (auto& c : base_->enumerate_cells(fb)) out.push_back(cflip(c));
    return out;
}
Cell CoInstance::associator(const VArrow& u, const VArrow& v, const VArrow& w) const {
    return cflip(base_->associator_inv(vflip(w), vflip(v), vflip(u)));
}
Cell CoInstance::associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const {
    return cflip(base_->associator(vflip(w), vflip(v), vflip(u)));
}
Cell CoInstance::lunitor(const VArrow& v) const { return cflip(base_->runitor(vflip(v))); }
Cell CoInstance::lunitor_inv(const VArrow& v) const {
    return cflip(base_->runitor_inv(vflip(v)));
}
Cell CoInstance::runitor(const VArrow& v) const { return cflip(base_->lunitor(vflip(v))); }
Cell CoInstance::runitor_inv(const VArrow& v) const {
    return cflip(base_->lunitor_inv(vflip(v)));
}
bool CoInstance::has_companions() const { return base_->has_conjoints(); }
VArrow CoInstance::companion(const HArrow& f) const { return vflip(base_->conjoint(f)); }
Cell CoInstance::psi(const HArrow& f) const { return cflip(base_->conj_alpha(f)); }
Cell CoInstance::chi(const HArrow& f) const { return cflip(base_->conj_beta(f)); }
bool CoInstance::has_conjoints() const { return base_->has_companions(); }
VArrow CoInstance::conjoint(const HArrow& f) const { return vflip(base_->companion(f)); }
Cell CoInstance::conj_alpha(const HArrow& f) const { return cflip(base_->psi(f)); }
Cell CoInstance::conj_beta(const HArrow& f) const { return cflip(base_->chi(f)); }

// ------------------------------------------------------------------- op(A)

OpInstance::OpInstance(std::shared_ptr<const Instance> base) : base_(std::move(base)) {}

HArrow OpInstance::hflip(const HArrow& f) const { return HArrow{f.dst, f.src, f.pay}; }
Cell OpInstance::cflip(const Cell& c) const {
    return Cell{hflip(c.top), c.right, c.left, hflip(c.bottom), c.pay};
}

std::string OpInstance::name() const { return "op(" + base_->name() + ")"; }
bool OpInstance::strict() const { return base_->strict(); }
HArrow OpInstance::hid(const Value& o) const { return base_->hid(o); }
VArrow OpInstance::vid(const Value& o) const { return base_->vid(o); }
HArrow OpInstance::hcomp(const HArrow& s, const HArrow& f) const {
    return hflip(base_->hcomp(hflip(f), hflip(s)));
}
VArrow OpInstance::vcomp(const VArrow& s, const VArrow& f) const { return base_->vcomp(s, f); }
Cell OpInstance::cell_hid(const HArrow& f) const { return cflip(base_->cell_hid(hflip(f))); }
Cell OpInstance::cell_vid(const VArrow& v) const { return cflip(base_->cell_vid(v)); }
Cell OpInstance::hcompose(const Cell& l, const Cell& r) const {
    return cflip(base_->hcompose(cflip(r), cflip(l)));
}
Cell OpInstance::vcompose(const Cell& t, const Cell& b) const {
    return cflip(base_->vcompose(cflip(t), cflip(b)));
}
std::vector<Cell> OpInstance::enumerate_cells(const Boundary& b) const {
    Boundary fb{hflip(b.top), b.right, b.left, hflip(b.bottom)};
    std::vector<Cell> out;
    for (auto& c : base_->enumerate_cells(fb)) out.push_back(cflip(c));
    return out;
}
Cell OpInstance::associator(const VArrow& u, const VArrow& v, const VArrow& w) const {
    return cflip(base_->associator_inv(u, v, w));
}
Cell OpInstance::associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const {
    return cflip(base_->associator(u, v, w));
}
Cell OpInstance::lunitor(const VArrow& v) const { return cflip(base_->lunitor_inv(v)); }
Cell OpInstance::lunitor_inv(const VArrow& v) const { return cflip(base_->lunitor(v)); }
Cell OpInstance::runitor(const VArrow& v) const { return cflip(base_->runitor_inv(v)); }
Cell OpInstance::runitor_inv(const VArrow& v) const { return cflip(base_->runitor(v)); }
bool OpInstance::has_companions() const { return base_->has_conjoints(); }
VArrow OpInstance::companion(const HArrow& f) const { return base_->conjoint(hflip(f)); }
Cell OpInstance::psi(const HArrow& f) const { return cflip(base_->conj_beta(hflip(f))); }
Cell OpInstance::chi(const HArrow& f) const { return cflip(base_->conj_alpha(hflip(f))); }
bool OpInstance::has_conjoints() const { return base_->has_companions(); }
VArrow OpInstance::conjoint(const HArrow& f) const { return base_->companion(hflip(f)); }
Cell OpInstance::conj_alpha(const HArrow& f) const { return cflip(base_->chi(hflip(f))); }
Cell OpInstance::conj_beta(const HArrow& f) const { return cflip(base_->psi(hflip(f))); }

// ------------------------------------------------------------------ cor(A)

std::shared_ptr<Instance> make_cor(std::shared_ptr<const Instance> base) {
    auto c1 = std::make_shared<CoInstance>(std::move(base));
    auto r = std::make_shared<RetInstance>(c1);
    return std::make_shared<CoInstance>(r);
}

Retrocell coretro_to_co_retro(const CoInstance& Aco, const Coretrocell& c) {
    return make_retrocell(Aco, c.g, Aco.vflip(c.v), Aco.vflip(c.w), c.f,
                          Aco.cflip(c.under.cell));
}

Coretrocell co_retro_to_coretro(const CoInstance& Aco, const Retrocell& r) {
    return make_coretrocell(Aco.base(), r.g, Aco.vflip(r.v), Aco.vflip(r.w), r.f,
                            Aco.cflip(r.under.cell));
}

// ------------------------------------------------------------- double dual

Cell double_dual_to(const RetInstance& Aretret, const Cell& c) {
    auto* R = dynamic_cast<const RetInstance*>(&Aretret.base());
    if (!R) throw DcatError("double_dual: instance is not ret(ret(A))");
    const Instance& A = R->base();
    // the carrier of the carrier is the companion transpose of c
    TCell h = hat(A, tcell(A, c));
    VArrow fs = A.companion(c.top), gs = A.companion(c.bottom);
    VArrow x = A.vcomp(c.right, fs), y = A.vcomp(gs, c.left);
    VExpr xe = VExpr::C(VExpr::L(c.right), VExpr::L(fs));
    VExpr ye = VExpr::C(VExpr::L(gs), VExpr::L(c.left));
    Retrocell inner =
        make_retrocell(A, A.hid(c.top.src), x, y, A.hid(c.bottom.dst), h, xe, ye);
    Cell carrier = R->from_retro(inner);
    return Aretret.from_retro(
        make_retrocell(*R, c.top, c.left, c.right, c.bottom, tcell(*R, carrier)));
}

Cell double_dual_from(const RetInstance& Aretret, const Cell& c) {
    auto* R = dynamic_cast<const RetInstance*>(&Aretret.base());
    if (!R) throw DcatError("double_dual: instance is not ret(ret(A))");
    const Instance& A = R->base();
    Retrocell outer = Aretret.to_retro(c);
    // unwrap the inner retrocell by hand, keeping the factorizations of its
    // frame arrows  x = w∘f_*  and  y = g_*∘v  visible
    const Cell& cc = outer.under.cell;
    VArrow fs = A.companion(c.top), gs = A.companion(c.bottom);
    VExpr xe = VExpr::C(VExpr::L(c.right), VExpr::L(fs));
    VExpr ye = VExpr::C(VExpr::L(gs), VExpr::L(c.left));
    VArrow ivt = A.vid(cc.top.src), ivb = A.vid(cc.bottom.dst);
    Cell carrier{A.hid(cc.top.src), A.vcomp(cc.right, ivt), A.vcomp(ivb, cc.left),
                 A.hid(cc.bottom.dst), cc.pay};
    TCell tcarrier = tcell(carrier, VExpr::C(ye, VExpr::L(ivt)),
                           VExpr::C(VExpr::L(ivb), xe));
    Retrocell inner =
        make_retrocell(A, cc.top, cc.left, cc.right, cc.bottom, tcarrier, xe, ye);
    return tnormalize(A, unhat(A, inner.under, c.top, c.bottom,
                               VExpr::L(c.left), VExpr::L(c.right)));
}

}  // namespace rk
