#include "retrokit/monads.hpp"

#include "retrokit/companions.hpp"
#include "retrokit/finset.hpp"

#include <algorithm>
#include <map>

namespace rk {

namespace {

TCell tid(const Instance& A, const VArrow& v) {
    return tcell(A.cell_vid(v), VExpr::L(v), VExpr::L(v));
}

TCell unit_tc(const Instance& A, const VMonad& m) {
    return tcell(m.unit, VExpr::I(m.obj), VExpr::L(m.t));
}

TCell mult_tc(const VMonad& m) {
    return tcell(m.mult, VExpr::C(VExpr::L(m.t), VExpr::L(m.t)), VExpr::L(m.t));
}

bool globular_over(const Instance& A, const Cell& c, const Value& obj) {
    return c.top == A.hid(obj) && c.bottom == A.hid(obj);
}

}  // namespace

// ---------------------------------------------------------------------------
// Monads.

VMonad identity_vmonad(const Instance& A, const Value& obj) {
    VArrow t = A.vid(obj);
    VExpr l = VExpr::L(t);
    Cell mult = tcoherence(A, VExpr::C(l, l), l).cell;
    return {obj, t, A.cell_vid(t), mult};
}

CheckReport monad_check(const Instance& A, const VMonad& m) {
    CheckReport rep;
    if (m.t.src != m.obj || m.t.dst != m.obj) {
        rep.fail("carrier boundary");
        return rep;
    }
    if (!globular_over(A, m.unit, m.obj) || m.unit.left != A.vid(m.obj) ||
        m.unit.right != m.t) {
        rep.fail("unit boundary");
        return rep;
    }
    if (!globular_over(A, m.mult, m.obj) || m.mult.left != A.vcomp(m.t, m.t) ||
        m.mult.right != m.t) {
        rep.fail("mult boundary");
        return rep;
    }
    TCell eta = unit_tc(A, m), mu = mult_tc(m), one = tid(A, m.t);
    if (!tequal(A, thcompose(A, twhisker_after(A, m.t, eta), mu), one))
        rep.fail("left unit");
    if (!tequal(A, thcompose(A, twhisker_before(A, eta, m.t), mu), one))
        rep.fail("right unit");
    if (!tequal(A, thcompose(A, twhisker_before(A, mu, m.t), mu),
                thcompose(A, twhisker_after(A, m.t, mu), mu)))
        rep.fail("associativity");
    return rep;
}

// ---------------------------------------------------------------------------
// Oplax morphisms.

CheckReport morphism_check(const Instance& A, const VMonad& dom, const VMonad& cod,
                           const MonadMorphism& mm) {
    CheckReport rep;
    const Cell& psi = mm.psi;
    if (mm.f.src != dom.obj || mm.f.dst != cod.obj || psi.top != mm.f ||
        psi.bottom != mm.f || psi.left != dom.t || psi.right != cod.t) {
        rep.fail("shape");
        return rep;
    }
    if (A.hcompose(dom.unit, psi) != A.hcompose(A.cell_hid(mm.f), cod.unit))
        rep.fail("unit compatibility");
    if (A.hcompose(dom.mult, psi) != A.hcompose(A.vcompose(psi, psi), cod.mult))
        rep.fail("multiplication compatibility");
    return rep;
}

// ---------------------------------------------------------------------------
// Retromorphisms.  The laws are stated on the carrier  s∘f_* => f_*∘t  of the
// retrocell, pasted with the unit/multiplication cells of the two monads.

CheckReport retromorphism_check(const Instance& A, const VMonad& dom, const VMonad& cod,
                                const Retromorphism& r) {
    CheckReport rep;
    const Retrocell& p = r.phi;
    if (r.f.src != dom.obj || r.f.dst != cod.obj || p.f != r.f || p.g != r.f ||
        p.v != dom.t || p.w != cod.t) {
        rep.fail("shape");
        return rep;
    }
    VArrow fs = A.companion(r.f);
    const TCell& carrier = p.under;
    TCell eta = unit_tc(A, dom), mu = mult_tc(dom);
    TCell kappa = unit_tc(A, cod), nu = mult_tc(cod);
    // unit:  (kappa below f_*) then carrier  =  f_* above eta
    TCell lhs1 = thcompose(A, twhisker_before(A, kappa, fs), carrier);
    TCell rhs1 = twhisker_after(A, fs, eta);
    if (!tequal(A, lhs1, rhs1)) rep.fail("unit compatibility");
    // multiplication:  (nu below f_*) then carrier
    //               =  carrier twice (whiskered) then (f_* above mu)
    TCell lhs2 = thcompose(A, twhisker_before(A, nu, fs), carrier);
    TCell rhs2 = thcompose(A,
                           thcompose(A, twhisker_after(A, cod.t, carrier),
                                     twhisker_before(A, carrier, dom.t)),
                           twhisker_after(A, fs, mu));
    if (!tequal(A, lhs2, rhs2)) rep.fail("multiplication compatibility");
    return rep;
}

Retromorphism identity_retromorphism(const Instance& A, const VMonad& m) {
    return {A.hid(m.obj), retro_hid(A, m.t)};
}

Retromorphism compose_retromorphisms(const Instance& A, const Retromorphism& r1,
                                     const Retromorphism& r2) {
    if (r1.phi.w != r2.phi.v || r1.f.dst != r2.f.src)
        throw BoundaryError("compose_retromorphisms: monad mismatch");
    return {A.hcomp(r2.f, r1.f), retro_hcompose(A, r1.phi, r2.phi)};
}

// ---------------------------------------------------------------------------
// Coretromorphisms: same laws through the conjoint carrier  f^*∘s => t∘f^*.

CheckReport coretromorphism_check(const Instance& A, const VMonad& dom, const VMonad& cod,
                                  const Coretromorphism& r) {
    CheckReport rep;
    const Coretrocell& p = r.theta;
    if (r.f.src != dom.obj || r.f.dst != cod.obj || p.f != r.f || p.g != r.f ||
        p.v != dom.t || p.w != cod.t) {
        rep.fail("shape");
        return rep;
    }
    VArrow fc = A.conjoint(r.f);
    const TCell& carrier = p.under;
    TCell eta = unit_tc(A, dom), mu = mult_tc(dom);
    TCell kappa = unit_tc(A, cod), nu = mult_tc(cod);
    TCell lhs1 = thcompose(A, twhisker_after(A, fc, kappa), carrier);
    TCell rhs1 = twhisker_before(A, eta, fc);
    if (!tequal(A, lhs1, rhs1)) rep.fail("unit compatibility");
    TCell lhs2 = thcompose(A, twhisker_after(A, fc, nu), carrier);
    TCell rhs2 = thcompose(A,
                           thcompose(A, twhisker_before(A, carrier, cod.t),
                                     twhisker_after(A, dom.t, carrier)),
                           twhisker_before(A, mu, fc));
    if (!tequal(A, lhs2, rhs2)) rep.fail("multiplication compatibility");
    return rep;
}

Coretromorphism identity_coretromorphism(const Instance& A, const VMonad& m) {
    return {A.hid(m.obj), coretro_hid(A, m.t)};
}

Coretromorphism compose_coretromorphisms(const Instance& A, const Coretromorphism& r1,
                                         const Coretromorphism& r2) {
    if (r1.theta.w != r2.theta.v || r1.f.dst != r2.f.src)
        throw BoundaryError("compose_coretromorphisms: monad mismatch");
    return {A.hcomp(r2.f, r1.f), coretro_hcompose(A, r1.theta, r2.theta)};
}

// ---------------------------------------------------------------------------
// Finite categories.

CheckReport fincat_check(const FinCat& c) {
    CheckReport rep;
    for (auto& a : c.arrows) {
        if (!defined_at(graph_of(c.src), a) || !contains(c.objects, apply(graph_of(c.src), a)))
            rep.fail("source map at " + show(a));
        if (!defined_at(graph_of(c.dst), a) || !contains(c.objects, apply(graph_of(c.dst), a)))
            rep.fail("target map at " + show(a));
    }
    if (!rep.ok) return rep;
    for (auto& x : c.objects) {
        auto it = c.ident.find(x);
        if (it == c.ident.end() || !contains(c.arrows, it->second) ||
            c.src.at(it->second) != x || c.dst.at(it->second) != x) {
            rep.fail("identity at " + show(x));
            return rep;
        }
    }
    // comp defined exactly on composable pairs, with matching endpoints
    size_t composable = 0;
    for (auto& a : c.arrows)
        for (auto& b : c.arrows) {
            if (c.dst.at(a) != c.src.at(b)) continue;  // a then b
            ++composable;
            auto it = c.comp.find(vpair(b, a));
            if (it == c.comp.end()) {
                rep.fail("missing composite " + show(b) + "∘" + show(a));
                return rep;
            }
            const Value& ba = it->second;
            if (!contains(c.arrows, ba) || c.src.at(ba) != c.src.at(a) ||
                c.dst.at(ba) != c.dst.at(b)) {
                rep.fail("composite boundary " + show(b) + "∘" + show(a));
                return rep;
            }
        }
    if (c.comp.size() != composable) {
        rep.fail("composition table has spurious entries");
        return rep;
    }
    for (auto& a : c.arrows) {
        if (c.comp.at(vpair(a, c.ident.at(c.src.at(a)))) != a ||
            c.comp.at(vpair(c.ident.at(c.dst.at(a)), a)) != a) {
            rep.fail("unit law at " + show(a));
            return rep;
        }
    }
    for (auto& a : c.arrows)
        for (auto& b : c.arrows) {
            if (c.dst.at(a) != c.src.at(b)) continue;
            for (auto& d : c.arrows) {
                if (c.dst.at(b) != c.src.at(d)) continue;
                if (c.comp.at(vpair(d, c.comp.at(vpair(b, a)))) !=
                    c.comp.at(vpair(c.comp.at(vpair(d, b)), a))) {
                    rep.fail("associativity at (" + show(a) + "," + show(b) + "," +
                             show(d) + ")");
                    return rep;
                }
            }
        }
    return rep;
}

FinCat discrete_cat(int n) {
    FinCat c;
    for (int i = 0; i < n; ++i) {
        Value x(i);
        c.objects.push_back(x);
        c.arrows.push_back(x);
        c.src[x] = x;
        c.dst[x] = x;
        c.ident[x] = x;
        c.comp[vpair(x, x)] = x;
    }
    return c;
}

FinCat poset_01() {
    FinCat c;
    Value o0(0), o1(1);
    Value i0 = vpair(0, 0), i1 = vpair(1, 1), f = vpair(0, 1);  // arrows named (src,dst)
    c.objects = {o0, o1};
    c.arrows = {i0, f, i1};
    std::sort(c.arrows.begin(), c.arrows.end());
    for (auto& a : c.arrows) {
        c.src[a] = a.list()[0];
        c.dst[a] = a.list()[1];
    }
    c.ident[o0] = i0;
    c.ident[o1] = i1;
    c.comp[vpair(i0, i0)] = i0;
    c.comp[vpair(i1, i1)] = i1;
    c.comp[vpair(f, i0)] = f;
    c.comp[vpair(i1, f)] = f;
    return c;
}

static FinCat cyclic_cat(int n) {
    FinCat c;
    Value o(0);
    c.objects = {o};
    for (int i = 0; i < n; ++i) {
        Value a(i);
        c.arrows.push_back(a);
        c.src[a] = o;
        c.dst[a] = o;
    }
    c.ident[o] = Value(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.comp[vpair(Value(j), Value(i))] = Value((i + j) % n);
    return c;
}

FinCat z2_cat() { return cyclic_cat(2); }
FinCat z3_cat() { return cyclic_cat(3); }

FinCat chain_012() {
    FinCat c;
    for (int i = 0; i < 3; ++i) c.objects.push_back(Value(i));
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) c.arrows.push_back(vpair(i, j));
    std::sort(c.arrows.begin(), c.arrows.end());
    for (auto& a : c.arrows) {
        c.src[a] = a.list()[0];
        c.dst[a] = a.list()[1];
        if (a.list()[0] == a.list()[1]) c.ident[a.list()[0]] = a;
    }
    for (auto& a : c.arrows)
        for (auto& b : c.arrows)
            if (c.dst.at(a) == c.src.at(b))
                c.comp[vpair(b, a)] = vpair(c.src.at(a), c.dst.at(b));
    return c;
}

FinCat z2_covering() {
    // the action groupoid of Z/2 acting on {0,1} by swapping: objects 0,1;
    // arrows (x,g) from x to x+g
    FinCat c;
    c.objects = {Value(0), Value(1)};
    for (int x = 0; x < 2; ++x)
        for (int g = 0; g < 2; ++g) {
            Value a = vpair(x, g);
            c.arrows.push_back(a);
            c.src[a] = Value(x);
            c.dst[a] = Value((x + g) % 2);
        }
    std::sort(c.arrows.begin(), c.arrows.end());
    c.ident[Value(0)] = vpair(0, 0);
    c.ident[Value(1)] = vpair(1, 0);
    for (auto& a : c.arrows)
        for (auto& b : c.arrows)
            if (c.dst.at(a) == c.src.at(b)) {
                int x = (int)a.list()[0].num();
                int g = (int)((a.list()[1].num() + b.list()[1].num()) % 2);
                c.comp[vpair(b, a)] = vpair(x, g);
            }
    return c;
}

VMonad span_monad_from_category(const SpanInstance& S, const FinCat& c) {
    CheckReport ok = fincat_check(c);
    if (!ok.ok) throw DcatError("span_monad_from_category: " + ok.first());
    Value A0 = SpanInstance::obj(c.objects);
    VArrow t = SpanInstance::span(A0, A0, c.arrows, c.src, c.dst);
    VMap mu_unit;
    for (auto& x : c.objects) mu_unit[x] = c.ident.at(x);
    Cell unit = S.cell({S.hid(A0), S.vid(A0), t, S.hid(A0)}, mu_unit);
    VArrow tt = S.vcomp(t, t);
    VMap mu_mult;
    for (auto& p : SpanInstance::apex(tt)) {
        const Value& a = p.list()[0];  // first arrow
        const Value& b = p.list()[1];  // second arrow
        mu_mult[p] = c.comp.at(vpair(b, a));
    }
    Cell mult = S.cell({S.hid(A0), tt, t, S.hid(A0)}, mu_mult);
    return {A0, t, unit, mult};
}

FinCat category_from_span_monad(const SpanInstance& S, const VMonad& m) {
    FinCat c;
    c.objects = m.obj.list();
    c.arrows = SpanInstance::apex(m.t);
    for (auto& a : c.arrows) {
        c.src[a] = SpanInstance::leg0(m.t, a);
        c.dst[a] = SpanInstance::leg1(m.t, a);
    }
    for (auto& x : c.objects) c.ident[x] = SpanInstance::cell_apply(m.unit, x);
    for (auto& p : SpanInstance::apex(m.mult.left))
        c.comp[vpair(p.list()[1], p.list()[0])] = SpanInstance::cell_apply(m.mult, p);
    return c;
}

// ---------------------------------------------------------------------------
// Cofunctors.

CheckReport cofunctor_check(const FinCat& Acat, const FinCat& Bcat, const Cofunctor& F) {
    CheckReport rep;
    for (auto& x : Acat.objects)
        if (!defined_at(graph_of(F.ob), x) || !contains(Bcat.objects, F.ob.at(x))) {
            rep.fail("shape");
            return rep;
        }
    size_t liftable = 0;
    for (auto& A : Acat.objects)
        for (auto& b : Bcat.arrows) {
            if (Bcat.src.at(b) != F.ob.at(A)) continue;
            ++liftable;
            auto it = F.lift.find(vpair(A, b));
            if (it == F.lift.end() || !contains(Acat.arrows, it->second) ||
                Acat.src.at(it->second) != A ||
                F.ob.at(Acat.dst.at(it->second)) != Bcat.dst.at(b)) {
                rep.fail("shape");
                return rep;
            }
        }
    if (F.lift.size() != liftable) {
        rep.fail("shape");
        return rep;
    }
    bool unit_ok = true, comp_ok = true;
    for (auto& A : Acat.objects)
        if (F.lift.at(vpair(A, Bcat.ident.at(F.ob.at(A)))) != Acat.ident.at(A))
            unit_ok = false;
    for (auto& A : Acat.objects)
        for (auto& b : Bcat.arrows) {
            if (Bcat.src.at(b) != F.ob.at(A)) continue;
            Value a = F.lift.at(vpair(A, b));
            Value A2 = Acat.dst.at(a);
            for (auto& b2 : Bcat.arrows) {
                if (Bcat.src.at(b2) != Bcat.dst.at(b)) continue;
                Value lhs = F.lift.at(vpair(A, Bcat.comp.at(vpair(b2, b))));
                Value rhs = Acat.comp.at(vpair(F.lift.at(vpair(A2, b2)), a));
                if (lhs != rhs) comp_ok = false;
            }
        }
    if (!unit_ok) rep.fail("unit law");
    if (!comp_ok) rep.fail("composition law");
    return rep;
}

Cofunctor identity_cofunctor(const FinCat& c) {
    Cofunctor F;
    for (auto& x : c.objects) F.ob[x] = x;
    for (auto& A : c.objects)
        for (auto& b : c.arrows)
            if (c.src.at(b) == A) F.lift[vpair(A, b)] = b;
    return F;
}

Cofunctor compose_cofunctors(const Cofunctor& G, const Cofunctor& F) {
    Cofunctor H;
    for (auto& [x, fx] : F.ob) H.ob[x] = G.ob.at(fx);
    // lift(A, c) = F.lift(A, G.lift(F(A), c))
    for (auto& [fa_c, b] : G.lift) {
        const Value& FA = fa_c.list()[0];
        const Value& carr = fa_c.list()[1];
        for (auto& [x, fx] : F.ob)
            if (fx == FA) H.lift[vpair(x, carr)] = F.lift.at(vpair(x, b));
    }
    return H;
}

Cofunctor retromorphism_to_cofunctor(const SpanInstance& S, const Retromorphism& r) {
    Cofunctor F;
    F.ob = map_of(r.f.pay);
    const Cell& carrier = r.phi.under.cell;
    for (auto& p : SpanInstance::apex(carrier.left)) {
        // p = [A, b] with src(b) = F(A); image = [a, dst(a)]
        Value img = SpanInstance::cell_apply(carrier, p);
        F.lift[p] = img.list()[0];
    }
    return F;
}

Retromorphism cofunctor_to_retromorphism(const SpanInstance& S, const FinCat& Acat,
                                         const FinCat& Bcat, const Cofunctor& F) {
    VMonad mA = span_monad_from_category(S, Acat);
    VMonad mB = span_monad_from_category(S, Bcat);
    HArrow f = SpanInstance::fn(mA.obj, mB.obj, F.ob);
    VArrow fs = S.companion(f);
    VArrow dom = S.vcomp(mB.t, fs);   // B1 ∘ F_*
    VArrow cod = S.vcomp(fs, mA.t);   // F_* ∘ A1
    VMap m;
    for (auto& p : SpanInstance::apex(dom)) {
        Value a = F.lift.at(p);
        m[p] = vpair(a, Acat.dst.at(a));
    }
    Cell carrier = S.cell({S.hid(mA.obj), dom, cod, S.hid(mB.obj)}, m);
    return {f, make_retrocell(S, f, mA.t, mB.t, f, carrier)};
}

// ---------------------------------------------------------------------------
// Opcofunctors.

CheckReport opcofunctor_check(const FinCat& Acat, const FinCat& Bcat, const Opcofunctor& F) {
    CheckReport rep;
    for (auto& x : Acat.objects)
        if (!defined_at(graph_of(F.ob), x) || !contains(Bcat.objects, F.ob.at(x))) {
            rep.fail("shape");
            return rep;
        }
    size_t liftable = 0;
    for (auto& A : Acat.objects)
        for (auto& b : Bcat.arrows) {
            if (Bcat.dst.at(b) != F.ob.at(A)) continue;
            ++liftable;
            auto it = F.lift.find(vpair(A, b));
            if (it == F.lift.end() || !contains(Acat.arrows, it->second) ||
                Acat.dst.at(it->second) != A ||
                F.ob.at(Acat.src.at(it->second)) != Bcat.src.at(b)) {
                rep.fail("shape");
                return rep;
            }
        }
    if (F.lift.size() != liftable) {
        rep.fail("shape");
        return rep;
    }
    bool unit_ok = true, comp_ok = true;
    for (auto& A : Acat.objects)
        if (F.lift.at(vpair(A, Bcat.ident.at(F.ob.at(A)))) != Acat.ident.at(A))
            unit_ok = false;
    for (auto& A : Acat.objects)
        for (auto& b : Bcat.arrows) {
            if (Bcat.dst.at(b) != F.ob.at(A)) continue;
            Value a = F.lift.at(vpair(A, b));  // a: A' -> A
            Value A2 = Acat.src.at(a);
            for (auto& b2 : Bcat.arrows) {
                if (Bcat.dst.at(b2) != Bcat.src.at(b)) continue;
                Value lhs = F.lift.at(vpair(A, Bcat.comp.at(vpair(b, b2))));
                Value rhs = Acat.comp.at(vpair(a, F.lift.at(vpair(A2, b2))));
                if (lhs != rhs) comp_ok = false;
            }
        }
    if (!unit_ok) rep.fail("unit law");
    if (!comp_ok) rep.fail("composition law");
    return rep;
}

Opcofunctor identity_opcofunctor(const FinCat& c) {
    Opcofunctor F;
    for (auto& x : c.objects) F.ob[x] = x;
    for (auto& A : c.objects)
        for (auto& b : c.arrows)
            if (c.dst.at(b) == A) F.lift[vpair(A, b)] = b;
    return F;
}

Opcofunctor compose_opcofunctors(const Opcofunctor& G, const Opcofunctor& F) {
    Opcofunctor H;
    for (auto& [x, fx] : F.ob) H.ob[x] = G.ob.at(fx);
    for (auto& [fa_c, b] : G.lift) {
        const Value& FA = fa_c.list()[0];
        const Value& carr = fa_c.list()[1];
        for (auto& [x, fx] : F.ob)
            if (fx == FA) H.lift[vpair(x, carr)] = F.lift.at(vpair(x, b));
    }
    return H;
}

Opcofunctor coretromorphism_to_opcofunctor(const SpanInstance& S, const Coretromorphism& r) {
    Opcofunctor F;
    F.ob = map_of(r.f.pay);
    const Cell& carrier = r.theta.under.cell;
    for (auto& p : SpanInstance::apex(carrier.left)) {
        // p = [b, A] with dst(b) = F(A); image = [src(a), a]
        Value img = SpanInstance::cell_apply(carrier, p);
        F.lift[vpair(p.list()[1], p.list()[0])] = img.list()[1];
    }
    return F;
}

Coretromorphism opcofunctor_to_coretromorphism(const SpanInstance& S, const FinCat& Acat,
                                               const FinCat& Bcat, const Opcofunctor& F) {
    VMonad mA = span_monad_from_category(S, Acat);
    VMonad mB = span_monad_from_category(S, Bcat);
    HArrow f = SpanInstance::fn(mA.obj, mB.obj, F.ob);
    VArrow fc = S.conjoint(f);
    VArrow dom = S.vcomp(fc, mB.t);   // F^* ∘ B1
    VArrow cod = S.vcomp(mA.t, fc);   // A1 ∘ F^*
    VMap m;
    for (auto& p : SpanInstance::apex(dom)) {
        Value a = F.lift.at(vpair(p.list()[1], p.list()[0]));
        m[p] = vpair(Acat.src.at(a), a);
    }
    Cell carrier = S.cell({S.hid(mB.obj), dom, cod, S.hid(mA.obj)}, m);
    return {f, make_coretrocell(S, f, mA.t, mB.t, f, carrier)};
}

// ---------------------------------------------------------------------------
// Kleisli objects.

namespace {

// canonical competitor objects {0..k-1}
Value canonical_obj(int k) {
    VSet s;
    for (int i = 0; i < k; ++i) s.push_back(Value(i));
    return SpanInstance::obj(s);
}

// the two Kleisli equations for a candidate/competitor (x: A0 -> B, xi)
bool kleisli_equations(const SpanInstance& S, const VMonad& m, const HArrow& x,
                       const Cell& xi, std::string* why = nullptr) {
    if (S.hcompose(m.unit, xi) != S.cell_hid(x)) {
        if (why) *why = "equation (1)";
        return false;
    }
    Value B = x.dst;
    TCell lhs = tcell(S.hcompose(m.mult, xi),
                      VExpr::C(VExpr::L(m.t), VExpr::L(m.t)), VExpr::I(B));
    TCell rhs = tcell(S.vcompose(xi, xi), VExpr::C(VExpr::L(m.t), VExpr::L(m.t)),
                      VExpr::C(VExpr::I(B), VExpr::I(B)));
    if (!tequal(S, lhs, rhs)) {
        if (why) *why = "equation (2)";
        return false;
    }
    return true;
}

}  // namespace

KleisliCandidate kleisli_construct_span(const SpanInstance& S, const VMonad& m) {
    FinCat c = category_from_span_monad(S, m);
    // connected components of the underlying graph, labelled by least element
    VMap rep;
    for (auto& x : c.objects) rep[x] = x;
    std::function<Value(const Value&)> find = [&](const Value& x) {
        Value r = x;
        while (rep.at(r) != r) r = rep.at(r);
        return r;
    };
    for (auto& a : c.arrows) {
        Value rs = find(c.src.at(a)), rd = find(c.dst.at(a));
        if (rs != rd) rep[std::max(rs, rd)] = std::min(rs, rd);
    }
    VSet comps;
    VMap quot;
    for (auto& x : c.objects) {
        Value r = find(x);
        quot[x] = r;
        if (!contains(comps, r)) comps.push_back(r);
    }
    Value K = SpanInstance::obj(comps);
    HArrow f = SpanInstance::fn(m.obj, K, quot);
    VMap pm;
    for (auto& a : c.arrows) pm[a] = quot.at(c.src.at(a));
    Cell pi = S.cell({f, m.t, S.vid(K), f}, pm);
    return {K, f, pi};
}

UnivReport is_kleisli(const SpanInstance& S, const VMonad& m, const KleisliCandidate& k,
                      int bound) {
    UnivReport rep;
    rep.bound = bound;
    if (k.f.src != m.obj || k.f.dst != k.obj || k.pi.top != k.f || k.pi.bottom != k.f ||
        k.pi.left != m.t || k.pi.right != S.vid(k.obj)) {
        rep.ok = false;
        rep.failed = "shape";
        return rep;
    }
    std::string why;
    if (!kleisli_equations(S, m, k.f, k.pi, &why)) {
        rep.ok = false;
        rep.failed = why;
        return rep;
    }
    const VSet& A0 = m.obj.list();
    const VSet& K = k.obj.list();
    for (int n = 1; n <= bound; ++n) {
        Value B = canonical_obj(n);
        for (auto& xm : all_functions(A0, B.list())) {
            HArrow x = SpanInstance::fn(m.obj, B, xm);
            for (auto& xi : S.enumerate_cells({x, m.t, S.vid(B), x})) {
                if (!kleisli_equations(S, m, x, xi)) continue;
                ++rep.competitors;
                int found = 0;
                for (auto& hm : all_functions(K, B.list())) {
                    HArrow h = SpanInstance::fn(k.obj, B, hm);
                    if (S.hcomp(h, k.f) != x) continue;
                    if (S.hcompose(k.pi, S.cell_hid(h)) != xi) continue;
                    ++found;
                }
                if (found != 1) {
                    rep.ok = false;
                    rep.failed = "universality: " + std::to_string(found) +
                                 " factorizations for a competitor over " + show(B);
                    return rep;
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Eilenberg-Moore objects.

namespace {

// the unique retrocell over (h, id_src, id_dst, h), giving the canonical
// retromorphism between identity monads carried by h
Retrocell discrete_retro(const SpanInstance& S, const HArrow& h) {
    auto rs = enumerate_retrocells(S, {h, S.vid(h.src), S.vid(h.dst), h});
    if (rs.size() != 1) throw DcatError("discrete retrocell not unique");
    return rs.front();
}

}  // namespace

UnivReport em_check(const SpanInstance& S, const VMonad& m, const EMCandidate& c,
                    int bound) {
    UnivReport rep;
    rep.bound = bound;
    if (c.u.src != c.obj || c.u.dst != m.obj) {
        rep.ok = false;
        rep.failed = "shape";
        return rep;
    }
    VMonad idm = identity_vmonad(S, c.obj);
    CheckReport laws = retromorphism_check(S, idm, m, {c.u, c.theta});
    if (!laws.ok) {
        rep.ok = false;
        rep.failed = laws.first();
        return rep;
    }
    const VSet& X = c.obj.list();
    for (int n = 1; n <= bound; ++n) {
        Value X2 = canonical_obj(n);
        VMonad idm2 = identity_vmonad(S, X2);
        for (auto& um : all_functions(X2.list(), m.obj.list())) {
            HArrow u2 = SpanInstance::fn(X2, m.obj, um);
            for (auto& th2 : enumerate_retrocells(S, {u2, S.vid(X2), m.t, u2})) {
                if (!retromorphism_check(S, idm2, m, {u2, th2}).ok) continue;
                ++rep.competitors;
                int found = 0;
                for (auto& hm : all_functions(X2.list(), X)) {
                    HArrow h = SpanInstance::fn(X2, c.obj, hm);
                    if (S.hcomp(c.u, h) != u2) continue;
                    if (retro_hcompose(S, discrete_retro(S, h), c.theta) != th2) continue;
                    ++found;
                }
                if (found != 1) {
                    rep.ok = false;
                    rep.failed = "universality: " + std::to_string(found) +
                                 " factorizations for a retromorphism from " + show(X2);
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::optional<EMCandidate> em_search_span(const SpanInstance& S, const VMonad& m,
                                          int bound) {
    for (int n = 1; n <= bound; ++n) {
        Value X = canonical_obj(n);
        VMonad idm = identity_vmonad(S, X);
        for (auto& um : all_functions(X.list(), m.obj.list())) {
            HArrow u = SpanInstance::fn(X, m.obj, um);
            for (auto& th : enumerate_retrocells(S, {u, S.vid(X), m.t, u})) {
                if (!retromorphism_check(S, idm, m, {u, th}).ok) continue;
                EMCandidate c{X, u, th};
                if (em_check(S, m, c, bound).ok) return c;
            }
        }
    }
    return std::nullopt;
}

}  // namespace rk
