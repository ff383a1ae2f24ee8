#include "retrokit/laws.hpp"

#include "retrokit/companions.hpp"
#include "retrokit/mat.hpp"
#include "retrokit/prof.hpp"
#include "retrokit/rel.hpp"
#include "retrokit/span.hpp"

namespace rk {

std::string LawReport::summary() const {
    if (ok()) return "OK (" + std::to_string(checks) + " checks)";
    std::string s = "FAILED " + std::to_string(failures.size()) + "/" +
                    std::to_string(checks) + " checks:";
    for (size_t i = 0; i < failures.size() && i < 5; ++i) s += "\n  " + failures[i];
    if (failures.size() > 5) s += "\n  ...";
    return s;
}

void LawReport::merge(const LawReport& o) {
    checks += o.checks;
    for (auto& f : o.failures) failures.push_back(f);
}

static std::vector<HArrow> with_hids(const Instance& A, const Universe& U) {
    std::vector<HArrow> hs = U.harrows;
    for (auto& o : U.objects) hs.push_back(A.hid(o));
    return hs;
}

static std::vector<Cell> sample_cells(const Instance& A, const Boundary& b, size_t max) {
    std::vector<Cell> cs = A.enumerate_cells(b);
    if (cs.size() > max) cs.resize(max);
    return cs;
}

LawReport check_double_category(const Instance& A, const Universe& U, size_t max_cells) {
    LawReport r;
    std::vector<HArrow> hs = with_hids(A, U);

    // horizontal category
    for (auto& f : hs) {
        r.expect(A.hcomp(f, A.hid(f.src)) == f, "hcomp right unit fails for " + show_h(f));
        r.expect(A.hcomp(A.hid(f.dst), f) == f, "hcomp left unit fails for " + show_h(f));
    }
    for (auto& f : hs)
        for (auto& g : hs) {
            if (f.dst != g.src) continue;
            for (auto& h : hs) {
                if (g.dst != h.src) continue;
                r.expect(A.hcomp(h, A.hcomp(g, f)) == A.hcomp(A.hcomp(h, g), f),
                         "hcomp associativity fails");
            }
        }

    // vertical units/associativity (exact when strict, via coherence otherwise)
    for (auto& v : U.varrows) {
        if (A.strict()) {
            r.expect(A.vcomp(v, A.vid(v.src)) == v, "strict vcomp right unit fails");
            r.expect(A.vcomp(A.vid(v.dst), v) == v, "strict vcomp left unit fails");
            r.expect(A.lunitor(v) == A.cell_vid(v), "strict lunitor not identity");
            r.expect(A.runitor(v) == A.cell_vid(v), "strict runitor not identity");
        }
        // unitors are isos
        r.expect(A.hcompose(A.lunitor(v), A.lunitor_inv(v)) ==
                     A.cell_vid(A.vcomp(A.vid(v.dst), v)),
                 "lunitor;lunitor_inv != id for " + show_v(v));
        r.expect(A.hcompose(A.lunitor_inv(v), A.lunitor(v)) == A.cell_vid(v),
                 "lunitor_inv;lunitor != id");
        r.expect(A.hcompose(A.runitor(v), A.runitor_inv(v)) ==
                     A.cell_vid(A.vcomp(v, A.vid(v.src))),
                 "runitor;runitor_inv != id");
        r.expect(A.hcompose(A.runitor_inv(v), A.runitor(v)) == A.cell_vid(v),
                 "runitor_inv;runitor != id");
    }
    for (auto& u : U.varrows)
        for (auto& v : U.varrows) {
            if (u.dst != v.src) continue;
            // triangle
            Cell tri1 = A.hcompose(A.associator(u, A.vid(u.dst), v),
                                   A.vcompose(A.lunitor(u), A.cell_vid(v)));
            Cell tri2 = A.vcompose(A.cell_vid(u), A.runitor(v));
            r.expect(tri1 == tri2, "triangle coherence fails for " + show_v(u));
            for (auto& w : U.varrows) {
                if (v.dst != w.src) continue;
                Cell a = A.associator(u, v, w), ai = A.associator_inv(u, v, w);
                r.expect(A.hcompose(a, ai) == A.cell_vid(A.vcomp(A.vcomp(w, v), u)),
                         "associator;inv != id");
                r.expect(A.hcompose(ai, a) == A.cell_vid(A.vcomp(w, A.vcomp(v, u))),
                         "inv;associator != id");
                if (A.strict())
                    r.expect(A.vcomp(A.vcomp(w, v), u) == A.vcomp(w, A.vcomp(v, u)) &&
                                 a == A.cell_vid(A.vcomp(w, A.vcomp(v, u))),
                             "strict associativity fails");
                for (auto& x : U.varrows) {
                    if (w.dst != x.src) continue;
                    // pentagon
                    Cell p1 = A.hcompose(
                        A.hcompose(A.vcompose(A.cell_vid(u), A.associator(v, w, x)),
                                   A.associator(u, A.vcomp(w, v), x)),
                        A.vcompose(A.associator(u, v, w), A.cell_vid(x)));
                    Cell p2 = A.hcompose(A.associator(u, v, A.vcomp(x, w)),
                                         A.associator(A.vcomp(v, u), w, x));
                    r.expect(p1 == p2, "pentagon coherence fails");
                }
            }
        }

    // harvest cells over all small boundaries
    std::vector<Cell> cells;
    for (auto& v : U.varrows)
        for (auto& w : U.varrows)
            for (auto& f : hs) {
                if (f.src != v.src || f.dst != w.src) continue;
                for (auto& g : hs) {
                    if (g.src != v.dst || g.dst != w.dst) continue;
                    for (auto& c : sample_cells(A, {f, v, w, g}, max_cells))
                        cells.push_back(c);
                }
            }

    for (auto& c : cells) {
        r.expect(A.hcompose(A.cell_vid(c.left), c) == c, "hcompose left unit fails");
        r.expect(A.hcompose(c, A.cell_vid(c.right)) == c, "hcompose right unit fails");
        TCell t = tcell(A, c);
        r.expect(tequal(A, tvcompose(A, tcell(A, A.cell_hid(c.top)), t), t),
                 "vcompose top unit fails (up to coherence)");
        r.expect(tequal(A, tvcompose(A, t, tcell(A, A.cell_hid(c.bottom))), t),
                 "vcompose bottom unit fails (up to coherence)");
    }

    // associativity & interchange on harvested grids
    size_t quota = 0;
    for (auto& a : cells) {
        for (auto& b : cells) {
            if (a.right != b.left || a.top.dst != b.top.src) continue;
            for (auto& c : cells) {
                if (b.right != c.left || b.top.dst != c.top.src) continue;
                r.expect(A.hcompose(A.hcompose(a, b), c) == A.hcompose(a, A.hcompose(b, c)),
                         "hcompose associativity fails");
                if (++quota > 400) break;
            }
            if (quota > 400) break;
        }
        if (quota > 400) break;
    }
    quota = 0;
    for (auto& a : cells) {
        for (auto& b : cells) {
            if (a.bottom != b.top) continue;
            for (auto& c : cells) {
                if (b.bottom != c.top) continue;
                TCell t1 = tvcompose(A, tvcompose(A, tcell(A, a), tcell(A, b)), tcell(A, c));
                TCell t2 = tvcompose(A, tcell(A, a), tvcompose(A, tcell(A, b), tcell(A, c)));
                r.expect(tequal(A, t1, t2), "vcompose associativity fails (up to coherence)");
                if (++quota > 200) break;
            }
            if (quota > 200) break;
        }
        if (quota > 200) break;
    }
    quota = 0;
    for (auto& a : cells) {
        for (auto& b : cells) {
            if (a.right != b.left || a.top.dst != b.top.src) continue;
            for (auto& c : cells) {
                if (c.top != a.bottom) continue;
                for (auto& d : cells) {
                    if (d.top != b.bottom || c.right != d.left) continue;
                    Cell lhs = A.vcompose(A.hcompose(a, b), A.hcompose(c, d));
                    Cell rhs = A.hcompose(A.vcompose(a, c), A.vcompose(b, d));
                    r.expect(lhs == rhs, "interchange fails");
                    if (++quota > 400) break;
                }
                if (quota > 400) break;
            }
            if (quota > 400) break;
        }
        if (quota > 400) break;
    }
    return r;
}

LawReport check_companions(const Instance& A, const Universe& U) {
    LawReport r;
    std::vector<HArrow> hs = with_hids(A, U);
    for (auto& f : hs) {
        VArrow fs = A.companion(f);
        r.expect(fs.src == f.src && fs.dst == f.dst, "companion endpoints wrong");
        Cell ps = A.psi(f), ch = A.chi(f);
        r.expect(ps.top == A.hid(f.src) && ps.left == A.vid(f.src) && ps.right == fs &&
                     ps.bottom == f,
                 "psi boundary wrong for " + show_h(f));
        r.expect(ch.top == f && ch.left == fs && ch.right == A.vid(f.dst) &&
                     ch.bottom == A.hid(f.dst),
                 "chi boundary wrong for " + show_h(f));
        r.expect(A.hcompose(ps, ch) == A.cell_hid(f), "psi;chi != id_f for " + show_h(f));
        r.expect(tequal(A, tvcompose(A, tcell(A, ps), tcell(A, ch)),
                        tcell(A.cell_vid(fs), VExpr::L(fs), VExpr::L(fs))),
                 "psi over chi != 1_{f_*} for " + show_h(f));
    }
    for (auto& o : U.objects) {
        r.expect(A.companion(A.hid(o)) == A.vid(o), "companion of identity is not id");
        r.expect(A.psi(A.hid(o)) == A.cell_vid(A.vid(o)), "psi at identity not trivial");
        r.expect(A.chi(A.hid(o)) == A.cell_vid(A.vid(o)), "chi at identity not trivial");
    }
    for (auto& f : hs)
        for (auto& h : hs) {
            if (f.dst != h.src) continue;
            TCell to = iso_comp_to(A, h, f), from = iso_comp_from(A, h, f);
            VArrow hf = A.companion(A.hcomp(h, f));
            r.expect(tequal(A, thcompose(A, to, from),
                            tcell(A.cell_vid(hf), VExpr::L(hf), VExpr::L(hf))),
                     "(hf)_* => h_*f_* => (hf)_* is not the identity");
            VArrow c2 = A.vcomp(A.companion(h), A.companion(f));
            r.expect(tequal(A, thcompose(A, from, to),
                            tcell(A.cell_vid(c2), VExpr::C(VExpr::L(A.companion(h)),
                                                           VExpr::L(A.companion(f))),
                                  VExpr::C(VExpr::L(A.companion(h)),
                                           VExpr::L(A.companion(f))))),
                     "h_*f_* => (hf)_* => h_*f_* is not the identity");
        }
    return r;
}

LawReport check_conjoints(const Instance& A, const Universe& U) {
    LawReport r;
    std::vector<HArrow> hs = with_hids(A, U);
    for (auto& f : hs) {
        VArrow fc = A.conjoint(f);
        r.expect(fc.src == f.dst && fc.dst == f.src, "conjoint endpoints wrong");
        Cell al = A.conj_alpha(f), be = A.conj_beta(f);
        r.expect(al.top == f && al.left == A.vid(f.src) && al.right == fc &&
                     al.bottom == A.hid(f.src),
                 "alpha boundary wrong for " + show_h(f));
        r.expect(be.top == A.hid(f.dst) && be.left == fc && be.right == A.vid(f.dst) &&
                     be.bottom == f,
                 "beta boundary wrong for " + show_h(f));
        r.expect(A.hcompose(al, be) == A.cell_hid(f), "alpha;beta != id_f");
        r.expect(tequal(A, tvcompose(A, tcell(A, be), tcell(A, al)),
                        tcell(A.cell_vid(fc), VExpr::L(fc), VExpr::L(fc))),
                 "beta over alpha != 1_{f^*} for " + show_h(f));
    }
    for (auto& o : U.objects) {
        r.expect(A.conjoint(A.hid(o)) == A.vid(o), "conjoint of identity is not id");
        r.expect(A.conj_alpha(A.hid(o)) == A.cell_vid(A.vid(o)), "alpha at identity not trivial");
        r.expect(A.conj_beta(A.hid(o)) == A.cell_vid(A.vid(o)), "beta at identity not trivial");
    }
    for (auto& f : hs)
        for (auto& h : hs) {
            if (f.dst != h.src) continue;
            TCell to = iso_conj_to(A, h, f), from = iso_conj_from(A, h, f);
            VArrow hfc = A.conjoint(A.hcomp(h, f));
            r.expect(tequal(A, thcompose(A, to, from),
                            tcell(A.cell_vid(hfc), VExpr::L(hfc), VExpr::L(hfc))),
                     "(hf)^* => f^*h^* => (hf)^* is not the identity");
        }
    return r;
}

// ------------------------------------------------------------- universes

Universe rel_universe() {
    RelInstance R;
    Value A = RelInstance::obj({Value("x"), Value("y")});
    Value B = RelInstance::obj({Value("u"), Value("v")});
    HArrow f = RelInstance::fn(A, B, {{Value("x"), Value("u")}, {Value("y"), Value("v")}});
    HArrow g = RelInstance::fn(B, A, {{Value("u"), Value("x")}, {Value("v"), Value("x")}});
    VArrow r1 = RelInstance::rel(A, A, {{Value("x"), Value("y")}, {Value("y"), Value("y")}});
    VArrow r2 = RelInstance::rel(A, B, {{Value("x"), Value("u")}});
    VArrow r3 = RelInstance::rel(B, B, {{Value("u"), Value("u")},
                                        {Value("u"), Value("v")},
                                        {Value("v"), Value("u")},
                                        {Value("v"), Value("v")}});
    VArrow r4 = RelInstance::rel(B, A, {{Value("u"), Value("x")}, {Value("v"), Value("y")}});
    return {{A, B}, {f, g}, {r1, r2, r3, r4}};
}

Universe span_universe() {
    SpanInstance S;
    Value A = SpanInstance::obj({Value("a0"), Value("a1")});
    Value B = SpanInstance::obj({Value("b0"), Value("b1")});
    HArrow f = SpanInstance::fn(A, B, {{Value("a0"), Value("b0")}, {Value("a1"), Value("b1")}});
    HArrow g = SpanInstance::fn(B, A, {{Value("b0"), Value("a1")}, {Value("b1"), Value("a1")}});
    VArrow s1 = SpanInstance::span(A, A, {Value("s0"), Value("s1")},
                                   {{Value("s0"), Value("a0")}, {Value("s1"), Value("a1")}},
                                   {{Value("s0"), Value("a1")}, {Value("s1"), Value("a1")}});
    VArrow s2 = SpanInstance::span(A, B, {Value("t0")}, {{Value("t0"), Value("a0")}},
                                   {{Value("t0"), Value("b1")}});
    VArrow s3 = SpanInstance::span(B, B, {Value("u0"), Value("u1")},
                                   {{Value("u0"), Value("b0")}, {Value("u1"), Value("b0")}},
                                   {{Value("u0"), Value("b0")}, {Value("u1"), Value("b1")}});
    VArrow s4 = SpanInstance::span(B, A, {Value("w0"), Value("w1")},
                                   {{Value("w0"), Value("b1")}, {Value("w1"), Value("b1")}},
                                   {{Value("w0"), Value("a0")}, {Value("w1"), Value("a1")}});
    return {{A, B}, {f, g}, {s1, s2, s3, s4}};
}

Universe mat_universe() {
    MatInstance M(2);
    Value A = MatInstance::obj({Value(0), Value(1)});
    Value B = MatInstance::obj({Value(0)});
    HArrow f = MatInstance::fn(A, B, {{Value(0), Value(0)}, {Value(1), Value(0)}});
    HArrow g = MatInstance::fn(B, A, {{Value(0), Value(1)}});
    VArrow v1 = MatInstance::matrix("v1", A, A,
                                    {{{Value(0), Value(0)}, 1},
                                     {{Value(0), Value(1)}, 1},
                                     {{Value(1), Value(1)}, 1}});
    VArrow v2 = MatInstance::matrix("v2", A, B, {{{Value(0), Value(0)}, 1},
                                                 {{Value(1), Value(0)}, 1}});
    VArrow v3 = MatInstance::matrix("v3", B, B, {{{Value(0), Value(0)}, 2}});
    VArrow v4 = MatInstance::matrix("v4", B, A, {{{Value(0), Value(0)}, 1},
                                                 {{Value(0), Value(1)}, 1}});
    return {{A, B}, {f, g}, {v1, v2, v3, v4}};
}

Universe prof_universe() {
    ProfInstance P;
    FinCat C1 = poset_cat({Value(0), Value(1)}, {{Value(0), Value(1)}});
    Value e("e"), s("s"), star("*");
    FinCat C2 = monoid_cat(star, {e, s}, e,
                           {{{e, e}, e}, {{e, s}, s}, {{s, e}, s}, {{s, s}, e}});
    Value o1 = C1.encode(), o2 = C2.encode();
    // constant functor at 1
    VMap om{{Value(0), Value(1)}, {Value(1), Value(1)}};
    VMap am;
    for (auto& a : C1.arrows) am[a.name] = C1.id(Value(1));
    HArrow F = ProfInstance::functor(C1, C1, om, am);
    // functor C1 -> C2 sending the generating arrow to s
    VMap om2{{Value(0), star}, {Value(1), star}};
    VMap am2{{C1.id(Value(0)), e}, {C1.id(Value(1)), e}, {vpair(Value(0), Value(1)), s}};
    HArrow K = ProfInstance::functor(C1, C2, om2, am2);

    // P1 : C1 -|-> C2 with a free-ish Z2 action
    Value p("p"), q("q"), rr("r"), tt("t");
    Value a01 = vpair(Value(0), Value(1));
    std::map<std::pair<Value, Value>, VSet> els{{{Value(0), star}, {p, q}},
                                                {{Value(1), star}, {rr, tt}}};
    std::map<std::array<Value, 4>, Value> lact, ract;
    for (auto& [k, es] : els)
        for (auto& el : es) lact[{k.first, k.second, el, C1.id(k.first)}] = el;
    lact[{Value(1), star, rr, a01}] = p;
    lact[{Value(1), star, tt, a01}] = q;
    for (auto& [k, es] : els)
        for (auto& el : es) ract[{k.first, k.second, el, e}] = el;
    ract[{Value(0), star, p, s}] = q;
    ract[{Value(0), star, q, s}] = p;
    ract[{Value(1), star, rr, s}] = tt;
    ract[{Value(1), star, tt, s}] = rr;
    VArrow P1 = ProfInstance::prof(C1, C2, els, lact, ract);

    // Q1 : C2 -|-> C1 with trivial Z2 action
    Value m("m"), n("n");
    std::map<std::pair<Value, Value>, VSet> els2{{{star, Value(0)}, {m}},
                                                 {{star, Value(1)}, {n}}};
    std::map<std::array<Value, 4>, Value> lact2, ract2;
    lact2[{star, Value(0), m, e}] = m;
    lact2[{star, Value(0), m, s}] = m;
    lact2[{star, Value(1), n, e}] = n;
    lact2[{star, Value(1), n, s}] = n;
    ract2[{star, Value(0), m, C1.id(Value(0))}] = m;
    ract2[{star, Value(0), m, a01}] = n;
    ract2[{star, Value(1), n, C1.id(Value(1))}] = n;
    VArrow Q1 = ProfInstance::prof(C2, C1, els2, lact2, ract2);

    return {{o1, o2}, {F, K}, {P.vid(o1), P1, Q1}};
}

}  // namespace rk
