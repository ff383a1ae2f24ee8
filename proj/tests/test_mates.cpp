#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "retrokit/laws.hpp"
#include "retrokit/mat.hpp"
#include "retrokit/mates.hpp"
#include "retrokit/rel.hpp"
#include "retrokit/span.hpp"

using namespace rk;

namespace {

TCell tid(const Instance& A, const VArrow& u) {
    return tcell(A.cell_vid(u), VExpr::L(u), VExpr::L(u));
}

// h ⊣ f for mutually inverse functions; units and counits are the identity
// rows, which typecheck because function composition is strict everywhere
HAdjunction inverse_hadj(const Instance& A, const HArrow& h, const HArrow& f) {
    return make_hadjunction(A, h, f, A.cell_hid(A.hid(f.src)), A.cell_hid(A.hid(f.dst)));
}

// p^* ⊣ p_* for a bijection p with inverse q: transport q ⊣ p to p^* ⊣ q^*
// and replace the right adjoint along the canonical iso q^* => p_*
VAdjunction conj_comp_adj(const Instance& A, const HArrow& p, const HArrow& q) {
    VAdjunction base = adjunction_transport_conj(A, inverse_hadj(A, q, p));
    auto iso = adjunction_iso(A, inverse_hadj(A, p, q));
    return vadj_replace_right(A, base, iso.first, iso.second, A.companion(p));
}

std::vector<HArrow> all_endofunctions(const Instance&, const Value& X,
                                      const VSet& elems,
                                      std::function<HArrow(const Value&, const Value&, const VMap&)> fn) {
    std::vector<HArrow> out;
    for_each_function(elems, elems, [&](const VMap& m) {
        out.push_back(fn(X, X, m));
        return true;
    });
    return out;
}

bool is_bijection(const HArrow& f, const VSet& elems) {
    VSet hit;
    for (auto& x : elems) {
        Value y = apply(f.pay, x);
        if (contains(hit, y)) return false;
        hit.push_back(y);
    }
    return true;
}

HArrow inverse_of(const Instance&, const HArrow& f,
                  std::function<HArrow(const Value&, const Value&, const VMap&)> fn) {
    VMap m;
    for (auto& e : f.pay.list()) m[e.list()[1]] = e.list()[0];
    return fn(f.dst, f.src, m);
}

}  // namespace

TEST_CASE("adjunction constructors validate; bad data is rejected") {
    RelInstance R;
    Value X = RelInstance::obj({Value(0), Value(1)});
    CHECK_NOTHROW(trivial_hadjunction(R, X));
    CHECK_NOTHROW(trivial_vadjunction(R, X));
    HArrow sw = RelInstance::fn(X, X, {{Value(0), Value(1)}, {Value(1), Value(0)}});
    HAdjunction a = inverse_hadj(R, sw, sw);
    CHECK(a.left == sw);
    // wrong counit boundary
    CHECK_THROWS_AS(make_hadjunction(R, sw, sw, R.cell_hid(sw), a.unit), BoundaryError);
    // wrong opposition
    HArrow c0 = RelInstance::fn(X, X, {{Value(0), Value(0)}, {Value(1), Value(0)}});
    CHECK_THROWS_AS(make_hadjunction(R, c0, sw, a.counit, a.unit), BoundaryError);

    // a genuine triangle failure: over a one-point set the two-element span D
    // is not left adjoint to itself, although unit and counit candidates exist
    SpanInstance S;
    Value P = SpanInstance::obj({Value(0)});
    VMap zero{{Value("a"), Value(0)}, {Value("b"), Value(0)}};
    VArrow D = SpanInstance::span(P, P, {Value("a"), Value("b")}, zero, zero);
    VArrow DD = S.vcomp(D, D);
    auto counits = S.enumerate_cells({S.hid(P), DD, S.vid(P), S.hid(P)});
    auto units = S.enumerate_cells({S.hid(P), S.vid(P), DD, S.hid(P)});
    CHECK(!counits.empty());
    CHECK(units.size() > 1);
    VExpr dd = VExpr::C(VExpr::L(D), VExpr::L(D));
    for (auto& cu : counits)
        for (auto& un : units)
            CHECK_THROWS_AS(make_vadjunction(S, D, D, tcell(cu, dd, VExpr::I(P)),
                                             tcell(un, VExpr::I(P), dd)),
                            BoundaryError);

    // canonical companion-conjoint adjunctions exist everywhere
    SpanInstance Sp;
    for (auto& f : rel_universe().harrows) CHECK_NOTHROW(canonical_vadjunction(R, f));
    for (auto& f : span_universe().harrows) CHECK_NOTHROW(canonical_vadjunction(Sp, f));
}

TEST_CASE("the twelve forms of a horizontal adjunction") {
    auto forms_suite = [](const Instance& A, const HArrow& p, const HArrow& q) {
        HAdjunction hadj = inverse_hadj(A, q, p);  // q ⊣ p
        // α₃/β₃ are a valid unit/counit for p_* ⊣ q_* (validated on build)
        VAdjunction t = adjunction_transport(A, hadj);
        CHECK(t.left == A.companion(p));
        CHECK(t.right == A.companion(q));
        // α₆/β₆ for p^* ⊣ q^*
        VAdjunction tc = adjunction_transport_conj(A, hadj);
        CHECK(tc.left == A.conjoint(p));
        CHECK(tc.right == A.conjoint(q));
        // α₅ and β₅ are mutually inverse globular cells p^* <=> q_*
        auto [a5, b5] = adjunction_iso(A, hadj);
        CHECK(tequal(A, thcompose(A, a5, b5), tid(A, A.conjoint(p))));
        CHECK(tequal(A, thcompose(A, b5, a5), tid(A, A.companion(q))));
        // the middle forms share the carrier of the outer ones
        AdjForms F = adjunction_forms(A, hadj);
        CHECK(tnormalize(A, F.a2).top == p);
        CHECK(tnormalize(A, F.b2).bottom == p);
    };
    RelInstance R;
    Value XR = RelInstance::obj({Value(0), Value(1)});
    forms_suite(R, RelInstance::fn(XR, XR, {{Value(0), Value(1)}, {Value(1), Value(0)}}),
                RelInstance::fn(XR, XR, {{Value(0), Value(1)}, {Value(1), Value(0)}}));
    forms_suite(R, R.hid(XR), R.hid(XR));
    SpanInstance S;
    Value XS = SpanInstance::obj({Value(0), Value(1)});
    HArrow sw = SpanInstance::fn(XS, XS, {{Value(0), Value(1)}, {Value(1), Value(0)}});
    forms_suite(S, sw, sw);
    forms_suite(S, S.hid(XS), S.hid(XS));
}

namespace {

// exhaustive bijectivity of mate_vertical over frames (f, pv^*, pw^*, g)
void vertical_suite(const Instance& A, const std::vector<HArrow>& bijs,
                    const std::vector<HArrow>& fns) {
    int frames = 0;
    for (auto& pv : bijs)
        for (auto& pw : bijs) {
            VAdjunction xv = canonical_vadjunction(A, pv);  // pv_* ⊣ pv^*
            VAdjunction yw = canonical_vadjunction(A, pw);
            for (auto& f : fns)
                for (auto& g : fns) {
                    auto cells = A.enumerate_cells({f, xv.right, yw.right, g});
                    auto retros = enumerate_retrocells(A, {g, xv.left, yw.left, f});
                    CHECK(cells.size() == retros.size());
                    ++frames;
                    for (auto& al : cells) {
                        Retrocell b = mate_vertical(A, al, xv, yw);
                        CHECK(b.f == g);
                        CHECK(b.g == f);
                        CHECK(mate_vertical_inv(A, b, xv, yw) == al);
                    }
                    for (auto& r : retros) {
                        Cell al = mate_vertical_inv(A, r, xv, yw);
                        CHECK(std::find(cells.begin(), cells.end(), al) != cells.end());
                        CHECK(mate_vertical(A, al, xv, yw) == r);
                    }
                }
        }
    CHECK(frames > 0);
}

void horizontal_suite(const Instance& A, const std::vector<HArrow>& bijs,
                      const std::vector<VArrow>& cols,
                      std::function<HArrow(const Value&, const Value&, const VMap&)> fn) {
    int frames = 0;
    for (auto& f : bijs)
        for (auto& g : bijs) {
            HArrow h = inverse_of(A, f, fn), k = inverse_of(A, g, fn);
            HAdjunction hf = inverse_hadj(A, h, f), kg = inverse_hadj(A, k, g);
            for (auto& v : cols)
                for (auto& w : cols) {
                    auto cells = A.enumerate_cells({f, v, w, g});
                    auto retros = enumerate_retrocells(A, {h, w, v, k});
                    CHECK(cells.size() == retros.size());
                    ++frames;
                    for (auto& al : cells) {
                        Retrocell gm = mate_horizontal(A, al, hf, kg);
                        CHECK(gm.f == h);
                        CHECK(gm.g == k);
                        CHECK(mate_horizontal_inv(A, gm, hf, kg) == al);
                    }
                    for (auto& r : retros) {
                        Cell al = mate_horizontal_inv(A, r, hf, kg);
                        CHECK(std::find(cells.begin(), cells.end(), al) != cells.end());
                        CHECK(mate_horizontal(A, al, hf, kg) == r);
                    }
                }
        }
    CHECK(frames > 0);
}

}  // namespace

TEST_CASE("mate_vertical is a bijection cells <-> retrocells") {
    RelInstance R;
    Value XR = RelInstance::obj({Value(0), Value(1)});
    auto rfns = all_endofunctions(R, XR, XR.list(), RelInstance::fn);
    std::vector<HArrow> rbijs;
    for (auto& f : rfns)
        if (is_bijection(f, XR.list())) rbijs.push_back(f);
    CHECK(rbijs.size() == 2);
    vertical_suite(R, rbijs, rfns);

    SpanInstance S;
    Value XS = SpanInstance::obj({Value(0), Value(1)});
    auto sfns = all_endofunctions(S, XS, XS.list(), SpanInstance::fn);
    std::vector<HArrow> sbijs;
    for (auto& f : sfns)
        if (is_bijection(f, XS.list())) sbijs.push_back(f);
    vertical_suite(S, sbijs, sfns);

    // identity cells map to identity retrocells under trivial adjunctions
    VAdjunction tv = trivial_vadjunction(S, XS);
    HArrow sw = sbijs[1];
    CHECK(mate_vertical(S, S.cell_hid(sw), tv, tv) == retro_vid(S, sw));
    CHECK(mate_vertical_inv(S, retro_vid(S, sw), tv, tv) == S.cell_hid(sw));
}

TEST_CASE("mate_horizontal is a bijection cells <-> retrocells") {
    RelInstance R;
    Value XR = RelInstance::obj({Value(0), Value(1)});
    auto rfns = all_endofunctions(R, XR, XR.list(), RelInstance::fn);
    std::vector<HArrow> rbijs;
    for (auto& f : rfns)
        if (is_bijection(f, XR.list())) rbijs.push_back(f);
    std::vector<VArrow> rcols = {
        RelInstance::rel(XR, XR, {}),
        RelInstance::rel(XR, XR, {{Value(0), Value(0)}, {Value(1), Value(1)}}),
        RelInstance::rel(XR, XR, {{Value(0), Value(1)}}),
        RelInstance::rel(XR, XR, {{Value(0), Value(0)}, {Value(0), Value(1)},
                                  {Value(1), Value(0)}, {Value(1), Value(1)}}),
    };
    horizontal_suite(R, rbijs, rcols, RelInstance::fn);

    SpanInstance S;
    Value XS = SpanInstance::obj({Value(0), Value(1)});
    auto sfns = all_endofunctions(S, XS, XS.list(), SpanInstance::fn);
    std::vector<HArrow> sbijs;
    for (auto& f : sfns)
        if (is_bijection(f, XS.list())) sbijs.push_back(f);
    std::vector<VArrow> scols = {
        S.vid(XS),
        S.companion(sbijs[1]),
        SpanInstance::span(XS, XS, {Value("a"), Value("b")},
                           {{Value("a"), Value(0)}, {Value("b"), Value(0)}},
                           {{Value("a"), Value(0)}, {Value("b"), Value(1)}}),
    };
    horizontal_suite(S, sbijs, scols, SpanInstance::fn);

    // identity cells map to identity retrocells under trivial adjunctions
    HAdjunction th = trivial_hadjunction(S, XS);
    for (auto& v : scols) {
        CHECK(mate_horizontal(S, S.cell_vid(v), th, th) == retro_hid(S, v));
        CHECK(mate_horizontal_inv(S, retro_hid(S, v), th, th) == S.cell_vid(v));
    }
}

namespace {

template <typename MakeFn>
void corner_suite(std::shared_ptr<const Instance> Ap, const std::vector<HArrow>& bijs,
                  MakeFn fn, size_t cap) {
    const Instance& A = *Ap;
    size_t done = 0;
    for (auto& pv : bijs)
        for (auto& pw : bijs)
            for (auto& f : bijs)
                for (auto& g : bijs) {
                    HArrow h = inverse_of(A, f, fn), k = inverse_of(A, g, fn);
                    HArrow qv = inverse_of(A, pv, fn), qw = inverse_of(A, pw, fn);
                    HAdjunction hf = inverse_hadj(A, h, f), kg = inverse_hadj(A, k, g);
                    HAdjunction fh = inverse_hadj(A, f, h), gk = inverse_hadj(A, g, k);
                    VAdjunction vx = canonical_vadjunction(A, pv);  // pv_* ⊣ pv^*
                    VAdjunction wy = canonical_vadjunction(A, pw);
                    VAdjunction xv = conj_comp_adj(A, pv, qv);      // pv^* ⊣ pv_*
                    VAdjunction yw = conj_comp_adj(A, pw, qw);
                    auto cells = A.enumerate_cells({f, vx.left, wy.left, g});
                    auto targets =
                        A.enumerate_cells({k, wy.right, vx.right, h});
                    CHECK(cells.size() == targets.size());
                    for (auto& al : cells) {
                        if (done >= cap) return;
                        ++done;
                        Cell d1 = mate_corner(Ap, al, hf, kg, vx, wy);
                        Cell d2 = mate_corner_alt(Ap, al, fh, gk, xv, yw);
                        CHECK(d1.top == k);
                        CHECK(d1.bottom == h);
                        CHECK(d1 == d2);
                        CHECK(std::find(targets.begin(), targets.end(), d1) !=
                              targets.end());
                        CHECK(mate_corner_inv(Ap, d1, hf, kg, vx, wy) == al);
                    }
                }
}

}  // namespace

TEST_CASE("corner mates: the two routes agree and roundtrip") {
    auto Rp = std::make_shared<RelInstance>();
    Value XR = RelInstance::obj({Value(0), Value(1)});
    auto rfns = all_endofunctions(*Rp, XR, XR.list(), RelInstance::fn);
    std::vector<HArrow> rbijs;
    for (auto& f : rfns)
        if (is_bijection(f, XR.list())) rbijs.push_back(f);
    corner_suite(Rp, rbijs, RelInstance::fn, 24);

    auto Sp = std::make_shared<SpanInstance>();
    Value XS = SpanInstance::obj({Value(0), Value(1)});
    auto sfns = all_endofunctions(*Sp, XS, XS.list(), SpanInstance::fn);
    std::vector<HArrow> sbijs;
    for (auto& f : sfns)
        if (is_bijection(f, XS.list())) sbijs.push_back(f);
    corner_suite(Sp, sbijs, SpanInstance::fn, 5);
}

namespace {

void comate_suite(const CoInstance& Aco, const std::vector<HArrow>& bijs,
                  const std::vector<HArrow>& fns, const std::vector<VArrow>& cols,
                  std::function<HArrow(const Value&, const Value&, const VMap&)> fn,
                  size_t cap) {
    const Instance& A = Aco.base();
    // vertical comates: frames (f, pv_*, pw_*, g) against coretrocells
    size_t done = 0;
    for (auto& pv : bijs)
        for (auto& pw : bijs) {
            VAdjunction vx = canonical_vadjunction(A, pv);  // pv_* ⊣ pv^*
            VAdjunction wy = canonical_vadjunction(A, pw);
            for (auto& f : fns)
                for (auto& g : fns) {
                    if (done >= cap) break;
                    auto cells = A.enumerate_cells({f, vx.left, wy.left, g});
                    auto cors = enumerate_coretrocells(A, {g, vx.right, wy.right, f});
                    CHECK(cells.size() == cors.size());
                    for (auto& al : cells) {
                        ++done;
                        Coretrocell b = comate_vertical(Aco, al, vx, wy);
                        CHECK(b.f == g);
                        CHECK(b.g == f);
                        CHECK(comate_vertical_inv(Aco, b, vx, wy) == al);
                    }
                    for (auto& r : cors) {
                        Cell al = comate_vertical_inv(Aco, r, vx, wy);
                        CHECK(std::find(cells.begin(), cells.end(), al) != cells.end());
                        CHECK(comate_vertical(Aco, al, vx, wy) == r);
                    }
                }
        }
    CHECK(done > 0);
    // horizontal comates: bijective rows against coretrocells over (h,w,v,k)
    done = 0;
    for (auto& f : bijs)
        for (auto& g : bijs) {
            HArrow h = inverse_of(A, f, fn), k = inverse_of(A, g, fn);
            HAdjunction fh = inverse_hadj(A, f, h), gk = inverse_hadj(A, g, k);
            for (auto& v : cols)
                for (auto& w : cols) {
                    if (done >= cap) break;
                    auto cells = A.enumerate_cells({f, v, w, g});
                    auto cors = enumerate_coretrocells(A, {h, w, v, k});
                    CHECK(cells.size() == cors.size());
                    for (auto& al : cells) {
                        ++done;
                        Coretrocell b = comate_horizontal(Aco, al, fh, gk);
                        CHECK(b.f == h);
                        CHECK(b.g == k);
                        CHECK(comate_horizontal_inv(Aco, b, fh, gk) == al);
                    }
                    for (auto& r : cors) {
                        Cell al = comate_horizontal_inv(Aco, r, fh, gk);
                        CHECK(std::find(cells.begin(), cells.end(), al) != cells.end());
                        CHECK(comate_horizontal(Aco, al, fh, gk) == r);
                    }
                }
        }
    CHECK(done > 0);
}

}  // namespace

TEST_CASE("comates are bijections cells <-> coretrocells") {
    auto Rp = std::make_shared<RelInstance>();
    CoInstance Rc(Rp);
    Value XR = RelInstance::obj({Value(0), Value(1)});
    auto rfns = all_endofunctions(*Rp, XR, XR.list(), RelInstance::fn);
    std::vector<HArrow> rbijs;
    for (auto& f : rfns)
        if (is_bijection(f, XR.list())) rbijs.push_back(f);
    std::vector<VArrow> rcols = {
        RelInstance::rel(XR, XR, {{Value(0), Value(0)}, {Value(1), Value(1)}}),
        RelInstance::rel(XR, XR, {{Value(0), Value(1)}}),
        RelInstance::rel(XR, XR, {{Value(0), Value(0)}, {Value(0), Value(1)},
                                  {Value(1), Value(0)}, {Value(1), Value(1)}}),
    };
    comate_suite(Rc, rbijs, rfns, rcols, RelInstance::fn, 400);

    auto Sp = std::make_shared<SpanInstance>();
    CoInstance Sc(Sp);
    Value XS = SpanInstance::obj({Value(0), Value(1)});
    auto sfns = all_endofunctions(*Sp, XS, XS.list(), SpanInstance::fn);
    std::vector<HArrow> sbijs;
    for (auto& f : sfns)
        if (is_bijection(f, XS.list())) sbijs.push_back(f);
    std::vector<VArrow> scols = {
        Sp->vid(XS),
        Sp->companion(sbijs[1]),
        SpanInstance::span(XS, XS, {Value("a"), Value("b")},
                           {{Value("a"), Value(0)}, {Value("b"), Value(0)}},
                           {{Value("a"), Value(0)}, {Value("b"), Value(1)}}),
    };
    comate_suite(Sc, sbijs, sfns, scols, SpanInstance::fn, 40);
}
