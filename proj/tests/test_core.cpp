#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "retrokit/core.hpp"
#include "retrokit/rel.hpp"
#include "retrokit/span.hpp"
#include "retrokit/value.hpp"

using namespace rk;

TEST_CASE("Value ordering and display") {
    Value a("abc"), b(3), c(ValueList{Value(1), Value("x")});
    CHECK(a < b);  // strings sort before ints (variant index order)
    CHECK(b < c);
    CHECK(show(c) == "[1 x]");
    CHECK(vpair(a, b) == Value(ValueList{Value("abc"), Value(3)}));
    VSet s{b, a, a};
    canonicalize(s);
    CHECK(s.size() == 2);
    CHECK(contains(s, a));
}

TEST_CASE("coherence cells in a pseudo instance") {
    SpanInstance S;
    Value A = SpanInstance::obj({Value(0), Value(1)});
    VArrow v = SpanInstance::span(A, A, {Value("s")}, {{Value("s"), Value(0)}},
                                  {{Value("s"), Value(1)}});
    VArrow w = SpanInstance::span(A, A, {Value("t0"), Value("t1")},
                                  {{Value("t0"), Value(1)}, {Value("t1"), Value(1)}},
                                  {{Value("t0"), Value(0)}, {Value("t1"), Value(1)}});

    // ((w∘v) with unit padding) vs plain composite, via coherence
    VExpr e1 = VExpr::C(VExpr::C(VExpr::L(w), VExpr::I(A)), VExpr::L(v));
    VExpr e2 = VExpr::C(VExpr::L(w), VExpr::L(v));
    IsoCell i = coherence(S, e1, e2);
    CHECK(i.fwd.left == eval_vexpr(S, e1));
    CHECK(i.fwd.right == eval_vexpr(S, e2));
    CHECK(S.hcompose(i.fwd, i.bwd) == S.cell_vid(eval_vexpr(S, e1)));
    CHECK(S.hcompose(i.bwd, i.fwd) == S.cell_vid(eval_vexpr(S, e2)));

    // different leaves must be rejected
    CHECK_THROWS_AS(coherence(S, VExpr::L(v), VExpr::L(w)), BoundaryError);
}

TEST_CASE("tcell pasting inserts coherence automatically") {
    SpanInstance S;
    Value A = SpanInstance::obj({Value(0), Value(1)});
    VArrow v = SpanInstance::span(A, A, {Value("s")}, {{Value("s"), Value(0)}},
                                  {{Value("s"), Value(1)}});
    // v∘id vs v: thcompose of 1-cells over the two bracketings
    Cell pad = S.cell_vid(S.vcomp(v, S.vid(A)));
    TCell a = tcell(pad, VExpr::C(VExpr::L(v), VExpr::I(A)), VExpr::C(VExpr::L(v), VExpr::I(A)));
    TCell b = tcell(S.cell_vid(v), VExpr::L(v), VExpr::L(v));
    TCell ab = thcompose(S, a, b);
    CHECK(tnormalize(S, ab) == S.cell_vid(v));
    CHECK(tequal(S, a, b));
}

TEST_CASE("boundary errors carry a description") {
    RelInstance R;
    Value A = RelInstance::obj({Value("x")});
    Value B = RelInstance::obj({Value("y")});
    VArrow r = RelInstance::rel(A, B, {});
    CHECK_THROWS_WITH_AS(R.vcomp(r, r), doctest::Contains("mismatch"), BoundaryError);
}
