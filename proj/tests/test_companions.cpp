#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "retrokit/companions.hpp"
#include "retrokit/laws.hpp"
#include "retrokit/mat.hpp"
#include "retrokit/prof.hpp"
#include "retrokit/rel.hpp"
#include "retrokit/span.hpp"

using namespace rk;

static void binding_suite(const Instance& A, const Universe& U) {
    LawReport c = check_companions(A, U);
    INFO(A.name(), " companions: ", c.summary());
    CHECK(c.ok());
    LawReport j = check_conjoints(A, U);
    INFO(A.name(), " conjoints: ", j.summary());
    CHECK(j.ok());
}

TEST_CASE("companion and conjoint binding equations hold in all instances") {
    RelInstance R;
    binding_suite(R, rel_universe());
    SpanInstance S;
    binding_suite(S, span_universe());
    MatInstance M(2);
    binding_suite(M, mat_universe());
    ProfInstance P;
    binding_suite(P, prof_universe());
}

// collect a few cells over boundaries whose top/bottom are non-identities
static std::vector<Cell> some_cells(const Instance& A, const Universe& U, size_t max) {
    std::vector<Cell> out;
    for (auto& v : U.varrows)
        for (auto& w : U.varrows)
            for (auto& f : U.harrows) {
                if (f.src != v.src || f.dst != w.src) continue;
                for (auto& g : U.harrows) {
                    if (g.src != v.dst || g.dst != w.dst) continue;
                    for (auto& c : A.enumerate_cells({f, v, w, g})) {
                        out.push_back(c);
                        if (out.size() >= max) return out;
                    }
                }
            }
    return out;
}

static void roundtrip_suite(const Instance& A, const Universe& U) {
    std::vector<Cell> cells = some_cells(A, U, 6);
    CHECK(!cells.empty());
    for (auto& c : cells) {
        TCell t = tcell(A, c);
        HArrow f = c.top, g = c.bottom;
        HArrow idt = A.hid(f.src), idb = A.hid(g.dst);

        // slide the top factor away and back
        TCell s = slide_top(A, t, idt, f);
        CHECK(s.cell.top == idt);
        TCell back = slide_top_inv(A, s, idt, f, t.right);
        CHECK(tnormalize(A, back) == tnormalize(A, t));

        // slide the bottom factor away and back
        TCell sb = slide_bottom(A, t, g, idb);
        CHECK(sb.cell.bottom == idb);
        TCell back2 = slide_bottom_inv(A, sb, g, idb, t.left);
        CHECK(tnormalize(A, back2) == tnormalize(A, t));

        // hat is globular with the expected boundary, and unhat recovers
        TCell h = hat(A, t);
        Cell hn = tnormalize(A, h);
        CHECK(hn.top == idt);
        CHECK(hn.bottom == idb);
        VExpr le = VExpr::C(VExpr::L(A.companion(g)), VExpr::L(c.left));
        VExpr re = VExpr::C(VExpr::L(c.right), VExpr::L(A.companion(f)));
        CHECK(hn.left == eval_vexpr(A, normal_form_expr(A, le)));
        CHECK(hn.right == eval_vexpr(A, normal_form_expr(A, re)));
        TCell u = unhat(A, h, f, g, VExpr::L(c.left), VExpr::L(c.right));
        CHECK(tnormalize(A, u) == tnormalize(A, t));

        // conjoint flips
        TCell ft = flip_top(A, t, f, A.hid(f.dst));
        CHECK(ft.cell.top == A.hid(f.dst));
        TCell fback = flip_top_inv(A, ft, f, A.hid(f.dst), t.left);
        CHECK(tnormalize(A, fback) == tnormalize(A, t));

        TCell fb = flip_bottom(A, t, A.hid(g.src), g);
        CHECK(fb.cell.bottom == A.hid(g.src));
        TCell fback2 = flip_bottom_inv(A, fb, A.hid(g.src), g, t.right);
        CHECK(tnormalize(A, fback2) == tnormalize(A, t));
    }
}

TEST_CASE("slide, flip and hat roundtrips in all instances") {
    RelInstance R;
    roundtrip_suite(R, rel_universe());
    SpanInstance S;
    roundtrip_suite(S, span_universe());
    MatInstance M(2);
    roundtrip_suite(M, mat_universe());
    ProfInstance P;
    roundtrip_suite(P, prof_universe());
}

TEST_CASE("sliding with a genuine factorization") {
    SpanInstance S;
    Universe U = span_universe();
    HArrow f = U.harrows[0], g = U.harrows[1];  // f: A->B, g: B->A
    HArrow gf = S.hcomp(g, f);                  // A -> A
    // pick a cell over (gf, v, w, h)
    for (auto& v : U.varrows) {
        if (v.src != f.src) continue;
        for (auto& w : U.varrows) {
            if (w.src != g.dst || w.dst != v.dst) continue;
            for (auto& c : S.enumerate_cells({gf, v, w, S.hid(v.dst)})) {
                TCell t = tcell(S, c);
                TCell s = slide_top(S, t, f, g);
                CHECK(s.cell.top == f);
                CHECK(tnormalize(S, s).right == S.vcomp(c.right, S.companion(g)));
                CHECK(tnormalize(S, slide_top_inv(S, s, f, g, t.right)) == tnormalize(S, t));
            }
        }
    }
}
