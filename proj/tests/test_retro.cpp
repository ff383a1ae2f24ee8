#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "retrokit/charact.hpp"
#include "retrokit/finset.hpp"
#include "retrokit/laws.hpp"
#include "retrokit/rel.hpp"

using namespace rk;

namespace {

TCell tid(const Instance& A, const VArrow& u) {
    return tcell(A.cell_vid(u), VExpr::L(u), VExpr::L(u));
}

// all (f, v, w, g) frames with arrows drawn from the universe
template <typename Fn>
void for_each_frame(const Instance& A, const Universe& U, Fn fn) {
    std::vector<HArrow> hs = U.harrows;
    for (auto& o : U.objects) hs.push_back(A.hid(o));
    for (auto& f : hs)
        for (auto& g : hs)
            for (auto& v : U.varrows)
                for (auto& w : U.varrows) {
                    if (f.src != v.src || f.dst != w.src) continue;
                    if (v.dst != g.src || w.dst != g.dst) continue;
                    fn(f, v, w, g);
                }
}

}  // namespace

TEST_CASE("ret(Rel) and ret(Span) satisfy the double category laws") {
    RetInstance RR(std::make_shared<RelInstance>());
    LawReport r1 = check_double_category(RR, rel_universe(), 8);
    INFO(r1.summary());
    CHECK(r1.ok());
    CHECK(RR.strict());

    RetInstance RS(std::make_shared<SpanInstance>());
    LawReport r2 = check_double_category(RS, span_universe(), 6);
    INFO(r2.summary());
    CHECK(r2.ok());
    CHECK(!RS.strict());
}

TEST_CASE("canonical companions in ret (binding equations)") {
    RetInstance RR(std::make_shared<RelInstance>());
    LawReport r1 = check_companions(RR, rel_universe());
    INFO(r1.summary());
    CHECK(r1.ok());

    RetInstance RS(std::make_shared<SpanInstance>());
    LawReport r2 = check_companions(RS, span_universe());
    INFO(r2.summary());
    CHECK(r2.ok());
}

TEST_CASE("coherence cancellation: the two 4x2 iso blocks agree") {
    SpanInstance S;
    Universe U = span_universe();
    int tried = 0;
    for (auto& f1 : U.harrows)
        for (auto& f2 : U.harrows)
            for (auto& f3 : U.harrows) {
                if (f1.dst != f2.src || f2.dst != f3.src) continue;
                ++tried;
                // (f3 f2 f1)_* => f3_* ∘ (f2 f1)_* => f3_* ∘ f2_* ∘ f1_*
                TCell lhs = thcompose(
                    S, iso_comp_to(S, f3, S.hcomp(f2, f1)),
                    tvcompose(S, iso_comp_to(S, f2, f1), tid(S, S.companion(f3))));
                // (f3 f2 f1)_* => (f3 f2)_* ∘ f1_* => f3_* ∘ f2_* ∘ f1_*
                TCell rhs = thcompose(
                    S, iso_comp_to(S, S.hcomp(f3, f2), f1),
                    tvcompose(S, tid(S, S.companion(f1)), iso_comp_to(S, f3, f2)));
                CHECK(tequal(S, lhs, rhs));
            }
    CHECK(tried > 0);
}

TEST_CASE("retrocell units against both compositions") {
    SpanInstance S;
    Universe U = span_universe();
    for_each_frame(S, U, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                             const HArrow& g) {
        for (auto& r : enumerate_retrocells(S, Boundary{f, v, w, g})) {
            CHECK(retro_hcompose(S, retro_hid(S, v), r) == r);
            CHECK(retro_hcompose(S, r, retro_hid(S, w)) == r);
            // vertical units hold after unitor transport
            Retrocell t1 = retro_vcompose(S, retro_vid(S, f), r);
            Retrocell t2 = retro_vcompose(S, r, retro_vid(S, g));
            CHECK(tequal(S, t1.under, treframe(S, r.under, t1.under.left, t1.under.right)));
            CHECK(tequal(S, t2.under, treframe(S, r.under, t2.under.left, t2.under.right)));
        }
    });
    // retro_hid at an identity object collapses to retro_vid of the identity
    for (auto& o : U.objects)
        CHECK(retro_hid(S, S.vid(o)) == retro_vid(S, S.hid(o)));
}

TEST_CASE("Thm 2.3(2): the double dual is a composition-preserving bijection") {
    auto base = std::make_shared<RelInstance>();
    auto R1 = std::make_shared<RetInstance>(base);
    RetInstance R2(R1);
    Universe U = rel_universe();

    std::vector<Cell> cells;
    for_each_frame(*base, U, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                                 const HArrow& g) {
        for (auto& c : base->enumerate_cells(Boundary{f, v, w, g})) cells.push_back(c);
    });
    CHECK(cells.size() > 4);
    for (auto& c : cells) {
        Cell d = double_dual_to(R2, c);
        CHECK(d.top == c.top);
        CHECK(d.left == c.left);
        CHECK(d.right == c.right);
        CHECK(d.bottom == c.bottom);
        CHECK(double_dual_from(R2, d) == c);
    }
    // identities map to identities
    for (auto& v : U.varrows)
        CHECK(double_dual_to(R2, base->cell_vid(v)) == R2.cell_vid(v));
    for (auto& f : U.harrows)
        CHECK(double_dual_to(R2, base->cell_hid(f)) == R2.cell_hid(f));
    // functoriality for horizontal composition
    for (auto& a : cells)
        for (auto& b : cells) {
            if (a.right != b.left || a.top.dst != b.top.src || a.bottom.dst != b.bottom.src)
                continue;
            CHECK(double_dual_to(R2, base->hcompose(a, b)) ==
                  R2.hcompose(double_dual_to(R2, a), double_dual_to(R2, b)));
        }
    // and the same bijection also holds over Span
    auto sp = std::make_shared<SpanInstance>();
    auto S1 = std::make_shared<RetInstance>(sp);
    RetInstance S2(S1);
    Universe US = span_universe();
    for_each_frame(*sp, US, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                                const HArrow& g) {
        auto all = sp->enumerate_cells(Boundary{f, v, w, g});
        size_t n = 0;
        for (auto& c : all) {
            if (++n > 4) break;  // a few per boundary keeps this quick
            Cell d = double_dual_to(S2, c);
            CHECK(double_dual_from(S2, d) == c);
        }
    });
}

TEST_CASE("coretrocells, cor(A) and the duality translation") {
    RelInstance A;
    auto Aco = CoInstance(std::make_shared<RelInstance>());
    Universe U = rel_universe();

    int found = 0;
    for_each_frame(A, U, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                             const HArrow& g) {
        for (auto& c : enumerate_coretrocells(A, Boundary{f, v, w, g})) {
            ++found;
            Retrocell r = coretro_to_co_retro(Aco, c);
            CHECK(co_retro_to_coretro(Aco, r) == c);
        }
        // agreement with the §5 predicate
        bool exists = !enumerate_coretrocells(A, Boundary{f, v, w, g}).empty();
        CHECK(exists == rel_coretro_exists(f, v, w, g));
        bool rexists = !enumerate_retrocells(A, Boundary{f, v, w, g}).empty();
        CHECK(rexists == rel_retro_exists(f, v, w, g));
    });
    CHECK(found > 0);

    // identities translate to identities
    for (auto& f : U.harrows) {
        Retrocell r = coretro_to_co_retro(Aco, coretro_vid(A, f));
        CHECK(r == retro_vid(Aco, f));
    }

    // cor(A) = co(ret(co(A))) passes the law suite over Rel
    auto cor = make_cor(std::make_shared<RelInstance>());
    LawReport lr = check_double_category(*cor, rel_universe(), 8);
    INFO(lr.summary());
    CHECK(lr.ok());

    // coretro composition agrees with retro composition through the co-dual
    std::vector<Coretrocell> cs;
    for_each_frame(A, U, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                             const HArrow& g) {
        for (auto& c : enumerate_coretrocells(A, Boundary{f, v, w, g})) cs.push_back(c);
    });
    for (auto& a : cs)
        for (auto& b : cs) {
            if (a.w == b.v && a.f.dst == b.f.src && a.g.dst == b.g.src) {
                Coretrocell h = coretro_hcompose(A, a, b);
                Retrocell hr = retro_hcompose(Aco, coretro_to_co_retro(Aco, a),
                                              coretro_to_co_retro(Aco, b));
                CHECK(co_retro_to_coretro(Aco, hr) == h);
            }
            if (a.g == b.f) {
                Coretrocell vv = coretro_vcompose(A, a, b);
                CHECK(vv.v == A.vcomp(b.v, a.v));
                CHECK(vv.w == A.vcomp(b.w, a.w));
            }
        }
}

TEST_CASE("retrocell horizontal associativity and interchange in ret(Span)") {
    SpanInstance S;
    Universe U = span_universe();
    std::vector<Retrocell> rs;
    for_each_frame(S, U, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                             const HArrow& g) {
        auto all = enumerate_retrocells(S, Boundary{f, v, w, g});
        for (size_t i = 0; i < all.size() && i < 2; ++i) rs.push_back(all[i]);
    });
    int triples = 0, squares = 0;
    for (auto& a : rs)
        for (auto& b : rs) {
            if (!(a.w == b.v && a.f.dst == b.f.src && a.g.dst == b.g.src)) continue;
            for (auto& c : rs) {
                if (!(b.w == c.v && b.f.dst == c.f.src && b.g.dst == c.g.src)) continue;
                if (++triples > 60) break;
                Retrocell l = retro_hcompose(S, retro_hcompose(S, a, b), c);
                Retrocell r = retro_hcompose(S, a, retro_hcompose(S, b, c));
                CHECK(l == r);  // exact: horizontal composition is strict
            }
        }
    CHECK(triples > 0);
    // interchange
    for (auto& a : rs)
        for (auto& b : rs) {
            if (!(a.w == b.v && a.f.dst == b.f.src && a.g.dst == b.g.src)) continue;
            for (auto& a2 : rs) {
                if (!(a2.f == a.g && a2.v.src == a.v.dst)) continue;
                for (auto& b2 : rs) {
                    if (!(b2.f == b.g && a2.w == b2.v && a2.g.dst == b2.g.src)) continue;
                    if (++squares > 40) break;
                    Retrocell p = retro_vcompose(S, retro_hcompose(S, a, b),
                                                 retro_hcompose(S, a2, b2));
                    Retrocell q = retro_hcompose(S, retro_vcompose(S, a, a2),
                                                 retro_vcompose(S, b, b2));
                    CHECK(tequal(S, p.under, q.under));
                }
            }
        }
    CHECK(squares > 0);
}

TEST_CASE("Span retrocells are liftings") {
    SpanInstance S;
    Universe U = span_universe();
    for_each_frame(S, U, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                             const HArrow& g) {
        auto all = enumerate_retrocells(S, Boundary{f, v, w, g});
        // roundtrip through the lifting description
        std::vector<VMap> seen;
        for (auto& r : all) {
            VMap beta = span_retro_to_lifting(S, r);
            CHECK(span_lifting_to_retro(S, f, v, w, g, beta) == r);
            seen.push_back(beta);
        }
        // count the liftings directly: functions T x_B A -> S with the two
        // leg conditions
        VMap fm = map_of(f.pay), gm = map_of(g.pay);
        size_t count = 1;
        for (auto& t : SpanInstance::apex(w))
            for (auto& a : f.src.list()) {
                if (fm.at(a) != SpanInstance::leg0(w, t)) continue;
                size_t ok = 0;
                for (auto& s : SpanInstance::apex(v))
                    if (SpanInstance::leg0(v, s) == a &&
                        gm.at(SpanInstance::leg1(v, s)) == SpanInstance::leg1(w, t))
                        ++ok;
                count *= ok;
            }
        CHECK(count == all.size());
    });
}

TEST_CASE("Span coretrocells are the dual liftings") {
    SpanInstance S;
    Universe U = span_universe();
    for_each_frame(S, U, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                             const HArrow& g) {
        auto all = enumerate_coretrocells(S, Boundary{f, v, w, g});
        for (auto& r : all) {
            VMap beta = span_coretro_to_lifting(S, r);
            CHECK(span_lifting_to_coretro(S, f, v, w, g, beta) == r);
        }
        // direct count: choices of s in S with sigma1 s = c and f(sigma0 s) = tau0 t
        VMap fm = map_of(f.pay), gm = map_of(g.pay);
        size_t count = 1;
        for (auto& t : SpanInstance::apex(w))
            for (auto& c : g.src.list()) {
                if (gm.at(c) != SpanInstance::leg1(w, t)) continue;
                size_t ok = 0;
                for (auto& s : SpanInstance::apex(v))
                    if (SpanInstance::leg1(v, s) == c &&
                        fm.at(SpanInstance::leg0(v, s)) == SpanInstance::leg0(w, t))
                        ++ok;
                count *= ok;
            }
        CHECK(count == all.size());
    });
}

TEST_CASE("Mat retrocells are families of linear maps") {
    MatInstance M(2);
    // A = {a}, B = {b}, C = {c1, c2}, D = {d};  f a = b, g c_i = d
    Value A = MatInstance::obj({Value("a")});
    Value B = MatInstance::obj({Value("b")});
    Value C = MatInstance::obj({Value("c1"), Value("c2")});
    Value D = MatInstance::obj({Value("d")});
    HArrow f = MatInstance::fn(A, B, {{Value("a"), Value("b")}});
    HArrow g = MatInstance::fn(C, D, {{Value("c1"), Value("d")}, {Value("c2"), Value("d")}});
    VArrow V = MatInstance::matrix("V", A, C,
                                   {{{Value("a"), Value("c1")}, 1},
                                    {{Value("a"), Value("c2")}, 1}});
    VArrow W = MatInstance::matrix("W", B, D, {{{Value("b"), Value("d")}, 1}});
    auto all = enumerate_retrocells(M, Boundary{f, V, W, g});
    CHECK(all.size() == 4);  // linear maps F_2 -> F_2^2
    for (auto& r : all) {
        MatCellData comp = mat_retro_components(M, r);
        CHECK(mat_retro_from_components(M, f, V, W, g, comp) == r);
    }
    // all-zero dimensions: a unique (empty) retrocell
    VArrow V0 = MatInstance::matrix("V0", A, C, {});
    VArrow W0 = MatInstance::matrix("W0", B, D, {});
    CHECK(enumerate_retrocells(M, Boundary{f, V0, W0, g}).size() == 1);
}

TEST_CASE("Prof retrocell liftings are canonical representatives") {
    ProfInstance P;
    Universe U = prof_universe();
    int found = 0;
    for_each_frame(P, U, [&](const HArrow& f, const VArrow& v, const VArrow& w,
                             const HArrow& g) {
        for (auto& r : enumerate_retrocells(P, Boundary{f, v, w, g})) {
            ++found;
            auto lift = prof_retro_lifting(P, r);
            const Cell& c = r.under.cell;
            for (auto& [k, val] : lift) {
                // both key and value are the canonical class representatives
                auto keys = ProfInstance::elements(c.left, k[0], k[1]);
                CHECK(std::find(keys.begin(), keys.end(), k[2]) != keys.end());
                auto vals = ProfInstance::elements(c.right, k[0], k[1]);
                CHECK(std::find(vals.begin(), vals.end(), val) != vals.end());
            }
        }
    });
    CHECK(found > 0);
}
