#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "retrokit/laws.hpp"
#include "retrokit/mat.hpp"
#include "retrokit/prof.hpp"
#include "retrokit/rel.hpp"
#include "retrokit/span.hpp"

using namespace rk;

TEST_CASE("Rel satisfies the double category laws (strict)") {
    RelInstance R;
    Universe U = rel_universe();
    LawReport rep = check_double_category(R, U);
    INFO(rep.summary());
    CHECK(rep.ok());
    CHECK(rep.checks > 50);
}

TEST_CASE("Span satisfies the double category laws (pseudo)") {
    SpanInstance S;
    Universe U = span_universe();
    LawReport rep = check_double_category(S, U);
    INFO(rep.summary());
    CHECK(rep.ok());
}

TEST_CASE("Mat(F2) satisfies the double category laws and is strict") {
    MatInstance M(2);
    Universe U = mat_universe();
    CHECK(M.strict());
    LawReport rep = check_double_category(M, U);
    INFO(rep.summary());
    CHECK(rep.ok());
}

TEST_CASE("Prof satisfies the double category laws (pseudo)") {
    ProfInstance P;
    Universe U = prof_universe();
    LawReport rep = check_double_category(P, U);
    INFO(rep.summary());
    CHECK(rep.ok());
}

TEST_CASE("Span composite counts pullbacks pointwise") {
    SpanInstance S;
    Universe U = span_universe();
    // s1 : A -|-> A has right legs {a1,a1}; s2 : A -|-> B has left leg a0
    VArrow c = S.vcomp(U.varrows[1], U.varrows[0]);
    CHECK(SpanInstance::apex(c).empty());  // a1 never matches a0
    VArrow c2 = S.vcomp(U.varrows[0], U.varrows[0]);
    CHECK(SpanInstance::apex(c2).size() == 2);  // both s map right to a1; s1 maps left from a1
}

TEST_CASE("Mat composition multiplies dimensions") {
    MatInstance M(2);
    Value A = MatInstance::obj({Value(0)});
    VArrow x = MatInstance::matrix("x", A, A, {{{Value(0), Value(0)}, 2}});
    VArrow y = MatInstance::matrix("y", A, A, {{{Value(0), Value(0)}, 3}});
    CHECK(MatInstance::basis(M.vcomp(y, x), Value(0), Value(0)).size() == 6);
    // strict unit and associativity on the nose
    CHECK(M.vcomp(x, M.vid(A)) == x);
    CHECK(M.vcomp(M.vid(A), x) == x);
    CHECK(M.vcomp(M.vcomp(y, x), y) == M.vcomp(y, M.vcomp(x, y)));
}

TEST_CASE("Prof composite is the coend") {
    ProfInstance P;
    Universe U = prof_universe();
    // hom∘hom over the poset collapses to hom: 2 objects, 3 arrows
    VArrow id1 = U.varrows[0];
    VArrow c = P.vcomp(id1, id1);
    FinCat C1 = FinCat::decode(id1.src);
    size_t total = 0;
    for (auto& a : C1.objects)
        for (auto& b : C1.objects) total += ProfInstance::elements(c, a, b).size();
    CHECK(total == 3);
}

TEST_CASE("Rel cells are inclusion witnesses") {
    RelInstance R;
    Universe U = rel_universe();
    // identity-boundary cell exists iff relation contained in itself
    CHECK(R.enumerate_cells({R.hid(U.objects[0]), U.varrows[0], U.varrows[0],
                             R.hid(U.objects[0])})
              .size() == 1);
    // r1 is not contained in vid(A)
    CHECK(R.enumerate_cells({R.hid(U.objects[0]), U.varrows[0], R.vid(U.objects[0]),
                             R.hid(U.objects[0])})
              .empty());
}
