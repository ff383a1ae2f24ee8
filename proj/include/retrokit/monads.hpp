#pragma once
// Vertical monads and their morphisms.  A monad lives on one object and is a
// vertical endo-arrow with unit and multiplication cells satisfying the usual
// laws (up to associator transport in pseudo instances).  Oplax morphisms are
// plain cells; retromorphisms are retrocells, and in Span(FinSet) they are
// exactly internal cofunctors.  Kleisli and Eilenberg-Moore objects are
// characterized by universal properties, which are checked here by bounded
// enumeration of competitors.

#include "core.hpp"
#include "retro.hpp"
#include "span.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rk {

// ---------------------------------------------------------------------------
// Diagnostic result: ok plus the list of failing equations (in a fixed order),
// so callers can report the first failure or compare failure sets.

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::string first() const { return failures.empty() ? "" : failures.front(); }
    void fail(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
    explicit operator bool() const { return ok; }
};

// ---------------------------------------------------------------------------
// Vertical monads.

struct VMonad {
    Value obj;
    VArrow t;   // t: obj -/-> obj
    Cell unit;  // globular  id_obj => t
    Cell mult;  // globular  t∘t => t   (left boundary is vcomp(t,t))

    friend bool operator==(const VMonad& a, const VMonad& b) {
        return a.obj == b.obj && a.t == b.t && a.unit == b.unit && a.mult == b.mult;
    }
    friend bool operator!=(const VMonad& a, const VMonad& b) { return !(a == b); }
};

VMonad identity_vmonad(const Instance& A, const Value& obj);

// unit/associativity laws; failures named "unit boundary", "mult boundary",
// "left unit", "right unit", "associativity"
CheckReport monad_check(const Instance& A, const VMonad& m);

// ---------------------------------------------------------------------------
// Oplax morphisms (plain cells) and retromorphisms (retrocells).

struct MonadMorphism {
    HArrow f;
    Cell psi;  // over (f, t, s, f)
};

CheckReport morphism_check(const Instance& A, const VMonad& dom, const VMonad& cod,
                           const MonadMorphism& mm);

struct Retromorphism {
    HArrow f;
    Retrocell phi;  // over (f, t, s, f)

    friend bool operator==(const Retromorphism& a, const Retromorphism& b) {
        return a.f == b.f && a.phi == b.phi;
    }
    friend bool operator!=(const Retromorphism& a, const Retromorphism& b) { return !(a == b); }
};

// failures named "unit compatibility", "multiplication compatibility"
CheckReport retromorphism_check(const Instance& A, const VMonad& dom, const VMonad& cod,
                                const Retromorphism& r);
Retromorphism identity_retromorphism(const Instance& A, const VMonad& m);
// r1: dom -> mid, r2: mid -> cod; carrier arrows compose as hcomp(r2.f, r1.f)
Retromorphism compose_retromorphisms(const Instance& A, const Retromorphism& r1,
                                     const Retromorphism& r2);

struct Coretromorphism {
    HArrow f;
    Coretrocell theta;  // over (f, t, s, f)

    friend bool operator==(const Coretromorphism& a, const Coretromorphism& b) {
        return a.f == b.f && a.theta == b.theta;
    }
    friend bool operator!=(const Coretromorphism& a, const Coretromorphism& b) {
        return !(a == b);
    }
};

CheckReport coretromorphism_check(const Instance& A, const VMonad& dom, const VMonad& cod,
                                  const Coretromorphism& r);
Coretromorphism identity_coretromorphism(const Instance& A, const VMonad& m);
Coretromorphism compose_coretromorphisms(const Instance& A, const Coretromorphism& r1,
                                         const Coretromorphism& r2);

// ---------------------------------------------------------------------------
// Finite categories as composition tables, and the monad = category object
// correspondence in Span(FinSet).

struct FinCat {
    VSet objects;
    VSet arrows;
    VMap src, dst;  // arrow -> object
    VMap ident;     // object -> identity arrow
    VMap comp;      // vpair(second, first) -> second∘first, exactly on composable pairs

    friend bool operator==(const FinCat& a, const FinCat& b) {
        return a.objects == b.objects && a.arrows == b.arrows && a.src == b.src &&
               a.dst == b.dst && a.ident == b.ident && a.comp == b.comp;
    }
    friend bool operator!=(const FinCat& a, const FinCat& b) { return !(a == b); }
};

CheckReport fincat_check(const FinCat& c);

// canned categories used by tests and the CLI
FinCat discrete_cat(int n);
FinCat poset_01();    // 0 -> 1
FinCat z2_cat();      // one object, arrows Z/2
FinCat z3_cat();      // one object, arrows Z/3
FinCat chain_012();   // 0 -> 1 -> 2 (6 arrows)
FinCat z2_covering(); // two-object groupoid covering z2_cat (4 arrows)

VMonad span_monad_from_category(const SpanInstance& S, const FinCat& c);
FinCat category_from_span_monad(const SpanInstance& S, const VMonad& m);

// ---------------------------------------------------------------------------
// Cofunctors: object map plus a lifting of arrows out of F(A) to arrows out
// of A, with the codomain condition F(cod a) = cod b recorded by the laws.

struct Cofunctor {
    VMap ob;    // Ob A -> Ob B
    VMap lift;  // vpair(A, b) -> a   for b with src(b) = ob(A)

    friend bool operator==(const Cofunctor& a, const Cofunctor& b) {
        return a.ob == b.ob && a.lift == b.lift;
    }
    friend bool operator!=(const Cofunctor& a, const Cofunctor& b) { return !(a == b); }
};

// failures named "shape", "unit law", "composition law"
CheckReport cofunctor_check(const FinCat& Acat, const FinCat& Bcat, const Cofunctor& F);
Cofunctor identity_cofunctor(const FinCat& c);
// F: A -> B, G: B -> C
Cofunctor compose_cofunctors(const Cofunctor& G, const Cofunctor& F);

Cofunctor retromorphism_to_cofunctor(const SpanInstance& S, const Retromorphism& r);
Retromorphism cofunctor_to_retromorphism(const SpanInstance& S, const FinCat& Acat,
                                         const FinCat& Bcat, const Cofunctor& F);

// Opcofunctors: the conjoint-side mirror.  The lifting sends an arrow
// b: B -> F(A) into B to an arrow a: A' -> A of A with F(A') = src(b).
struct Opcofunctor {
    VMap ob;    // Ob A -> Ob B
    VMap lift;  // vpair(A, b) -> a   for b with dst(b) = ob(A)

    friend bool operator==(const Opcofunctor& a, const Opcofunctor& b) {
        return a.ob == b.ob && a.lift == b.lift;
    }
    friend bool operator!=(const Opcofunctor& a, const Opcofunctor& b) { return !(a == b); }
};

CheckReport opcofunctor_check(const FinCat& Acat, const FinCat& Bcat, const Opcofunctor& F);
Opcofunctor identity_opcofunctor(const FinCat& c);
Opcofunctor compose_opcofunctors(const Opcofunctor& G, const Opcofunctor& F);

Opcofunctor coretromorphism_to_opcofunctor(const SpanInstance& S, const Coretromorphism& r);
Coretromorphism opcofunctor_to_coretromorphism(const SpanInstance& S, const FinCat& Acat,
                                               const FinCat& Bcat, const Opcofunctor& F);

// ---------------------------------------------------------------------------
// Kleisli and Eilenberg-Moore objects in Span(FinSet), with universality
// checked by bounded enumeration of competitors (the defining properties
// quantify over all objects; the bound is reported).

struct UnivReport {
    bool ok = true;
    std::string failed;  // first failing equation or competitor description
    int bound = 0;
    int competitors = 0;  // competitors examined by the universality sweep
    explicit operator bool() const { return ok; }
};

struct KleisliCandidate {
    Value obj;  // the Kleisli object
    HArrow f;   // quotient map A0 -> obj
    Cell pi;    // over (f, t, id_obj, f)
};

KleisliCandidate kleisli_construct_span(const SpanInstance& S, const VMonad& m);
UnivReport is_kleisli(const SpanInstance& S, const VMonad& m, const KleisliCandidate& k,
                      int bound = 4);

struct EMCandidate {
    Value obj;       // X
    HArrow u;        // X -> A0
    Retrocell theta; // over (u, id_X, t, u)
};

UnivReport em_check(const SpanInstance& S, const VMonad& m, const EMCandidate& c,
                    int bound = 4);
std::optional<EMCandidate> em_search_span(const SpanInstance& S, const VMonad& m,
                                          int bound = 4);

}  // namespace rk
