#pragma once
// Internal homs in Span(FinSet).  The left hom y⟍z of spans y: B -|-> C and
// z: A -|-> C has fiber over (a,b) the set of fiberwise families
// Π_c z_{ac}^{y_bc}; apex elements are encoded as [[a b] graph] with the
// graph sending each y-apex element over b to a z-apex element with matching
// C-leg.  Evaluation, curry/uncurry (in the strong form, with a horizontal
// arrow along the top), the companion-stability witness, and the hom functor
// on twisted cospans are all realized concretely at the element level; the
// pasting characterizations from the universal property are exposed as
// separate checks.  The right hom z⊘x mirrors everything through conjoints
// and coretrocells.  Homs are built only for Span; other instances would
// supply their own constructions to the same checkers.

#include "core.hpp"
#include "laws.hpp"
#include "monads.hpp"
#include "retro.hpp"
#include "span.hpp"

namespace rk {

// ---------------------------------------------------------------------------
// Left homs): y⟍z for y: B -|-> C, z: A -|-> C  is  A -|-> B.

VArrow left_hom_span(const SpanInstance& S, const VArrow& y, const VArrow& z);

// ε: y∘(y⟍z) => z, globular
Cell eval_cell(const SpanInstance& S, const VArrow& y, const VArrow& z);

// strong-form bijection over a top arrow f: A' -> A
//   α over (f, y∘x, z, 1_C)   <->   β over (f, x, y⟍z, 1_B)
Cell curry(const SpanInstance& S, const VArrow& x, const VArrow& y, const VArrow& z,
           const Cell& alpha);
Cell uncurry(const SpanInstance& S, const VArrow& x, const VArrow& y, const VArrow& z,
             const Cell& beta);

// canonical invertible cell  (y⟍z)∘f_* => y⟍(z∘f_*)  for f: A' -> A
IsoCell strongness_witness(const SpanInstance& S, const HArrow& f, const VArrow& y,
                           const VArrow& z);

// canonical iso  z => id_C⟍z
IsoCell left_hom_unit(const SpanInstance& S, const VArrow& z);

// ---------------------------------------------------------------------------
// Twisted cospans: objects are cospans (z: A -|-> C, y: B -|-> C); a morphism
// is a retrocell β on the y-side (reversed) and a standard cell γ on the
// z-side, sharing the bottom arrow c.

struct TCMorphism {
    VArrow y, z;    // domain cospan
    VArrow y2, z2;  // codomain cospan
    HArrow a, b, c; // a: A -> A', b: B -> B', c: C -> C'
    Retrocell beta; // over (b, y, y2, c)
    Cell gamma;     // over (a, z, z2, c)
};

CheckReport tc_check(const SpanInstance& S, const TCMorphism& m);
TCMorphism tc_identity(const SpanInstance& S, const VArrow& y, const VArrow& z);
TCMorphism tc_compose(const SpanInstance& S, const TCMorphism& m1, const TCMorphism& m2);

// β⟍γ over (a, y⟍z, y2⟍z2, b)
Cell hom_apply(const SpanInstance& S, const TCMorphism& m);

// verifies that xi satisfies the defining pasting equation of β⟍γ: folding
// xi down with the evaluation cell equals the canonical (carrier, ε, γ,
// corner) pasting
bool tc_pasting_check(const SpanInstance& S, const TCMorphism& m, const Cell& xi);

// ---------------------------------------------------------------------------
// Right homs: z⊘x for x: A -|-> B, z: A -|-> C  is  B -|-> C.

VArrow right_hom_span(const SpanInstance& S, const VArrow& z, const VArrow& x);

// ε': (z⊘x)∘x => z, globular
Cell eval_cell_right(const SpanInstance& S, const VArrow& z, const VArrow& x);

// strong-form bijection over a bottom arrow g: C' -> C
//   α over (1_A, y∘x, z, g)   <->   β over (1_B, y, z⊘x, g)   (y: B -|-> C')
Cell curry_right(const SpanInstance& S, const VArrow& x, const VArrow& y, const VArrow& z,
                 const Cell& alpha);
Cell uncurry_right(const SpanInstance& S, const VArrow& x, const VArrow& y,
                   const VArrow& z, const Cell& beta);

// canonical invertible cell  g^*∘(z⊘x) => (g^*∘z)⊘x  for g: C' -> C
IsoCell strongness_witness_right(const SpanInstance& S, const HArrow& g, const VArrow& z,
                                 const VArrow& x);

// canonical iso  z => z⊘id_A
IsoCell right_hom_unit(const SpanInstance& S, const VArrow& z);

// ---------------------------------------------------------------------------
// Twisted spans: objects are spans (x: A -|-> B, z: A -|-> C); a morphism is
// a coretrocell α on the x-side and a standard cell γ on the z-side, sharing
// the arrow a on the common leg.

struct TSMorphism {
    VArrow x, z;      // domain span
    VArrow x2, z2;    // codomain span
    HArrow a, b, c;   // a: A -> A', b: B -> B', c: C -> C'
    Coretrocell alpha;  // over (a, x, x2, b)
    Cell gamma;         // over (a, z, z2, c)
};

CheckReport ts_check(const SpanInstance& S, const TSMorphism& m);
TSMorphism ts_identity(const SpanInstance& S, const VArrow& x, const VArrow& z);
TSMorphism ts_compose(const SpanInstance& S, const TSMorphism& m1, const TSMorphism& m2);

// γ⊘α over (b, z⊘x, z2⊘x2, c)
Cell hom_apply_right(const SpanInstance& S, const TSMorphism& m);

bool ts_pasting_check(const SpanInstance& S, const TSMorphism& m, const Cell& xi);

// ---------------------------------------------------------------------------
// Closedness report: adjunction bijections, evaluation triangles and witness
// invertibility on one compatible configuration (x: A -|-> B, y: B -|-> C,
// z: A -|-> C, f: A' -> A, g: C' -> C).

struct ClosedReport {
    LawReport left, right;
    bool closed() const { return left.ok() && right.ok(); }
};

ClosedReport closed_check(const SpanInstance& S, const VArrow& x, const VArrow& y,
                          const VArrow& z, const HArrow& f, const HArrow& g);

}  // namespace rk
