#pragma once
// Concrete descriptions of retrocells and coretrocells in the shipped
// instances, as explicit converters.
//
// In Span a retrocell over (f, S, T, g) is the same thing as a lifting
// function beta : T x_B A -> S with sigma0(beta(t,a)) = a and
// g(sigma1(beta(t,a))) = tau1(t); a coretrocell is the fibration-like dual
// lifting T x_D C -> S.  In Mat(F_p) a retrocell is a family of linear maps
// phi_{a,d} : W_{f a, d} -> sum_{g c = d} V_{a,c}.  In Prof a retrocell is a
// natural transformation Q (x) F_* -> G_* (x) P; its lifting data is only
// canonical up to the coend zigzags, so we expose the representative map.

#include <map>
#include <tuple>

#include "mat.hpp"
#include "prof.hpp"
#include "retro.hpp"
#include "span.hpp"

namespace rk {

// Span converters.  Lifting keys are [t a] (resp. [t c]).
VMap span_retro_to_lifting(const SpanInstance& Sp, const Retrocell& r);
Retrocell span_lifting_to_retro(const SpanInstance& Sp, const HArrow& f, const VArrow& S,
                                const VArrow& T, const HArrow& g, const VMap& beta);
VMap span_coretro_to_lifting(const SpanInstance& Sp, const Coretrocell& r);
Coretrocell span_lifting_to_coretro(const SpanInstance& Sp, const HArrow& f, const VArrow& S,
                                    const VArrow& T, const HArrow& g, const VMap& beta);

// Mat converters: components are keyed (a, d, from-basis-elt) with values
// the image as (to-basis-elt, coefficient) pairs — the same shape that
// MatInstance::cell takes.
using MatCellData =
    std::map<std::tuple<Value, Value, Value>, std::vector<std::pair<Value, int>>>;
MatCellData mat_retro_components(const MatInstance& M, const Retrocell& r);
Retrocell mat_retro_from_components(const MatInstance& M, const HArrow& f, const VArrow& V,
                                    const VArrow& W, const HArrow& g,
                                    const MatCellData& comp);

// Prof: for each representative of (Q ⊗ F_*)(a, d) the representative of its
// image in (G_* ⊗ P)(a, d); keys are [a d rep].
std::map<std::array<Value, 3>, Value> prof_retro_lifting(const ProfInstance& Pr,
                                                         const Retrocell& r);

}  // namespace rk
