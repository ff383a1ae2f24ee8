#pragma once
// Adjunctions in the horizontal 2-category and in the vertical bicategory,
// the companion/conjoint transports between them, and the mates bijections
// relating cells with retrocells (and coretrocells).
//
// Conventions:
//   * HAdjunction left ⊣ right:  left: Y->X, right: X->Y,
//       counit: top hcomp(left,right) over the X frame, bottom 1_X,
//       unit:   top 1_Y, bottom hcomp(right,left) over the Y frame.
//   * VAdjunction left ⊣ right:  left: Y-|->X, right: X-|->Y,
//       counit: globular  left∘right => id_X,
//       unit:   globular  id_Y => right∘left.
// Triangle identities are checked at construction (up to coherence; they are
// exact equalities in strict instances).

#include <memory>
#include <utility>

#include "retro.hpp"

namespace rk {

struct HAdjunction {
    HArrow left, right;
    Cell counit, unit;
};

struct VAdjunction {
    VArrow left, right;
    TCell counit, unit;
};

// validating constructors; throw BoundaryError on bad boundaries or failed
// triangle identities
HAdjunction make_hadjunction(const Instance& A, const HArrow& left, const HArrow& right,
                             const Cell& counit, const Cell& unit);
VAdjunction make_vadjunction(const Instance& A, const VArrow& left, const VArrow& right,
                             const TCell& counit, const TCell& unit);

// 1_X ⊣ 1_X and id_X ⊣ id_X
HAdjunction trivial_hadjunction(const Instance& A, const Value& obj);
VAdjunction trivial_vadjunction(const Instance& A, const Value& obj);

// f_* ⊣ f^* with unit ψ_f ; conj_alpha_f and counit conj_beta_f ; χ_f
// (needs companions and conjoints)
VAdjunction canonical_vadjunction(const Instance& A, const HArrow& f);

// The twelve sliding/flipping forms of an adjunction h ⊣ f (Prop 4.3).
// a1..a3 / b1..b3 need companions; a4..a6 / b4..b6 need conjoints too.
struct AdjForms {
    TCell a1, a2, a3, b1, b2, b3;        // α₁..α₃, β₁..β₃
    bool has_conj = false;
    TCell a4, a5, a6, b4, b5, b6;        // α₄..α₆, β₄..β₆
};
AdjForms adjunction_forms(const Instance& A, const HAdjunction& adj);

// h ⊣ f  becomes  f_* ⊣ h_*  (unit α₃, counit β₃)
VAdjunction adjunction_transport(const Instance& A, const HAdjunction& adj);
// h ⊣ f  becomes  f^* ⊣ h^*  (counit α₆, unit β₆); needs conjoints
VAdjunction adjunction_transport_conj(const Instance& A, const HAdjunction& adj);
// the form-(5) isomorphism f^* => h_* and its inverse
std::pair<TCell, TCell> adjunction_iso(const Instance& A, const HAdjunction& adj);
// replace the right adjoint of an adjunction along an isomorphism
// iso_fwd: right => r2, iso_bwd: r2 => right
VAdjunction vadj_replace_right(const Instance& A, const VAdjunction& adj,
                               const TCell& iso_fwd, const TCell& iso_bwd,
                               const VArrow& r2);

// mates (Thm 3.2).  (1): given x ⊣ v and y ⊣ w, cells over (f,v,w,g)
// correspond to retrocells over (g,x,y,f).
Retrocell mate_vertical(const Instance& A, const Cell& alpha, const VAdjunction& xv,
                        const VAdjunction& yw);
Cell mate_vertical_inv(const Instance& A, const Retrocell& beta, const VAdjunction& xv,
                       const VAdjunction& yw);
// (2): given h ⊣ f and k ⊣ g, cells over (f,v,w,g) correspond to retrocells
// over (h,w,v,k).
Retrocell mate_horizontal(const Instance& A, const Cell& alpha, const HAdjunction& hf,
                          const HAdjunction& kg);
Cell mate_horizontal_inv(const Instance& A, const Retrocell& gamma, const HAdjunction& hf,
                         const HAdjunction& kg);

// dualizations of adjunction data into ret(A) (adjoints switch sides) and
// co(A) (adjoints switch sides, verticals reverse)
HAdjunction hadj_to_ret(const RetInstance& R, const HAdjunction& adj);
VAdjunction vadj_to_ret(const RetInstance& R, const VAdjunction& adj);
HAdjunction hadj_to_co(const CoInstance& Aco, const HAdjunction& adj);
VAdjunction vadj_to_co(const CoInstance& Aco, const VAdjunction& adj);

// Cor 3.3: with h ⊣ f, k ⊣ g, v ⊣ x and w ⊣ y, cells over (f,v,w,g)
// correspond to cells over (k,y,x,h).  mate_corner is the route
// "horizontal, then vertical in ret(A)"; mate_corner_alt is the
// interchanged route "vertical, then horizontal in ret(A)", which takes the
// interchanged adjunction data (f ⊣ h, g ⊣ k, x ⊣ v, y ⊣ w).  When both
// sets of adjunctions exist the two routes agree.
Cell mate_corner(std::shared_ptr<const Instance> A, const Cell& alpha,
                 const HAdjunction& hf, const HAdjunction& kg, const VAdjunction& vx,
                 const VAdjunction& wy);
Cell mate_corner_inv(std::shared_ptr<const Instance> A, const Cell& delta,
                     const HAdjunction& hf, const HAdjunction& kg, const VAdjunction& vx,
                     const VAdjunction& wy);
Cell mate_corner_alt(std::shared_ptr<const Instance> A, const Cell& alpha,
                     const HAdjunction& fh, const HAdjunction& gk, const VAdjunction& xv,
                     const VAdjunction& yw);

// comates (Thm 4.6; needs conjoints).  (1): given v ⊣ x and w ⊣ y, cells
// over (f,v,w,g) correspond to coretrocells over (g,x,y,f).
Coretrocell comate_vertical(const CoInstance& Aco, const Cell& alpha,
                            const VAdjunction& vx, const VAdjunction& wy);
Cell comate_vertical_inv(const CoInstance& Aco, const Coretrocell& beta,
                         const VAdjunction& vx, const VAdjunction& wy);
// (2): given f ⊣ h and g ⊣ k, cells over (f,v,w,g) correspond to
// coretrocells over (h,w,v,k).
Coretrocell comate_horizontal(const CoInstance& Aco, const Cell& alpha,
                              const HAdjunction& fh, const HAdjunction& gk);
Cell comate_horizontal_inv(const CoInstance& Aco, const Coretrocell& gamma,
                           const HAdjunction& fh, const HAdjunction& gk);

}  // namespace rk
