#pragma once
// Retrocells and coretrocells over a double category with companions
// (resp. conjoints), the double categories ret(A), co(A), op(A), cor(A),
// and the double-dual translation.
//
// A retrocell with declared boundary (f: A->B, v: A->C, w: B->D, g: C->D)
// is carried by a globular cell  w∘f_*  =>  g_*∘v.  A coretrocell with the
// same boundary is carried by a globular cell  g^*∘w  =>  v∘f^*.  The
// declared boundary is stored separately: the carrier alone does not
// determine it.

#include <memory>

#include "companions.hpp"
#include "core.hpp"

namespace rk {

struct Retrocell {
    HArrow f, g;   // top, bottom
    VArrow v, w;   // left, right
    TCell under;   // globular  w∘f_* => g_*∘v, canonical bracketing
    VExpr vx, wx;  // factorizations of v and w as composition expressions;
                   // composites built by retro composition keep their factors
                   // visible here so carriers can be transported coherently

    friend bool operator==(const Retrocell& a, const Retrocell& b) {
        return a.f == b.f && a.g == b.g && a.v == b.v && a.w == b.w &&
               a.under.cell == b.under.cell;
    }
    friend bool operator!=(const Retrocell& a, const Retrocell& b) { return !(a == b); }
};

struct Coretrocell {
    HArrow f, g;
    VArrow v, w;
    TCell under;   // globular  g^*∘w => v∘f^*, canonical bracketing
    VExpr vx, wx;  // factorizations of v and w, as in Retrocell

    friend bool operator==(const Coretrocell& a, const Coretrocell& b) {
        return a.f == b.f && a.g == b.g && a.v == b.v && a.w == b.w &&
               a.under.cell == b.under.cell;
    }
    friend bool operator!=(const Coretrocell& a, const Coretrocell& b) { return !(a == b); }
};

// Construction: validates the carrier boundary and transports it onto the
// canonical bracketing  (w∘f_* , g_*∘v).
Retrocell make_retrocell(const Instance& A, const HArrow& f, const VArrow& v,
                         const VArrow& w, const HArrow& g, const TCell& under);
Retrocell make_retrocell(const Instance& A, const HArrow& f, const VArrow& v,
                         const VArrow& w, const HArrow& g, const Cell& under);
// variant with explicit factorizations of v and w (needed when a frame arrow
// is itself a composite whose factors matter for coherent transport)
Retrocell make_retrocell(const Instance& A, const HArrow& f, const VArrow& v,
                         const VArrow& w, const HArrow& g, const TCell& under, VExpr vx,
                         VExpr wx);
Coretrocell make_coretrocell(const Instance& A, const HArrow& f, const VArrow& v,
                             const VArrow& w, const HArrow& g, const TCell& under);
Coretrocell make_coretrocell(const Instance& A, const HArrow& f, const VArrow& v,
                             const VArrow& w, const HArrow& g, const Cell& under);

// identities and composition of retrocells
Retrocell retro_vid(const Instance& A, const HArrow& f);
Retrocell retro_hid(const Instance& A, const VArrow& v);
// a globular retrocell x => y over (1,x,y,1) from a base cell y => x
Retrocell retro_globular(const Instance& A, const VArrow& x, const VArrow& y,
                         const Cell& down);
Retrocell retro_hcompose(const Instance& A, const Retrocell& a, const Retrocell& b);
Retrocell retro_vcompose(const Instance& A, const Retrocell& t, const Retrocell& b);
std::vector<Retrocell> enumerate_retrocells(const Instance& A, const Boundary& bd);

// identities and composition of coretrocells
Coretrocell coretro_vid(const Instance& A, const HArrow& f);
Coretrocell coretro_hid(const Instance& A, const VArrow& v);
Coretrocell coretro_hcompose(const Instance& A, const Coretrocell& a, const Coretrocell& b);
Coretrocell coretro_vcompose(const Instance& A, const Coretrocell& t, const Coretrocell& b);
std::vector<Coretrocell> enumerate_coretrocells(const Instance& A, const Boundary& bd);

// ---------------------------------------------------------------------------
// Instance wrappers.

// ret(A): same objects and arrows, cells are retrocells; companions are the
// canonical ones of the base.  A ret-instance cell stores the carrier's
// payload; the carrier is reconstructible from the boundary.
class RetInstance : public Instance {
public:
    explicit RetInstance(std::shared_ptr<const Instance> base);

    std::string name() const override;
    bool strict() const override;
    HArrow hid(const Value& obj) const override;
    VArrow vid(const Value& obj) const override;
    HArrow hcomp(const HArrow& second, const HArrow& first) const override;
    VArrow vcomp(const VArrow& second, const VArrow& first) const override;
    Cell cell_hid(const HArrow& f) const override;
    Cell cell_vid(const VArrow& v) const override;
    Cell hcompose(const Cell& l, const Cell& r) const override;
    Cell vcompose(const Cell& t, const Cell& b) const override;
    std::vector<Cell> enumerate_cells(const Boundary& b) const override;
    Cell associator(const VArrow& u, const VArrow& v, const VArrow& w) const override;
    Cell associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const override;
    Cell lunitor(const VArrow& v) const override;
    Cell lunitor_inv(const VArrow& v) const override;
    Cell runitor(const VArrow& v) const override;
    Cell runitor_inv(const VArrow& v) const override;
    bool has_companions() const override;
    VArrow companion(const HArrow& f) const override;
    Cell psi(const HArrow& f) const override;
    Cell chi(const HArrow& f) const override;

    Cell from_retro(const Retrocell& r) const;
    Retrocell to_retro(const Cell& c) const;
    const Instance& base() const { return *base_; }

private:
    std::shared_ptr<const Instance> base_;
};

// co(A): vertical arrows reversed, cells flipped top-to-bottom; companions
// and conjoints trade places.
class CoInstance : public Instance {
public:
    explicit CoInstance(std::shared_ptr<const Instance> base);

    std::string name() const override;
    bool strict() const override;
    HArrow hid(const Value& obj) const override;
    VArrow vid(const Value& obj) const override;
    HArrow hcomp(const HArrow& second, const HArrow& first) const override;
    VArrow vcomp(const VArrow& second, const VArrow& first) const override;
    Cell cell_hid(const HArrow& f) const override;
    Cell cell_vid(const VArrow& v) const override;
    Cell hcompose(const Cell& l, const Cell& r) const override;
    Cell vcompose(const Cell& t, const Cell& b) const override;
    std::vector<Cell> enumerate_cells(const Boundary& b) const override;
    Cell associator(const VArrow& u, const VArrow& v, const VArrow& w) const override;
    Cell associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const override;
    Cell lunitor(const VArrow& v) const override;
    Cell lunitor_inv(const VArrow& v) const override;
    Cell runitor(const VArrow& v) const override;
    Cell runitor_inv(const VArrow& v) const override;
    bool has_companions() const override;
    VArrow companion(const HArrow& f) const override;
    Cell psi(const HArrow& f) const override;
    Cell chi(const HArrow& f) const override;
    bool has_conjoints() const override;
    VArrow conjoint(const HArrow& f) const override;
    Cell conj_alpha(const HArrow& f) const override;
    Cell conj_beta(const HArrow& f) const override;

    VArrow vflip(const VArrow& v) const;   // same payload, reversed endpoints
    Cell cflip(const Cell& c) const;       // base cell <-> co cell
    const Instance& base() const { return *base_; }

private:
    std::shared_ptr<const Instance> base_;
};

// op(A): horizontal arrows reversed, cells flipped left-to-right.
class OpInstance : public Instance {
public:
    explicit OpInstance(std::shared_ptr<const Instance> base);

    std::string name() const override;
    bool strict() const override;
    HArrow hid(const Value& obj) const override;
    VArrow vid(const Value& obj) const override;
    HArrow hcomp(const HArrow& second, const HArrow& first) const override;
    VArrow vcomp(const VArrow& second, const VArrow& first) const override;
    Cell cell_hid(const HArrow& f) const override;
    Cell cell_vid(const VArrow& v) const override;
    Cell hcompose(const Cell& l, const Cell& r) const override;
    Cell vcompose(const Cell& t, const Cell& b) const override;
    std::vector<Cell> enumerate_cells(const Boundary& b) const override;
    Cell associator(const VArrow& u, const VArrow& v, const VArrow& w) const override;
    Cell associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const override;
    Cell lunitor(const VArrow& v) const override;
    Cell lunitor_inv(const VArrow& v) const override;
    Cell runitor(const VArrow& v) const override;
    Cell runitor_inv(const VArrow& v) const override;
    bool has_companions() const override;
    VArrow companion(const HArrow& f) const override;
    Cell psi(const HArrow& f) const override;
    Cell chi(const HArrow& f) const override;
    bool has_conjoints() const override;
    VArrow conjoint(const HArrow& f) const override;
    Cell conj_alpha(const HArrow& f) const override;
    Cell conj_beta(const HArrow& f) const override;

    HArrow hflip(const HArrow& f) const;
    Cell cflip(const Cell& c) const;
    const Instance& base() const { return *base_; }

private:
    std::shared_ptr<const Instance> base_;
};

// cor(A) = co(ret(co(A)))  (coretrocells as cells).
std::shared_ptr<Instance> make_cor(std::shared_ptr<const Instance> base);

// Duality translation: a coretrocell of A is a retrocell of co(A) with
// boundary (g, v-reversed, w-reversed, f).  Mutually inverse.
Retrocell coretro_to_co_retro(const CoInstance& Aco, const Coretrocell& c);
Coretrocell co_retro_to_coretro(const CoInstance& Aco, const Retrocell& r);

// double dual (Thm on ret(ret(A))): cell of A over (f,v,w,g)  <->  cell of
// ret(ret(A)) with the same boundary.  Mutually inverse bijections.
Cell double_dual_to(const RetInstance& Aretret, const Cell& c);
Cell double_dual_from(const RetInstance& Aretret, const Cell& c);

}  // namespace rk
