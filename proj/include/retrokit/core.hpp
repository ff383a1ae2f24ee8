#pragma once
// Core data model for finite double categories.
//
// A double category here has: objects, horizontal arrows (composed strictly),
// vertical arrows (composed up to coherent associators/unitors), and cells
// with a boundary (top/bottom horizontal, left/right vertical).  A concrete
// instance supplies all operations through the Instance interface; payloads
// are opaque Values interpreted only by the owning instance.
//
// Orientation conventions used throughout:
//   * vcomp(w, v) means "w after v" (v first, then w), written w∘v.
//   * a cell has boundary (top f, left v, right w, bottom g); a globular cell
//     (identity top and bottom) with left v and right w is a 2-cell v => w in
//     the vertical bicategory Vert(A).
//   * associator(u,v,w): (w∘v)∘u => w∘(v∘u)
//   * lunitor(v): id∘v => v,  runitor(v): v∘id => v.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "value.hpp"

namespace rk {

struct HArrow {
    Value src, dst, pay;
    friend bool operator==(const HArrow& a, const HArrow& b) {
        return a.src == b.src && a.dst == b.dst && a.pay == b.pay;
    }
    friend bool operator!=(const HArrow& a, const HArrow& b) { return !(a == b); }
    friend bool operator<(const HArrow& a, const HArrow& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.pay < b.pay;
    }
};

struct VArrow {
    Value src, dst, pay;
    friend bool operator==(const VArrow& a, const VArrow& b) {
        return a.src == b.src && a.dst == b.dst && a.pay == b.pay;
    }
    friend bool operator!=(const VArrow& a, const VArrow& b) { return !(a == b); }
    friend bool operator<(const VArrow& a, const VArrow& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.dst != b.dst) return a.dst < b.dst;
        return a.pay < b.pay;
    }
};

struct Boundary {
    HArrow top;
    VArrow left, right;
    HArrow bottom;
};

struct Cell {
    HArrow top;
    VArrow left, right;
    HArrow bottom;
    Value pay;

    Boundary boundary() const { return {top, left, right, bottom}; }
    friend bool operator==(const Cell& a, const Cell& b) {
        return a.top == b.top && a.left == b.left && a.right == b.right &&
               a.bottom == b.bottom && a.pay == b.pay;
    }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
};

struct DcatError : std::runtime_error {
    explicit DcatError(const std::string& m) : std::runtime_error(m) {}
};
struct BoundaryError : DcatError {
    explicit BoundaryError(const std::string& m) : DcatError(m) {}
};
struct NotFoundError : DcatError {
    explicit NotFoundError(const std::string& m) : DcatError(m) {}
};

std::string show_h(const HArrow& f);
std::string show_v(const VArrow& v);
std::string show_boundary(const Boundary& b);

class Instance {
public:
    virtual ~Instance() = default;

    virtual std::string name() const = 0;
    // strict(): vertical composition is strictly associative and unital, and
    // all coherence cells returned below are identity cells.
    virtual bool strict() const = 0;

    virtual HArrow hid(const Value& obj) const = 0;
    virtual VArrow vid(const Value& obj) const = 0;
    virtual HArrow hcomp(const HArrow& second, const HArrow& first) const = 0;
    virtual VArrow vcomp(const VArrow& second, const VArrow& first) const = 0;

    virtual Cell cell_hid(const HArrow& f) const = 0;  // id_f: horizontal identity cell
    virtual Cell cell_vid(const VArrow& v) const = 0;  // 1_v: vertical identity cell
    virtual Cell hcompose(const Cell& l, const Cell& r) const = 0;  // side by side, l then r
    virtual Cell vcompose(const Cell& t, const Cell& b) const = 0;  // t on top of b

    // all cells with the given boundary (deterministic order)
    virtual std::vector<Cell> enumerate_cells(const Boundary& b) const = 0;

    // Coherence.  Strict instances use the default implementations, which
    // return identity cells.
    virtual Cell associator(const VArrow& u, const VArrow& v, const VArrow& w) const;
    virtual Cell associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const;
    virtual Cell lunitor(const VArrow& v) const;
    virtual Cell lunitor_inv(const VArrow& v) const;
    virtual Cell runitor(const VArrow& v) const;
    virtual Cell runitor_inv(const VArrow& v) const;

    // Companions & conjoints (not every instance has them)
    virtual bool has_companions() const { return false; }
    virtual VArrow companion(const HArrow& f) const;
    virtual Cell psi(const HArrow& f) const;  // (top 1_A, left id_A, right f_*, bottom f)
    virtual Cell chi(const HArrow& f) const;  // (top f, left f_*, right id_B, bottom 1_B)
    virtual bool has_conjoints() const { return false; }
    virtual VArrow conjoint(const HArrow& f) const;
    virtual Cell conj_alpha(const HArrow& f) const;  // (top f, left id_A, right f^*, bottom 1_A)
    virtual Cell conj_beta(const HArrow& f) const;   // (top 1_B, left f^*, right id_B, bottom f)
};

// ---------------------------------------------------------------------------
// Composite-expression trees over vertical arrows, used to drive coherence
// transports in pseudo instances.

struct VExpr {
    enum Kind { Leaf, Id, Comp } kind;
    VArrow leaf;                         // Leaf
    Value obj;                           // Id
    std::shared_ptr<VExpr> after, before;  // Comp: after ∘ before

    static VExpr L(const VArrow& v) { return VExpr{Leaf, v, Value(), nullptr, nullptr}; }
    static VExpr I(const Value& o) { return VExpr{Id, VArrow{}, o, nullptr, nullptr}; }
    static VExpr C(VExpr a, VExpr b) {
        return VExpr{Comp, VArrow{}, Value(),
                     std::make_shared<VExpr>(std::move(a)),
                     std::make_shared<VExpr>(std::move(b))};
    }
};

std::string show_vexpr(const VExpr& e);
VArrow eval_vexpr(const Instance& A, const VExpr& e);

// An invertible globular cell together with its inverse.
struct IsoCell {
    Cell fwd, bwd;
};

// Coherence cell between two bracketings/unit-paddings of the same composite:
// a globular iso  eval(from) => eval(to).  Requires that `from` and `to` have
// the same list of leaves (checked).  Identity cells for strict instances.
IsoCell coherence(const Instance& A, const VExpr& from, const VExpr& to);

// Normal form of an expression: right-nested composite of the leaves with no
// identities (or vid(obj) if there are none), plus the iso into it.
VExpr normal_form_expr(const Instance& A, const VExpr& e);

// ---------------------------------------------------------------------------
// TCell: a cell carrying expression trees for its vertical boundaries.
// Pasting helpers insert coherence cells automatically whenever bracketings
// disagree, so law checks can be written exactly as the pasting diagrams
// read, without hand-placed associators.

struct TCell {
    Cell cell;
    VExpr left, right;
};

TCell tcell(const Instance& A, const Cell& c);  // leaf/id exprs from the boundary
TCell tcell(const Cell& c, VExpr l, VExpr r);

// horizontal: a then b (a on the left); re-brackets a.right to b.left if needed
TCell thcompose(const Instance& A, const TCell& a, const TCell& b);
// vertical: t on top of b
TCell tvcompose(const Instance& A, const TCell& t, const TCell& b);
// transport both vertical boundaries to normal form
Cell tnormalize(const Instance& A, const TCell& c);
// equality after normalization
bool tequal(const Instance& A, const TCell& a, const TCell& b);

// Globular coherence iso eval(from) => eval(to) as a TCell (fwd direction).
TCell tcoherence(const Instance& A, const VExpr& from, const VExpr& to);

}  // namespace rk
