#pragma once
// Prof: objects are finite categories, horizontal arrows functors, vertical
// arrows profunctors P : A -|-> C (sets P(a,c) with a left A-action and a
// right C-action), cells natural families.  Composition Q⊗P is the usual
// coend: pairs (p,q) modulo the zigzag relation, implemented with a
// union-find whose class representatives are the least triples [c p q].
// Composition is associative/unital only up to canonical isos.

#include <array>

#include "core.hpp"
#include "finset.hpp"

namespace rk {

struct FinArr {
    Value name, src, dst;
};

struct FinCat {
    VSet objects;
    std::vector<FinArr> arrows;                       // sorted by name
    VMap unit;                                        // object -> identity arrow name
    std::map<std::pair<Value, Value>, Value> comp;    // (g, f) -> g∘f  (g after f)

    Value encode() const;
    static FinCat decode(const Value& v);
    void validate() const;  // totality, units, associativity

    const FinArr& arr(const Value& name) const;
    Value id(const Value& obj) const { return unit.at(obj); }
    Value compose(const Value& g, const Value& f) const;
    std::vector<Value> hom(const Value& a, const Value& b) const;
};

class ProfInstance : public Instance {
public:
    std::string name() const override { return "Prof"; }
    bool strict() const override { return false; }

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

    bool has_companions() const override { return true; }
    VArrow companion(const HArrow& f) const override;
    Cell psi(const HArrow& f) const override;
    Cell chi(const HArrow& f) const override;
    bool has_conjoints() const override { return true; }
    VArrow conjoint(const HArrow& f) const override;
    Cell conj_alpha(const HArrow& f) const override;
    Cell conj_beta(const HArrow& f) const override;

    // constructors / accessors
    static HArrow functor(const FinCat& A, const FinCat& B, const VMap& omap,
                          const VMap& amap);  // validated
    // profunctor from explicit element sets and actions;
    // lact[{a,c,p,m}] = p·m-ish: action of A-arrow m: a'->a, giving element of P(a',c)
    // ract[{a,c,p,n}] = action of C-arrow n: c->c', giving element of P(a,c')
    static VArrow prof(const FinCat& A, const FinCat& C,
                       const std::map<std::pair<Value, Value>, VSet>& elems,
                       const std::map<std::array<Value, 4>, Value>& lact,
                       const std::map<std::array<Value, 4>, Value>& ract);
    static std::vector<Value> elements(const VArrow& p, const Value& a, const Value& c);
    static Value left_act(const VArrow& p, const Value& a, const Value& c, const Value& el,
                          const Value& m);
    static Value right_act(const VArrow& p, const Value& a, const Value& c, const Value& el,
                           const Value& n);
    static Value fob(const HArrow& f, const Value& a);   // functor on objects
    static Value farr(const HArrow& f, const Value& m);  // functor on arrows
    Cell cell(const Boundary& b, const std::map<std::array<Value, 3>, Value>& mapping) const;
    static Value cell_apply(const Cell& c, const Value& a, const Value& cc, const Value& el);

    // canonical representative of a pair in the composite vcomp(q, p)
    static Value comp_rep(const VArrow& q, const VArrow& p, const Value& a, const Value& e,
                          const Value& triple);
};

// small category builders used by tests and the script driver
FinCat discrete_cat(const VSet& objects);
FinCat monoid_cat(const Value& obj, const VSet& elems, const Value& unit,
                  const std::map<std::pair<Value, Value>, Value>& mult);
FinCat poset_cat(const VSet& objects, const std::vector<std::pair<Value, Value>>& le);

}  // namespace rk
