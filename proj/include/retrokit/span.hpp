#pragma once
// Span(FinSet): objects are finite sets, horizontal arrows functions,
// vertical arrows spans A <- S -> C with a chosen-pullback composite, and
// cells are apex maps commuting with the legs.  Composition of spans is only
// associative/unital up to the re-pairing isomorphisms, which are supplied
// as the coherence cells.

#include "core.hpp"
#include "finset.hpp"

namespace rk {

class SpanInstance : public Instance {
public:
    std::string name() const override { return "Span"; }
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

    // constructors & accessors
    static Value obj(VSet elems);
    static HArrow fn(const Value& src, const Value& dst, const VMap& m);
    // span src <- apex -> dst; left/right are graphs on the apex
    static VArrow span(const Value& src, const Value& dst, VSet apex, const VMap& left,
                       const VMap& right);
    static const VSet& apex(const VArrow& v);
    static Value leg0(const VArrow& v, const Value& s);  // left leg value
    static Value leg1(const VArrow& v, const Value& s);  // right leg value
    static Value cell_apply(const Cell& c, const Value& s);
    // apex-map cell; checks the two leg equations
    Cell cell(const Boundary& b, const VMap& apex_map) const;
};

}  // namespace rk
