#pragma once
// Rel: objects are finite sets, horizontal arrows are functions, vertical
// arrows are relations, and there is at most one cell in each boundary:
// a cell over (f, R, S, g) exists iff a R c implies (f a) S (g c).
// Everything is strict; companions and conjoints are graphs of functions.

#include "core.hpp"
#include "finset.hpp"

namespace rk {

class RelInstance : public Instance {
public:
    std::string name() const override { return "Rel"; }
    bool strict() const override { return true; }

    HArrow hid(const Value& obj) const override;
    VArrow vid(const Value& obj) const override;
    HArrow hcomp(const HArrow& second, const HArrow& first) const override;
    VArrow vcomp(const VArrow& second, const VArrow& first) const override;

    Cell cell_hid(const HArrow& f) const override;
    Cell cell_vid(const VArrow& v) const override;
    Cell hcompose(const Cell& l, const Cell& r) const override;
    Cell vcompose(const Cell& t, const Cell& b) const override;
    std::vector<Cell> enumerate_cells(const Boundary& b) const override;

    bool has_companions() const override { return true; }
    VArrow companion(const HArrow& f) const override;
    Cell psi(const HArrow& f) const override;
    Cell chi(const HArrow& f) const override;
    bool has_conjoints() const override { return true; }
    VArrow conjoint(const HArrow& f) const override;
    Cell conj_alpha(const HArrow& f) const override;
    Cell conj_beta(const HArrow& f) const override;

    // constructors / predicates
    static Value obj(VSet elems);
    static HArrow fn(const Value& src, const Value& dst, const VMap& m);
    static VArrow rel(const Value& src, const Value& dst,
                      const std::vector<std::pair<Value, Value>>& pairs);
    static bool related(const VArrow& r, const Value& a, const Value& c);
    bool cell_exists(const Boundary& b) const;
    Cell cell(const Boundary& b) const;  // throws if the implication fails
};

// the characterizations of retro- and coretrocells in Rel
// retrocell over (f,R,S,g) exists iff:  fa S d  =>  exists c with a R c, g c = d
bool rel_retro_exists(const HArrow& f, const VArrow& R, const VArrow& S, const HArrow& g);
// coretrocell over (f,R,S,g) exists iff:  b S gc  =>  exists a with a R c, f a = b
bool rel_coretro_exists(const HArrow& f, const VArrow& R, const VArrow& S, const HArrow& g);

}  // namespace rk
