#pragma once
// Mat(F_p): objects are finite index sets, horizontal arrows functions,
// vertical arrows are matrices of F_p-vector spaces and cells are matrices of
// linear maps.  Each entry space carries an explicit ordered basis whose
// elements are flat lists of atoms; the composite entry at (a,e) has basis
// { p ++ q : p in V(a,c), q in W(c,e) } (sorted).  Because list concatenation
// is associative with [] as unit, vertical composition is strictly
// associative and unital on the nose, so this instance is strict.
//
// The span/matrix constructors tag generated atoms with the matrix name and
// the entry indices, which keeps concatenations of distinct splittings
// distinct; compositions verify this and throw on a collision.

#include "core.hpp"
#include "finset.hpp"

namespace rk {

class MatInstance : public Instance {
public:
    explicit MatInstance(int p = 2) : p_(p) {}

    std::string name() const override { return "Mat(F" + std::to_string(p_) + ")"; }
    bool strict() const override { return true; }
    int modulus() const { return p_; }

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

    // constructors
    static Value obj(VSet idx);
    static HArrow fn(const Value& src, const Value& dst, const VMap& m);
    // matrix of spaces with given dimensions; atoms are tagged with `tag`
    static VArrow matrix(const std::string& tag, const Value& src, const Value& dst,
                         const std::map<std::pair<Value, Value>, int>& dims);
    static std::vector<Value> basis(const VArrow& v, const Value& a, const Value& c);
    // cell from explicit linear data: for each (a,c) and source basis element,
    // the list of (target basis element, coefficient) pairs
    Cell cell(const Boundary& b,
              const std::map<std::tuple<Value, Value, Value>,
                             std::vector<std::pair<Value, int>>>& entries) const;
    // coefficient of `to` in the image of `from` (basis elements at entry (a,c))
    static int coeff(const Cell& c, const Value& a, const Value& cc, const Value& from,
                     const Value& to);

private:
    int p_;
    int norm(long long k) const { return static_cast<int>(((k % p_) + p_) % p_); }
};

}  // namespace rk
