#include "retrokit/rel.hpp"

namespace rk {

static const VSet& elems(const Value& obj) { return obj.list(); }

Value RelInstance::obj(VSet e) {
    canonicalize(e);
    return Value(std::move(e));
}

HArrow RelInstance::fn(const Value& src, const Value& dst, const VMap& m) {
    Value g = graph_of(m);
    if (!is_function(g, elems(src), elems(dst)))
        throw BoundaryError("Rel: not a function " + show(g));
    return {src, dst, g};
}

VArrow RelInstance::rel(const Value& src, const Value& dst,
                        const std::vector<std::pair<Value, Value>>& pairs) {
    VSet ps;
    for (auto& [a, c] : pairs) {
        if (!contains(elems(src), a) || !contains(elems(dst), c))
            throw BoundaryError("Rel: pair (" + show(a) + "," + show(c) + ") out of range");
        ps.push_back(vpair(a, c));
    }
    canonicalize(ps);
    return {src, dst, Value(ps)};
}

bool RelInstance::related(const VArrow& r, const Value& a, const Value& c) {
    return contains(r.pay.list(), vpair(a, c));
}

HArrow RelInstance::hid(const Value& o) const { return {o, o, identity_graph(elems(o))}; }

VArrow RelInstance::vid(const Value& o) const {
    VSet ps;
    for (auto& x : elems(o)) ps.push_back(vpair(x, x));
    return {o, o, Value(ps)};
}

HArrow RelInstance::hcomp(const HArrow& g, const HArrow& f) const {
    if (f.dst != g.src) throw BoundaryError("Rel hcomp: mismatch");
    return {f.src, g.dst, compose_graphs(g.pay, f.pay)};
}

VArrow RelInstance::vcomp(const VArrow& s, const VArrow& r) const {
    if (r.dst != s.src) throw BoundaryError("Rel vcomp: mismatch");
    VSet ps;
    for (auto& p : r.pay.list())
        for (auto& q : s.pay.list())
            if (p.list()[1] == q.list()[0]) ps.push_back(vpair(p.list()[0], q.list()[1]));
    canonicalize(ps);
    return {r.src, s.dst, Value(ps)};
}

bool RelInstance::cell_exists(const Boundary& b) const {
    for (auto& p : b.left.pay.list()) {
        Value fa = apply(b.top.pay, p.list()[0]);
        Value gc = apply(b.bottom.pay, p.list()[1]);
        if (!related(b.right, fa, gc)) return false;
    }
    return true;
}

Cell RelInstance::cell(const Boundary& b) const {
    if (b.top.src != b.left.src || b.top.dst != b.right.src ||
        b.bottom.src != b.left.dst || b.bottom.dst != b.right.dst)
        throw BoundaryError("Rel cell: boundary does not close up " + show_boundary(b));
    if (!cell_exists(b))
        throw BoundaryError("Rel cell: inclusion fails for " + show_boundary(b));
    return {b.top, b.left, b.right, b.bottom, Value()};
}

Cell RelInstance::cell_hid(const HArrow& f) const {
    return cell({f, vid(f.src), vid(f.dst), f});
}
Cell RelInstance::cell_vid(const VArrow& v) const {
    return cell({hid(v.src), v, v, hid(v.dst)});
}

Cell RelInstance::hcompose(const Cell& l, const Cell& r) const {
    if (l.right != r.left) throw BoundaryError("Rel hcompose: middle mismatch");
    return cell({hcomp(r.top, l.top), l.left, r.right, hcomp(r.bottom, l.bottom)});
}

Cell RelInstance::vcompose(const Cell& t, const Cell& b) const {
    if (t.bottom != b.top) throw BoundaryError("Rel vcompose: middle mismatch");
    return cell({t.top, vcomp(b.left, t.left), vcomp(b.right, t.right), b.bottom});
}

std::vector<Cell> RelInstance::enumerate_cells(const Boundary& b) const {
    if (cell_exists(b)) return {cell(b)};
    return {};
}

VArrow RelInstance::companion(const HArrow& f) const {
    VSet ps;
    for (auto& e : f.pay.list()) ps.push_back(vpair(e.list()[0], e.list()[1]));
    canonicalize(ps);
    return {f.src, f.dst, Value(ps)};
}
Cell RelInstance::psi(const HArrow& f) const {
    return cell({hid(f.src), vid(f.src), companion(f), f});
}
Cell RelInstance::chi(const HArrow& f) const {
    return cell({f, companion(f), vid(f.dst), hid(f.dst)});
}

VArrow RelInstance::conjoint(const HArrow& f) const {
    VSet ps;
    for (auto& e : f.pay.list()) ps.push_back(vpair(e.list()[1], e.list()[0]));
    canonicalize(ps);
    return {f.dst, f.src, Value(ps)};
}
Cell RelInstance::conj_alpha(const HArrow& f) const {
    return cell({f, vid(f.src), conjoint(f), hid(f.src)});
}
Cell RelInstance::conj_beta(const HArrow& f) const {
    return cell({hid(f.dst), conjoint(f), vid(f.dst), f});
}

bool rel_retro_exists(const HArrow& f, const VArrow& R, const VArrow& S, const HArrow& g) {
    for (auto& a : f.src.list()) {
        Value fa = apply(f.pay, a);
        for (auto& d : S.dst.list()) {
            if (!RelInstance::related(S, fa, d)) continue;
            bool ok = false;
            for (auto& c : R.dst.list())
                if (RelInstance::related(R, a, c) && apply(g.pay, c) == d) ok = true;
            if (!ok) return false;
        }
    }
    return true;
}

bool rel_coretro_exists(const HArrow& f, const VArrow& R, const VArrow& S, const HArrow& g) {
    for (auto& c : R.dst.list()) {
        Value gc = apply(g.pay, c);
        for (auto& b : S.src.list()) {
            if (!RelInstance::related(S, b, gc)) continue;
            bool ok = false;
            for (auto& a : R.src.list())
                if (RelInstance::related(R, a, c) && apply(f.pay, a) == b) ok = true;
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace rk
