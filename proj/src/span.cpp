#include "retrokit/span.hpp"

namespace rk {

// span payload: [apex-list, left-graph, right-graph]
static Value span_pay(const VSet& apex, const Value& lg, const Value& rg) {
    return Value(ValueList{Value(apex), lg, rg});
}

const VSet& SpanInstance::apex(const VArrow& v) { return v.pay.list()[0].list(); }
static const Value& lgraph(const VArrow& v) { return v.pay.list()[1]; }
static const Value& rgraph(const VArrow& v) { return v.pay.list()[2]; }
Value SpanInstance::leg0(const VArrow& v, const Value& s) { return apply(lgraph(v), s); }
Value SpanInstance::leg1(const VArrow& v, const Value& s) { return apply(rgraph(v), s); }

Value SpanInstance::obj(VSet e) {
    canonicalize(e);
    return Value(std::move(e));
}

HArrow SpanInstance::fn(const Value& src, const Value& dst, const VMap& m) {
    Value g = graph_of(m);
    if (!is_function(g, src.list(), dst.list()))
        throw BoundaryError("Span: not a function " + show(g));
    return {src, dst, g};
}

VArrow SpanInstance::span(const Value& src, const Value& dst, VSet ap, const VMap& l,
                          const VMap& r) {
    canonicalize(ap);
    Value lg = graph_of(l), rg = graph_of(r);
    if (!is_function(lg, ap, src.list()) || !is_function(rg, ap, dst.list()))
        throw BoundaryError("Span: bad legs");
    return {src, dst, span_pay(ap, lg, rg)};
}

HArrow SpanInstance::hid(const Value& o) const { return {o, o, identity_graph(o.list())}; }

VArrow SpanInstance::vid(const Value& o) const {
    Value ig = identity_graph(o.list());
    return {o, o, span_pay(o.list(), ig, ig)};
}

HArrow SpanInstance::hcomp(const HArrow& g, const HArrow& f) const {
    if (f.dst != g.src) throw BoundaryError("Span hcomp: mismatch");
    return {f.src, g.dst, compose_graphs(g.pay, f.pay)};
}

VArrow SpanInstance::vcomp(const VArrow& t, const VArrow& s) const {
    if (s.dst != t.src) throw BoundaryError("Span vcomp: mismatch");
    VSet ap;
    VMap l, r;
    for (auto& x : apex(s))
        for (auto& y : apex(t))
            if (leg1(s, x) == leg0(t, y)) {
                Value p = vpair(x, y);
                ap.push_back(p);
                l[p] = leg0(s, x);
                r[p] = leg1(t, y);
            }
    return {s.src, t.dst, span_pay(ap, graph_of(l), graph_of(r))};
}

Cell SpanInstance::cell(const Boundary& b, const VMap& m) const {
    if (b.top.src != b.left.src || b.top.dst != b.right.src ||
        b.bottom.src != b.left.dst || b.bottom.dst != b.right.dst)
        throw BoundaryError("Span cell: boundary does not close up " + show_boundary(b));
    Value g = graph_of(m);
    if (!is_function(g, apex(b.left), apex(b.right)))
        throw BoundaryError("Span cell: apex map is not a function into the right apex");
    for (auto& [x, y] : m) {
        if (leg0(b.right, y) != apply(b.top.pay, leg0(b.left, x)))
            throw BoundaryError("Span cell: left-leg square fails at " + show(x));
        if (leg1(b.right, y) != apply(b.bottom.pay, leg1(b.left, x)))
            throw BoundaryError("Span cell: right-leg square fails at " + show(x));
    }
    return {b.top, b.left, b.right, b.bottom, g};
}

Value SpanInstance::cell_apply(const Cell& c, const Value& s) { return apply(c.pay, s); }

Cell SpanInstance::cell_hid(const HArrow& f) const {
    VMap m;
    for (auto& x : f.src.list()) m[x] = apply(f.pay, x);
    return cell({f, vid(f.src), vid(f.dst), f}, m);
}

Cell SpanInstance::cell_vid(const VArrow& v) const {
    VMap m;
    for (auto& x : apex(v)) m[x] = x;
    return cell({hid(v.src), v, v, hid(v.dst)}, m);
}

Cell SpanInstance::hcompose(const Cell& l, const Cell& r) const {
    if (l.right != r.left) throw BoundaryError("Span hcompose: middle mismatch");
    VMap m;
    for (auto& x : apex(l.left)) m[x] = apply(r.pay, apply(l.pay, x));
    return cell({hcomp(r.top, l.top), l.left, r.right, hcomp(r.bottom, l.bottom)}, m);
}

Cell SpanInstance::vcompose(const Cell& t, const Cell& b) const {
    if (t.bottom != b.top) throw BoundaryError("Span vcompose: middle mismatch");
    VArrow lv = vcomp(b.left, t.left), rv = vcomp(b.right, t.right);
    VMap m;
    for (auto& p : apex(lv))
        m[p] = vpair(apply(t.pay, p.list()[0]), apply(b.pay, p.list()[1]));
    return cell({t.top, lv, rv, b.bottom}, m);
}

std::vector<Cell> SpanInstance::enumerate_cells(const Boundary& b) const {
    std::vector<Cell> out;
    for_each_function(apex(b.left), apex(b.right), [&](const VMap& m) {
        bool ok = true;
        for (auto& [x, y] : m) {
            if (leg0(b.right, y) != apply(b.top.pay, leg0(b.left, x)) ||
                leg1(b.right, y) != apply(b.bottom.pay, leg1(b.left, x))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(Cell{b.top, b.left, b.right, b.bottom, graph_of(m)});
        return true;
    });
    return out;
}

// coherence: re-pairing maps between chosen-pullback apexes
Cell SpanInstance::associator(const VArrow& u, const VArrow& v, const VArrow& w) const {
    VArrow lhs = vcomp(vcomp(w, v), u);  // pairs [xu [xv xw]]
    VArrow rhs = vcomp(w, vcomp(v, u));  // pairs [[xu xv] xw]
    VMap m;
    for (auto& p : apex(lhs)) {
        const Value& xu = p.list()[0];
        const Value& xv = p.list()[1].list()[0];
        const Value& xw = p.list()[1].list()[1];
        m[p] = vpair(vpair(xu, xv), xw);
    }
    return cell({hid(lhs.src), lhs, rhs, hid(lhs.dst)}, m);
}

Cell SpanInstance::associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const {
    VArrow lhs = vcomp(w, vcomp(v, u));
    VArrow rhs = vcomp(vcomp(w, v), u);
    VMap m;
    for (auto& p : apex(lhs)) {
        const Value& xu = p.list()[0].list()[0];
        const Value& xv = p.list()[0].list()[1];
        const Value& xw = p.list()[1];
        m[p] = vpair(xu, vpair(xv, xw));
    }
    return cell({hid(lhs.src), lhs, rhs, hid(lhs.dst)}, m);
}

Cell SpanInstance::lunitor(const VArrow& v) const {
    VArrow lhs = vcomp(vid(v.dst), v);  // pairs [x c]
    VMap m;
    for (auto& p : apex(lhs)) m[p] = p.list()[0];
    return cell({hid(v.src), lhs, v, hid(v.dst)}, m);
}
Cell SpanInstance::lunitor_inv(const VArrow& v) const {
    VArrow rhs = vcomp(vid(v.dst), v);
    VMap m;
    for (auto& x : apex(v)) m[x] = vpair(x, leg1(v, x));
    return cell({hid(v.src), v, rhs, hid(v.dst)}, m);
}
Cell SpanInstance::runitor(const VArrow& v) const {
    VArrow lhs = vcomp(v, vid(v.src));  // pairs [a x]
    VMap m;
    for (auto& p : apex(lhs)) m[p] = p.list()[1];
    return cell({hid(v.src), lhs, v, hid(v.dst)}, m);
}
Cell SpanInstance::runitor_inv(const VArrow& v) const {
    VArrow rhs = vcomp(v, vid(v.src));
    VMap m;
    for (auto& x : apex(v)) m[x] = vpair(leg0(v, x), x);
    return cell({hid(v.src), v, rhs, hid(v.dst)}, m);
}

VArrow SpanInstance::companion(const HArrow& f) const {
    VMap l, r;
    for (auto& a : f.src.list()) {
        l[a] = a;
        r[a] = apply(f.pay, a);
    }
    return {f.src, f.dst, span_pay(f.src.list(), graph_of(l), graph_of(r))};
}
Cell SpanInstance::psi(const HArrow& f) const {
    VMap m;
    for (auto& a : f.src.list()) m[a] = a;
    return cell({hid(f.src), vid(f.src), companion(f), f}, m);
}
Cell SpanInstance::chi(const HArrow& f) const {
    VMap m;
    for (auto& a : f.src.list()) m[a] = apply(f.pay, a);
    return cell({f, companion(f), vid(f.dst), hid(f.dst)}, m);
}

VArrow SpanInstance::conjoint(const HArrow& f) const {
    VMap l, r;
    for (auto& a : f.src.list()) {
        l[a] = apply(f.pay, a);
        r[a] = a;
    }
    return {f.dst, f.src, span_pay(f.src.list(), graph_of(l), graph_of(r))};
}
Cell SpanInstance::conj_alpha(const HArrow& f) const {
    VMap m;
    for (auto& a : f.src.list()) m[a] = a;
    return cell({f, vid(f.src), conjoint(f), hid(f.src)}, m);
}
Cell SpanInstance::conj_beta(const HArrow& f) const {
    VMap m;
    for (auto& a : f.src.list()) m[a] = apply(f.pay, a);
    return cell({hid(f.dst), conjoint(f), vid(f.dst), f}, m);
}

}  // namespace rk
