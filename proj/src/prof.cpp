#include "retrokit/prof.hpp"

namespace rk {

// ---------------------------------------------------------------------- cats

Value FinCat::encode() const {
    ValueList arrs;
    for (auto& a : arrows) arrs.push_back(Value(ValueList{a.name, a.src, a.dst}));
    ValueList comps;
    for (auto& [k, v] : comp) comps.push_back(vpair(vpair(k.first, k.second), v));
    ValueList units;
    for (auto& [o, u] : unit) units.push_back(vpair(o, u));
    return Value(ValueList{Value(objects), Value(arrs), Value(units), Value(comps)});
}

FinCat FinCat::decode(const Value& v) {
    FinCat c;
    c.objects = v.list()[0].list();
    for (auto& a : v.list()[1].list())
        c.arrows.push_back({a.list()[0], a.list()[1], a.list()[2]});
    for (auto& u : v.list()[2].list()) c.unit[u.list()[0]] = u.list()[1];
    for (auto& e : v.list()[3].list())
        c.comp[{e.list()[0].list()[0], e.list()[0].list()[1]}] = e.list()[1];
    return c;
}

const FinArr& FinCat::arr(const Value& name) const {
    for (auto& a : arrows)
        if (a.name == name) return a;
    throw NotFoundError("no arrow named " + show(name));
}

Value FinCat::compose(const Value& g, const Value& f) const {
    auto it = comp.find({g, f});
    if (it == comp.end())
        throw BoundaryError("category: no composite " + show(g) + " ∘ " + show(f));
    return it->second;
}

std::vector<Value> FinCat::hom(const Value& a, const Value& b) const {
    std::vector<Value> out;
    for (auto& m : arrows)
        if (m.src == a && m.dst == b) out.push_back(m.name);
    return out;
}

void FinCat::validate() const {
    for (auto& o : objects) {
        const FinArr& u = arr(id(o));
        if (u.src != o || u.dst != o) throw BoundaryError("category: bad identity at " + show(o));
    }
    for (auto& f : arrows) {
        if (!contains(objects, f.src) || !contains(objects, f.dst))
            throw BoundaryError("category: arrow endpoints out of range");
        if (compose(id(f.dst), f.name) != f.name || compose(f.name, id(f.src)) != f.name)
            throw BoundaryError("category: unit law fails at " + show(f.name));
        for (auto& g : arrows) {
            if (g.src != f.dst) continue;
            Value gf = compose(g.name, f.name);
            if (arr(gf).src != f.src || arr(gf).dst != g.dst)
                throw BoundaryError("category: composite endpoints wrong");
            for (auto& h : arrows) {
                if (h.src != g.dst) continue;
                if (compose(h.name, gf) != compose(compose(h.name, g.name), f.name))
                    throw BoundaryError("category: associativity fails");
            }
        }
    }
}

FinCat discrete_cat(const VSet& objects) {
    FinCat c;
    c.objects = objects;
    canonicalize(c.objects);
    for (auto& o : c.objects) {
        Value u = vpair(Value("id"), o);
        c.arrows.push_back({u, o, o});
        c.unit[o] = u;
        c.comp[{u, u}] = u;
    }
    return c;
}

FinCat monoid_cat(const Value& obj, const VSet& elems, const Value& unit,
                  const std::map<std::pair<Value, Value>, Value>& mult) {
    FinCat c;
    c.objects = {obj};
    for (auto& e : elems) c.arrows.push_back({e, obj, obj});
    c.unit[obj] = unit;
    c.comp = mult;
    c.validate();
    return c;
}

FinCat poset_cat(const VSet& objects, const std::vector<std::pair<Value, Value>>& le) {
    FinCat c;
    c.objects = objects;
    canonicalize(c.objects);
    std::vector<std::pair<Value, Value>> rel = le;
    for (auto& o : c.objects) rel.emplace_back(o, o);
    // transitive closure
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& p : std::vector<std::pair<Value, Value>>(rel))
            for (auto& q : std::vector<std::pair<Value, Value>>(rel))
                if (p.second == q.first) {
                    std::pair<Value, Value> pq{p.first, q.second};
                    bool have = false;
                    for (auto& r : rel)
                        if (r == pq) have = true;
                    if (!have) {
                        rel.push_back(pq);
                        changed = true;
                    }
                }
    }
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    for (auto& [a, b] : rel) {
        Value n = vpair(a, b);
        c.arrows.push_back({n, a, b});
        if (a == b) c.unit[a] = n;
    }
    for (auto& [a, b] : rel)
        for (auto& [b2, d] : rel)
            if (b == b2) c.comp[{vpair(b, d), vpair(a, b)}] = vpair(a, d);
    c.validate();
    return c;
}

// --------------------------------------------------------------- profunctors
// payload: [elems, lact, ract]

static Value prof_pay(const std::map<std::pair<Value, Value>, VSet>& elems,
                      const std::map<Value, Value>& lact, const std::map<Value, Value>& ract) {
    ValueList es;
    for (auto& [k, s] : elems) es.push_back(Value(ValueList{k.first, k.second, Value(s)}));
    ValueList ls, rs;
    for (auto& [k, v] : lact) ls.push_back(vpair(k, v));
    for (auto& [k, v] : ract) rs.push_back(vpair(k, v));
    return Value(ValueList{Value(es), Value(ls), Value(rs)});
}

static std::map<std::pair<Value, Value>, VSet> p_elems(const VArrow& p) {
    std::map<std::pair<Value, Value>, VSet> m;
    for (auto& e : p.pay.list()[0].list()) m[{e.list()[0], e.list()[1]}] = e.list()[2].list();
    return m;
}

static Value act_key(const Value& a, const Value& c, const Value& el, const Value& m) {
    return Value(ValueList{a, c, el, m});
}

static Value table_get(const Value& table, const Value& key, const char* what) {
    for (auto& e : table.list())
        if (e.list()[0] == key) return e.list()[1];
    throw NotFoundError(std::string(what) + " undefined at " + show(key));
}

std::vector<Value> ProfInstance::elements(const VArrow& p, const Value& a, const Value& c) {
    auto m = p_elems(p);
    auto it = m.find({a, c});
    return it == m.end() ? std::vector<Value>{} : it->second;
}

Value ProfInstance::left_act(const VArrow& p, const Value& a, const Value& c, const Value& el,
                             const Value& m) {
    return table_get(p.pay.list()[1], act_key(a, c, el, m), "left action");
}
Value ProfInstance::right_act(const VArrow& p, const Value& a, const Value& c, const Value& el,
                              const Value& n) {
    return table_get(p.pay.list()[2], act_key(a, c, el, n), "right action");
}

VArrow ProfInstance::prof(const FinCat& A, const FinCat& C,
                          const std::map<std::pair<Value, Value>, VSet>& elems,
                          const std::map<std::array<Value, 4>, Value>& lact,
                          const std::map<std::array<Value, 4>, Value>& ract) {
    std::map<Value, Value> l, r;
    for (auto& [k, v] : lact) l[act_key(k[0], k[1], k[2], k[3])] = v;
    for (auto& [k, v] : ract) r[act_key(k[0], k[1], k[2], k[3])] = v;
    std::map<std::pair<Value, Value>, VSet> es;
    for (auto& [k, s] : elems) {
        VSet s2 = s;
        canonicalize(s2);
        if (!s2.empty()) es[k] = s2;
    }
    auto get = [&](const Value& a, const Value& c) -> VSet {
        auto it = es.find({a, c});
        return it == es.end() ? VSet{} : it->second;
    };
    VArrow p{A.encode(), C.encode(), prof_pay(es, l, r)};
    // functoriality checks: identities act trivially, composition respected
    for (auto& [k, s] : es) {
        for (auto& el : s) {
            if (left_act(p, k.first, k.second, el, A.id(k.first)) != el)
                throw BoundaryError("prof: left action by identity not trivial");
            if (right_act(p, k.first, k.second, el, C.id(k.second)) != el)
                throw BoundaryError("prof: right action by identity not trivial");
            for (auto& m : A.arrows) {
                if (m.dst != k.first) continue;
                Value em = left_act(p, k.first, k.second, el, m.name);
                if (!contains(get(m.src, k.second), em))
                    throw BoundaryError("prof: left action lands outside element set");
                for (auto& m2 : A.arrows)
                    if (m2.dst == m.src &&
                        left_act(p, m.src, k.second, em, m2.name) !=
                            left_act(p, k.first, k.second, el, A.compose(m.name, m2.name)))
                        throw BoundaryError("prof: left action not functorial");
            }
            for (auto& n : C.arrows) {
                if (n.src != k.second) continue;
                Value en = right_act(p, k.first, k.second, el, n.name);
                if (!contains(get(k.first, n.dst), en))
                    throw BoundaryError("prof: right action lands outside element set");
                for (auto& n2 : C.arrows)
                    if (n2.src == n.dst &&
                        right_act(p, k.first, n.dst, en, n2.name) !=
                            right_act(p, k.first, k.second, el, C.compose(n2.name, n.name)))
                        throw BoundaryError("prof: right action not functorial");
                for (auto& m : A.arrows)
                    if (m.dst == k.first &&
                        right_act(p, m.src, k.second, left_act(p, k.first, k.second, el, m.name),
                                  n.name) !=
                            left_act(p, k.first, n.dst, en, m.name))
                        throw BoundaryError("prof: actions do not commute");
            }
        }
    }
    return p;
}

Value ProfInstance::fob(const HArrow& f, const Value& a) { return apply(f.pay.list()[0], a); }
Value ProfInstance::farr(const HArrow& f, const Value& m) { return apply(f.pay.list()[1], m); }

HArrow ProfInstance::functor(const FinCat& A, const FinCat& B, const VMap& omap,
                             const VMap& amap) {
    HArrow f{A.encode(), B.encode(), Value(ValueList{graph_of(omap), graph_of(amap)})};
    for (auto& o : A.objects)
        if (farr(f, A.id(o)) != B.id(omap.at(o)))
            throw BoundaryError("functor: does not preserve identities");
    for (auto& m : A.arrows) {
        const FinArr& fm = B.arr(amap.at(m.name));
        if (fm.src != omap.at(m.src) || fm.dst != omap.at(m.dst))
            throw BoundaryError("functor: endpoints not preserved at " + show(m.name));
        for (auto& m2 : A.arrows)
            if (m2.dst == m.src &&
                farr(f, A.compose(m.name, m2.name)) !=
                    B.compose(amap.at(m.name), amap.at(m2.name)))
                throw BoundaryError("functor: does not preserve composition");
    }
    return f;
}

HArrow ProfInstance::hid(const Value& o) const {
    FinCat A = FinCat::decode(o);
    VMap om, am;
    for (auto& x : A.objects) om[x] = x;
    for (auto& m : A.arrows) am[m.name] = m.name;
    return {o, o, Value(ValueList{graph_of(om), graph_of(am)})};
}

VArrow ProfInstance::vid(const Value& o) const {
    FinCat A = FinCat::decode(o);
    std::map<std::pair<Value, Value>, VSet> es;
    std::map<Value, Value> l, r;
    for (auto& a : A.objects)
        for (auto& b : A.objects) es[{a, b}] = {};
    for (auto& m : A.arrows) es[{m.src, m.dst}].push_back(m.name);
    for (auto& [k, s] : es) canonicalize(s);
    for (auto& [k, s] : es)
        for (auto& el : s) {
            for (auto& m : A.arrows)
                if (m.dst == k.first) l[act_key(k.first, k.second, el, m.name)] = A.compose(el, m.name);
            for (auto& n : A.arrows)
                if (n.src == k.second) r[act_key(k.first, k.second, el, n.name)] = A.compose(n.name, el);
        }
    // empty hom entries are dropped everywhere for a canonical payload
    std::map<std::pair<Value, Value>, VSet> es2;
    for (auto& [k, s] : es)
        if (!s.empty()) es2[k] = s;
    return {o, o, prof_pay(es2, l, r)};
}

HArrow ProfInstance::hcomp(const HArrow& g, const HArrow& f) const {
    if (f.dst != g.src) throw BoundaryError("Prof hcomp: mismatch");
    return {f.src, g.dst,
            Value(ValueList{compose_graphs(g.pay.list()[0], f.pay.list()[0]),
                            compose_graphs(g.pay.list()[1], f.pay.list()[1])})};
}

// union-find over composite triples [c p q]
namespace {
struct UF {
    std::map<Value, Value> parent;
    const Value& find(const Value& x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return parent.find(x)->second;
        }
        if (it->second == x) return it->second;
        Value r = find(it->second);
        parent[x] = r;
        return parent.find(x)->second;
    }
    void unite(const Value& a, const Value& b) {
        Value ra = find(a), rb = find(b);
        if (ra == rb) return;
        if (rb < ra) std::swap(ra, rb);
        parent[rb] = ra;  // keep the least value as root
    }
};

// build the union-find of zigzag classes for q∘p at (a, e)
UF comp_classes(const VArrow& q, const VArrow& p, const Value& a, const Value& e) {
    FinCat C = FinCat::decode(p.dst);
    UF uf;
    for (auto& c : C.objects)
        for (auto& pe : ProfInstance::elements(p, a, c))
            for (auto& qe : ProfInstance::elements(q, c, e))
                uf.find(Value(ValueList{c, pe, qe}));
    for (auto& m : C.arrows) {  // m : c -> c'
        for (auto& pe : ProfInstance::elements(p, a, m.src))
            for (auto& qe : ProfInstance::elements(q, m.dst, e)) {
                Value lhs(ValueList{m.src, pe, ProfInstance::left_act(q, m.dst, e, qe, m.name)});
                Value rhs(ValueList{m.dst, ProfInstance::right_act(p, a, m.src, pe, m.name), qe});
                uf.unite(lhs, rhs);
            }
    }
    return uf;
}
}  // namespace

Value ProfInstance::comp_rep(const VArrow& q, const VArrow& p, const Value& a, const Value& e,
                             const Value& triple) {
    UF uf = comp_classes(q, p, a, e);
    return uf.find(triple);
}

VArrow ProfInstance::vcomp(const VArrow& q, const VArrow& p) const {
    if (p.dst != q.src) throw BoundaryError("Prof vcomp: mismatch");
    FinCat A = FinCat::decode(p.src), E = FinCat::decode(q.dst);
    std::map<std::pair<Value, Value>, VSet> es;
    std::map<Value, Value> l, r;
    for (auto& a : A.objects)
        for (auto& e : E.objects) {
            UF uf = comp_classes(q, p, a, e);
            VSet reps;
            for (auto& [x, dummy] : uf.parent) reps.push_back(uf.find(x));
            canonicalize(reps);
            if (!reps.empty()) es[{a, e}] = reps;
            for (auto& rep : reps) {
                const Value& c = rep.list()[0];
                const Value& pe = rep.list()[1];
                const Value& qe = rep.list()[2];
                for (auto& m : A.arrows)
                    if (m.dst == a) {
                        Value t(ValueList{c, left_act(p, a, c, pe, m.name), qe});
                        l[act_key(a, e, rep, m.name)] = comp_rep(q, p, m.src, e, t);
                    }
                for (auto& n : E.arrows)
                    if (n.src == e) {
                        Value t(ValueList{c, pe, right_act(q, c, e, qe, n.name)});
                        r[act_key(a, e, rep, n.name)] = comp_rep(q, p, a, n.dst, t);
                    }
            }
        }
    return {p.src, q.dst, prof_pay(es, l, r)};
}

Cell ProfInstance::cell(const Boundary& b,
                        const std::map<std::array<Value, 3>, Value>& mapping) const {
    if (b.top.src != b.left.src || b.top.dst != b.right.src ||
        b.bottom.src != b.left.dst || b.bottom.dst != b.right.dst)
        throw BoundaryError("Prof cell: boundary does not close up");
    FinCat A = FinCat::decode(b.left.src), C = FinCat::decode(b.left.dst);
    ValueList graph;
    for (auto& [k, v] : mapping)
        graph.push_back(vpair(Value(ValueList{k[0], k[1], k[2]}), v));
    Cell cc{b.top, b.left, b.right, b.bottom, Value(graph)};
    // completeness + naturality
    for (auto& a : A.objects)
        for (auto& c : C.objects)
            for (auto& el : elements(b.left, a, c)) {
                auto it = mapping.find({a, c, el});
                if (it == mapping.end())
                    throw BoundaryError("Prof cell: mapping missing an element");
                Value fa = fob(b.top, a), gc = fob(b.bottom, c);
                if (!contains(elements(b.right, fa, gc), it->second))
                    throw BoundaryError("Prof cell: image out of range");
                for (auto& m : A.arrows)
                    if (m.dst == a &&
                        mapping.at({m.src, c, left_act(b.left, a, c, el, m.name)}) !=
                            left_act(b.right, fa, gc, it->second, farr(b.top, m.name)))
                        throw BoundaryError("Prof cell: not natural on the left");
                for (auto& n : C.arrows)
                    if (n.src == c &&
                        mapping.at({a, n.dst, right_act(b.left, a, c, el, n.name)}) !=
                            right_act(b.right, fa, gc, it->second, farr(b.bottom, n.name)))
                        throw BoundaryError("Prof cell: not natural on the right");
            }
    return cc;
}

Value ProfInstance::cell_apply(const Cell& c, const Value& a, const Value& cc, const Value& el) {
    for (auto& e : c.pay.list())
        if (e.list()[0] == Value(ValueList{a, cc, el})) return e.list()[1];
    throw NotFoundError("Prof cell: no value at " + show(el));
}

Cell ProfInstance::cell_hid(const HArrow& f) const {
    FinCat A = FinCat::decode(f.src);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& ar : A.arrows) m[{ar.src, ar.dst, ar.name}] = farr(f, ar.name);
    return cell({f, vid(f.src), vid(f.dst), f}, m);
}

Cell ProfInstance::cell_vid(const VArrow& v) const {
    FinCat A = FinCat::decode(v.src), C = FinCat::decode(v.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& c : C.objects)
            for (auto& el : elements(v, a, c)) m[{a, c, el}] = el;
    return cell({hid(v.src), v, v, hid(v.dst)}, m);
}

Cell ProfInstance::hcompose(const Cell& l, const Cell& r) const {
    if (l.right != r.left) throw BoundaryError("Prof hcompose: middle mismatch");
    FinCat A = FinCat::decode(l.left.src), C = FinCat::decode(l.left.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& c : C.objects)
            for (auto& el : elements(l.left, a, c))
                m[{a, c, el}] = cell_apply(r, fob(l.top, a), fob(l.bottom, c),
                                           cell_apply(l, a, c, el));
    return cell({hcomp(r.top, l.top), l.left, r.right, hcomp(r.bottom, l.bottom)}, m);
}

Cell ProfInstance::vcompose(const Cell& t, const Cell& b) const {
    if (t.bottom != b.top) throw BoundaryError("Prof vcompose: middle mismatch");
    VArrow lv = vcomp(b.left, t.left), rv = vcomp(b.right, t.right);
    FinCat A = FinCat::decode(lv.src), E = FinCat::decode(lv.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& e : E.objects)
            for (auto& rep : elements(lv, a, e)) {
                const Value& c = rep.list()[0];
                Value pe = cell_apply(t, a, c, rep.list()[1]);
                Value qe = cell_apply(b, c, e, rep.list()[2]);
                Value img(ValueList{fob(t.bottom, c), pe, qe});
                m[{a, e, rep}] =
                    comp_rep(b.right, t.right, fob(t.top, a), fob(b.bottom, e), img);
            }
    return cell({t.top, lv, rv, b.bottom}, m);
}

std::vector<Cell> ProfInstance::enumerate_cells(const Boundary& b) const {
    FinCat A = FinCat::decode(b.left.src), C = FinCat::decode(b.left.dst);
    std::vector<std::array<Value, 3>> slots;
    std::vector<VSet> choices;
    for (auto& a : A.objects)
        for (auto& c : C.objects)
            for (auto& el : elements(b.left, a, c)) {
                slots.push_back({a, c, el});
                VSet tgt = elements(b.right, fob(b.top, a), fob(b.bottom, c));
                if (tgt.empty()) return {};
                choices.push_back(tgt);
            }
    std::vector<Cell> out;
    std::vector<size_t> idx(slots.size(), 0);
    while (true) {
        std::map<std::array<Value, 3>, Value> m;
        for (size_t i = 0; i < slots.size(); ++i) m[slots[i]] = choices[i][idx[i]];
        try {
            out.push_back(cell(b, m));
        } catch (const DcatError&) {
        }
        size_t i = slots.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++idx[i] < choices[i].size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
        if (done || slots.empty()) break;
    }
    return out;
}

// coherence
Cell ProfInstance::associator(const VArrow& u, const VArrow& v, const VArrow& w) const {
    VArrow lhs = vcomp(vcomp(w, v), u);  // reps [b pu [c pv pw]]
    VArrow vu = vcomp(v, u);
    VArrow rhs = vcomp(w, vu);  // reps [c [b pu pv] pw]
    FinCat A = FinCat::decode(u.src), D = FinCat::decode(w.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& d : D.objects)
            for (auto& rep : elements(lhs, a, d)) {
                const Value& bb = rep.list()[0];
                const Value& pu = rep.list()[1];
                const Value& inner = rep.list()[2];
                Value pv = inner.list()[1], pw = inner.list()[2];
                const Value& c = inner.list()[0];
                Value vu_el = comp_rep(v, u, a, c, Value(ValueList{bb, pu, pv}));
                m[{a, d, rep}] = comp_rep(w, vu, a, d, Value(ValueList{c, vu_el, pw}));
            }
    return cell({hid(lhs.src), lhs, rhs, hid(lhs.dst)}, m);
}

Cell ProfInstance::associator_inv(const VArrow& u, const VArrow& v, const VArrow& w) const {
    VArrow wv = vcomp(w, v);
    VArrow lhs = vcomp(w, vcomp(v, u));
    VArrow rhs = vcomp(wv, u);
    FinCat A = FinCat::decode(u.src), D = FinCat::decode(w.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& d : D.objects)
            for (auto& rep : elements(lhs, a, d)) {
                const Value& c = rep.list()[0];
                const Value& inner = rep.list()[1];
                const Value& pw = rep.list()[2];
                const Value& bb = inner.list()[0];
                Value pu = inner.list()[1], pv = inner.list()[2];
                Value wv_el = comp_rep(w, v, bb, d, Value(ValueList{c, pv, pw}));
                m[{a, d, rep}] = comp_rep(wv, u, a, d, Value(ValueList{bb, pu, wv_el}));
            }
    return cell({hid(lhs.src), lhs, rhs, hid(lhs.dst)}, m);
}

Cell ProfInstance::lunitor(const VArrow& v) const {
    VArrow idd = vid(v.dst);
    VArrow lhs = vcomp(idd, v);  // reps [c p m]
    FinCat A = FinCat::decode(v.src), C = FinCat::decode(v.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& c : C.objects)
            for (auto& rep : elements(lhs, a, c))
                m[{a, c, rep}] =
                    right_act(v, a, rep.list()[0], rep.list()[1], rep.list()[2]);
    return cell({hid(v.src), lhs, v, hid(v.dst)}, m);
}

Cell ProfInstance::lunitor_inv(const VArrow& v) const {
    VArrow idd = vid(v.dst);
    VArrow rhs = vcomp(idd, v);
    FinCat A = FinCat::decode(v.src), C = FinCat::decode(v.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& c : C.objects)
            for (auto& el : elements(v, a, c))
                m[{a, c, el}] = comp_rep(idd, v, a, c, Value(ValueList{c, el, C.id(c)}));
    return cell({hid(v.src), v, rhs, hid(v.dst)}, m);
}

Cell ProfInstance::runitor(const VArrow& v) const {
    VArrow ids = vid(v.src);
    VArrow lhs = vcomp(v, ids);  // reps [a' m p] with m : a -> a'
    FinCat A = FinCat::decode(v.src), C = FinCat::decode(v.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& c : C.objects)
            for (auto& rep : elements(lhs, a, c))
                m[{a, c, rep}] = left_act(v, rep.list()[0], c, rep.list()[2], rep.list()[1]);
    return cell({hid(v.src), lhs, v, hid(v.dst)}, m);
}

Cell ProfInstance::runitor_inv(const VArrow& v) const {
    VArrow ids = vid(v.src);
    VArrow rhs = vcomp(v, ids);
    FinCat A = FinCat::decode(v.src), C = FinCat::decode(v.dst);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& a : A.objects)
        for (auto& c : C.objects)
            for (auto& el : elements(v, a, c))
                m[{a, c, el}] = comp_rep(v, ids, a, c, Value(ValueList{a, A.id(a), el}));
    return cell({hid(v.src), v, rhs, hid(v.dst)}, m);
}

// companions/conjoints
VArrow ProfInstance::companion(const HArrow& f) const {
    FinCat A = FinCat::decode(f.src), B = FinCat::decode(f.dst);
    std::map<std::pair<Value, Value>, VSet> es;
    std::map<Value, Value> l, r;
    for (auto& a : A.objects)
        for (auto& b : B.objects) {
            VSet h = B.hom(fob(f, a), b);
            canonicalize(h);
            if (!h.empty()) es[{a, b}] = h;
            for (auto& el : h) {
                for (auto& m : A.arrows)
                    if (m.dst == a)
                        l[act_key(a, b, el, m.name)] = B.compose(el, farr(f, m.name));
                for (auto& n : B.arrows)
                    if (n.src == b) r[act_key(a, b, el, n.name)] = B.compose(n.name, el);
            }
        }
    return {f.src, f.dst, prof_pay(es, l, r)};
}

Cell ProfInstance::psi(const HArrow& f) const {
    FinCat A = FinCat::decode(f.src);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& ar : A.arrows) m[{ar.src, ar.dst, ar.name}] = farr(f, ar.name);
    return cell({hid(f.src), vid(f.src), companion(f), f}, m);
}

Cell ProfInstance::chi(const HArrow& f) const {
    FinCat A = FinCat::decode(f.src), B = FinCat::decode(f.dst);
    std::map<std::array<Value, 3>, Value> m;
    VArrow fc = companion(f);
    for (auto& a : A.objects)
        for (auto& b : B.objects)
            for (auto& el : elements(fc, a, b)) m[{a, b, el}] = el;
    return cell({f, fc, vid(f.dst), hid(f.dst)}, m);
}

VArrow ProfInstance::conjoint(const HArrow& f) const {
    FinCat A = FinCat::decode(f.src), B = FinCat::decode(f.dst);
    std::map<std::pair<Value, Value>, VSet> es;
    std::map<Value, Value> l, r;
    for (auto& b : B.objects)
        for (auto& a : A.objects) {
            VSet h = B.hom(b, fob(f, a));
            canonicalize(h);
            if (!h.empty()) es[{b, a}] = h;
            for (auto& el : h) {
                for (auto& m : B.arrows)
                    if (m.dst == b) l[act_key(b, a, el, m.name)] = B.compose(el, m.name);
                for (auto& n : A.arrows)
                    if (n.src == a)
                        r[act_key(b, a, el, n.name)] = B.compose(farr(f, n.name), el);
            }
        }
    return {f.dst, f.src, prof_pay(es, l, r)};
}

Cell ProfInstance::conj_alpha(const HArrow& f) const {
    FinCat A = FinCat::decode(f.src);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& ar : A.arrows) m[{ar.src, ar.dst, ar.name}] = farr(f, ar.name);
    return cell({f, vid(f.src), conjoint(f), hid(f.src)}, m);
}

Cell ProfInstance::conj_beta(const HArrow& f) const {
    FinCat B = FinCat::decode(f.dst), A = FinCat::decode(f.src);
    VArrow fc = conjoint(f);
    std::map<std::array<Value, 3>, Value> m;
    for (auto& b : B.objects)
        for (auto& a : A.objects)
            for (auto& el : elements(fc, b, a)) m[{b, a, el}] = el;
    return cell({hid(f.dst), fc, vid(f.dst), f}, m);
}

}  // namespace rk
