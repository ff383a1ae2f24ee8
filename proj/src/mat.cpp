#include "retrokit/mat.hpp"

#include <tuple>

namespace rk {

using EntryMap = std::map<std::pair<Value, Value>, VSet>;          // (a,c) -> basis
using RowMap = std::map<Value, std::map<Value, int>>;              // [a c p] -> coords

static EntryMap decode_v(const VArrow& v) {
    EntryMap m;
    for (auto& e : v.pay.list())
        m[{e.list()[0], e.list()[1]}] = e.list()[2].list();
    return m;
}

static Value encode_v(const EntryMap& m) {
    ValueList out;
    for (auto& [k, basis] : m) {
        if (basis.empty()) continue;
        out.push_back(Value(ValueList{k.first, k.second, Value(basis)}));
    }
    return Value(out);
}

static RowMap decode_c(const Cell& c) {
    RowMap m;
    for (auto& row : c.pay.list()) {
        auto& coords = m[row.list()[0]];
        for (auto& e : row.list()[1].list())
            coords[e.list()[0]] = static_cast<int>(e.list()[1].num());
    }
    return m;
}

static Value encode_c(const RowMap& m) {
    ValueList out;
    for (auto& [key, coords] : m) {
        ValueList cs;
        for (auto& [p, k] : coords)
            if (k != 0) cs.push_back(vpair(p, Value(k)));
        out.push_back(vpair(key, Value(cs)));
    }
    return Value(out);
}

static Value row_key(const Value& a, const Value& c, const Value& p) {
    return Value(ValueList{a, c, p});
}

static Value concat(const Value& p, const Value& q) {
    ValueList out = p.list();
    for (auto& x : q.list()) out.push_back(x);
    return Value(out);
}

Value MatInstance::obj(VSet idx) {
    canonicalize(idx);
    return Value(std::move(idx));
}

HArrow MatInstance::fn(const Value& src, const Value& dst, const VMap& m) {
    Value g = graph_of(m);
    if (!is_function(g, src.list(), dst.list()))
        throw BoundaryError("Mat: not a function " + show(g));
    return {src, dst, g};
}

VArrow MatInstance::matrix(const std::string& tag, const Value& src, const Value& dst,
                           const std::map<std::pair<Value, Value>, int>& dims) {
    EntryMap em;
    for (auto& [k, d] : dims) {
        if (!contains(src.list(), k.first) || !contains(dst.list(), k.second))
            throw BoundaryError("Mat: entry out of range");
        VSet basis;
        for (int i = 0; i < d; ++i)
            basis.push_back(Value(ValueList{Value(ValueList{Value(tag), k.first, k.second, Value(i)})}));
        em[k] = basis;
    }
    return {src, dst, encode_v(em)};
}

std::vector<Value> MatInstance::basis(const VArrow& v, const Value& a, const Value& c) {
    auto em = decode_v(v);
    auto it = em.find({a, c});
    if (it == em.end()) return {};
    return it->second;
}

HArrow MatInstance::hid(const Value& o) const { return {o, o, identity_graph(o.list())}; }

VArrow MatInstance::vid(const Value& o) const {
    EntryMap em;
    for (auto& a : o.list()) em[{a, a}] = {Value()};
    return {o, o, encode_v(em)};
}

HArrow MatInstance::hcomp(const HArrow& g, const HArrow& f) const {
    if (f.dst != g.src) throw BoundaryError("Mat hcomp: mismatch");
    return {f.src, g.dst, compose_graphs(g.pay, f.pay)};
}

VArrow MatInstance::vcomp(const VArrow& w, const VArrow& v) const {
    if (v.dst != w.src) throw BoundaryError("Mat vcomp: mismatch");
    EntryMap ev = decode_v(v), ew = decode_v(w), out;
    for (auto& [kv, bv] : ev)
        for (auto& [kw, bw] : ew) {
            if (kv.second != kw.first) continue;
            auto& basis = out[{kv.first, kw.second}];
            for (auto& puu : bv)
                for (auto& q : bw) basis.push_back(concat(puu, q));
        }
    for (auto& [k, basis] : out) {
        size_t n = basis.size();
        canonicalize(basis);
        if (basis.size() != n)
            throw DcatError("Mat vcomp: basis collision at (" + show(k.first) + "," +
                            show(k.second) + ")");
    }
    return {v.src, w.dst, encode_v(out)};
}

Cell MatInstance::cell(const Boundary& b,
                       const std::map<std::tuple<Value, Value, Value>,
                                      std::vector<std::pair<Value, int>>>& entries) const {
    if (b.top.src != b.left.src || b.top.dst != b.right.src ||
        b.bottom.src != b.left.dst || b.bottom.dst != b.right.dst)
        throw BoundaryError("Mat cell: boundary does not close up " + show_boundary(b));
    EntryMap el = decode_v(b.left), er = decode_v(b.right);
    RowMap rows;
    for (auto& [k, basis] : el)
        for (auto& puu : basis) rows[row_key(k.first, k.second, puu)];  // default empty row
    for (auto& [k, coords] : entries) {
        auto& [a, c, puu] = k;
        Value key = row_key(a, c, puu);
        if (!rows.count(key)) throw BoundaryError("Mat cell: unknown source basis element");
        Value fa = apply(b.top.pay, a), gc = apply(b.bottom.pay, c);
        auto it = er.find({fa, gc});
        auto& row = rows[key];
        for (auto& [q, kk] : coords) {
            if (it == er.end() || !contains(it->second, q))
                throw BoundaryError("Mat cell: target basis element out of range");
            int n = norm(kk);
            if (n != 0) row[q] = n;
        }
    }
    return {b.top, b.left, b.right, b.bottom, encode_c(rows)};
}

int MatInstance::coeff(const Cell& c, const Value& a, const Value& cc, const Value& from,
                       const Value& to) {
    RowMap m = decode_c(c);
    auto it = m.find(row_key(a, cc, from));
    if (it == m.end()) return 0;
    auto jt = it->second.find(to);
    return jt == it->second.end() ? 0 : jt->second;
}

Cell MatInstance::cell_hid(const HArrow& f) const {
    std::map<std::tuple<Value, Value, Value>, std::vector<std::pair<Value, int>>> e;
    for (auto& a : f.src.list()) e[{a, a, Value()}] = {{Value(), 1}};
    return cell({f, vid(f.src), vid(f.dst), f}, e);
}

Cell MatInstance::cell_vid(const VArrow& v) const {
    std::map<std::tuple<Value, Value, Value>, std::vector<std::pair<Value, int>>> e;
    for (auto& [k, basis] : decode_v(v))
        for (auto& puu : basis) e[{k.first, k.second, puu}] = {{puu, 1}};
    return cell({hid(v.src), v, v, hid(v.dst)}, e);
}

Cell MatInstance::hcompose(const Cell& l, const Cell& r) const {
    if (l.right != r.left) throw BoundaryError("Mat hcompose: middle mismatch");
    RowMap ml = decode_c(l), mr = decode_c(r), out;
    for (auto& [key, coords] : ml) {
        const Value& a = key.list()[0];
        const Value& c = key.list()[1];
        Value fa = apply(l.top.pay, a), gc = apply(l.bottom.pay, c);
        auto& row = out[key];
        for (auto& [q, k1] : coords) {
            auto it = mr.find(row_key(fa, gc, q));
            if (it == mr.end()) continue;
            for (auto& [q2, k2] : it->second) row[q2] = norm(row[q2] + (long long)k1 * k2);
        }
    }
    return {hcomp(r.top, l.top), l.left, r.right, hcomp(r.bottom, l.bottom), encode_c(out)};
}

Cell MatInstance::vcompose(const Cell& t, const Cell& b) const {
    if (t.bottom != b.top) throw BoundaryError("Mat vcompose: middle mismatch");
    VArrow lv = vcomp(b.left, t.left), rv = vcomp(b.right, t.right);
    RowMap mt = decode_c(t), mb = decode_c(b), out;
    EntryMap ev = decode_v(t.left), ew = decode_v(b.left);
    for (auto& [kv, bv] : ev)
        for (auto& [kw, bw] : ew) {
            if (kv.second != kw.first) continue;
            for (auto& puu : bv)
                for (auto& q : bw) {
                    Value key = row_key(kv.first, kw.second, concat(puu, q));
                    auto& row = out[key];
                    auto it = mt.find(row_key(kv.first, kv.second, puu));
                    auto jt = mb.find(row_key(kw.first, kw.second, q));
                    if (it == mt.end() || jt == mb.end()) continue;
                    for (auto& [p2, k1] : it->second)
                        for (auto& [q2, k2] : jt->second)
                            row[concat(p2, q2)] = norm(row[concat(p2, q2)] + (long long)k1 * k2);
                }
        }
    Cell res{t.top, lv, rv, b.bottom, encode_c(out)};
    return res;
}

std::vector<Cell> MatInstance::enumerate_cells(const Boundary& b) const {
    EntryMap el = decode_v(b.left), er = decode_v(b.right);
    // all (row key, target element) coefficient slots
    std::vector<std::pair<Value, Value>> slots;
    std::vector<Value> keys;
    for (auto& [k, basis] : el)
        for (auto& puu : basis) {
            Value key = row_key(k.first, k.second, puu);
            keys.push_back(key);
            Value fa = apply(b.top.pay, k.first), gc = apply(b.bottom.pay, k.second);
            auto it = er.find({fa, gc});
            if (it == er.end()) continue;
            for (auto& q : it->second) slots.emplace_back(key, q);
        }
    std::vector<Cell> out;
    std::vector<int> coef(slots.size(), 0);
    while (true) {
        RowMap rows;
        for (auto& key : keys) rows[key];
        for (size_t i = 0; i < slots.size(); ++i)
            if (coef[i] != 0) rows[slots[i].first][slots[i].second] = coef[i];
        out.push_back(Cell{b.top, b.left, b.right, b.bottom, encode_c(rows)});
        size_t i = slots.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++coef[i] < p_) {
                done = false;
                break;
            }
            coef[i] = 0;
        }
        if (done) break;
    }
    return out;
}

VArrow MatInstance::companion(const HArrow& f) const {
    EntryMap em;
    for (auto& a : f.src.list()) em[{a, apply(f.pay, a)}] = {Value()};
    return {f.src, f.dst, encode_v(em)};
}

Cell MatInstance::psi(const HArrow& f) const {
    std::map<std::tuple<Value, Value, Value>, std::vector<std::pair<Value, int>>> e;
    for (auto& a : f.src.list()) e[{a, a, Value()}] = {{Value(), 1}};
    return cell({hid(f.src), vid(f.src), companion(f), f}, e);
}

Cell MatInstance::chi(const HArrow& f) const {
    std::map<std::tuple<Value, Value, Value>, std::vector<std::pair<Value, int>>> e;
    for (auto& a : f.src.list()) e[{a, apply(f.pay, a), Value()}] = {{Value(), 1}};
    return cell({f, companion(f), vid(f.dst), hid(f.dst)}, e);
}

VArrow MatInstance::conjoint(const HArrow& f) const {
    EntryMap em;
    for (auto& a : f.src.list()) em[{apply(f.pay, a), a}] = {Value()};
    return {f.dst, f.src, encode_v(em)};
}

Cell MatInstance::conj_alpha(const HArrow& f) const {
    std::map<std::tuple<Value, Value, Value>, std::vector<std::pair<Value, int>>> e;
    for (auto& a : f.src.list()) e[{a, a, Value()}] = {{Value(), 1}};
    return cell({f, vid(f.src), conjoint(f), hid(f.src)}, e);
}

Cell MatInstance::conj_beta(const HArrow& f) const {
    std::map<std::tuple<Value, Value, Value>, std::vector<std::pair<Value, int>>> e;
    for (auto& a : f.src.list()) e[{apply(f.pay, a), a, Value()}] = {{Value(), 1}};
    return cell({hid(f.dst), conjoint(f), vid(f.dst), f}, e);
}

}  // namespace rk
