#pragma once
// Small helpers for finite sets and functions encoded as Values.
// A finite set is a sorted, duplicate-free ValueList; a function is its graph.

#include "value.hpp"

#include <functional>
#include <stdexcept>

namespace rk {

// function graph encoded as sorted list of [x, fx] pairs
inline Value graph_of(const VMap& m) {
    ValueList out;
    for (auto& [k, v] : m) out.push_back(vpair(k, v));
    return Value(out);
}

inline VMap map_of(const Value& graph) {
    VMap m;
    for (auto& e : graph.list()) m[e.list()[0]] = e.list()[1];
    return m;
}

inline Value apply(const Value& graph, const Value& x) {
    for (auto& e : graph.list())
        if (e.list()[0] == x) return e.list()[1];
    throw std::out_of_range("function not defined at " + show(x));
}

inline bool defined_at(const Value& graph, const Value& x) {
    for (auto& e : graph.list())
        if (e.list()[0] == x) return true;
    return false;
}

// graph of g∘f
inline Value compose_graphs(const Value& g, const Value& f) {
    ValueList out;
    for (auto& e : f.list()) out.push_back(vpair(e.list()[0], apply(g, e.list()[1])));
    return Value(out);
}

inline Value identity_graph(const VSet& s) {
    ValueList out;
    for (auto& x : s) out.push_back(vpair(x, x));
    return Value(out);
}

inline bool is_function(const Value& graph, const VSet& dom, const VSet& cod) {
    if (graph.list().size() != dom.size()) return false;
    size_t i = 0;
    for (auto& e : graph.list()) {
        if (!e.is_list() || e.list().size() != 2) return false;
        if (e.list()[0] != dom[i++]) return false;  // sorted graphs only
        if (!contains(cod, e.list()[1])) return false;
    }
    return true;
}

// Enumerate all functions dom -> cod in lexicographic order of their graphs,
// invoking fn on each; fn may return false to stop early.
inline void for_each_function(const VSet& dom, const VSet& cod,
                              const std::function<bool(const VMap&)>& fn) {
    if (dom.empty()) {
        fn(VMap{});
        return;
    }
    if (cod.empty()) return;
    std::vector<size_t> idx(dom.size(), 0);
    while (true) {
        VMap m;
        for (size_t i = 0; i < dom.size(); ++i) m[dom[i]] = cod[idx[i]];
        if (!fn(m)) return;
        size_t i = dom.size();
        while (i > 0) {
            --i;
            if (++idx[i] < cod.size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
    }
}

inline std::vector<VMap> all_functions(const VSet& dom, const VSet& cod) {
    std::vector<VMap> out;
    for_each_function(dom, cod, [&](const VMap& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

}  // namespace rk
