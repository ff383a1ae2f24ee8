#pragma once
// Value: a small recursive payload type used uniformly for objects, arrow
// payloads and cell payloads across all the concrete instances.  Having a
// single totally ordered, printable type keeps the generic machinery
// (enumeration, canonical sorting, equality of pasted cells) simple.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace rk {

struct Value;
using ValueList = std::vector<Value>;

struct Value {
    std::variant<std::string, std::int64_t, ValueList> v;

    Value() : v(ValueList{}) {}
    Value(const char* s) : v(std::string(s)) {}
    Value(std::string s) : v(std::move(s)) {}
    Value(std::int64_t n) : v(n) {}
    Value(int n) : v(static_cast<std::int64_t>(n)) {}
    Value(ValueList xs) : v(std::move(xs)) {}

    bool is_str() const { return std::holds_alternative<std::string>(v); }
    bool is_int() const { return std::holds_alternative<std::int64_t>(v); }
    bool is_list() const { return std::holds_alternative<ValueList>(v); }

    const std::string& str() const { return std::get<std::string>(v); }
    std::int64_t num() const { return std::get<std::int64_t>(v); }
    const ValueList& list() const { return std::get<ValueList>(v); }
    ValueList& list() { return std::get<ValueList>(v); }

    friend bool operator==(const Value& a, const Value& b) { return a.v == b.v; }
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    friend bool operator<(const Value& a, const Value& b) {
        if (a.v.index() != b.v.index()) return a.v.index() < b.v.index();
        return a.v < b.v;
    }
    friend bool operator<=(const Value& a, const Value& b) { return a < b || a == b; }
};

inline Value V(std::initializer_list<Value> xs) { return Value(ValueList(xs)); }

// pair/tuple helpers used all over the span & matrix code
inline Value vpair(const Value& a, const Value& b) { return Value(ValueList{a, b}); }

inline std::string show(const Value& x) {
    if (x.is_str()) return x.str();
    if (x.is_int()) return std::to_string(x.num());
    std::string out = "[";
    bool first = true;
    for (auto& e : x.list()) {
        if (!first) out += " ";
        out += show(e);
        first = false;
    }
    return out + "]";
}

using VSet = std::vector<Value>;             // always kept sorted + unique
using VMap = std::map<Value, Value>;         // finite function as graph

inline void canonicalize(VSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool contains(const VSet& s, const Value& x) {
    return std::binary_search(s.begin(), s.end(), x);
}

}  // namespace rk
