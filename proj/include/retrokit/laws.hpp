#pragma once
// Law suites: exhaustive checks of the double-category axioms, coherence and
// companion/conjoint binding equations over a finite "universe" of generating
// data.  Pseudo instances are checked up to associator/unitor transport via
// the coherence engine.

#include "core.hpp"

namespace rk {

struct Universe {
    std::vector<Value> objects;
    std::vector<HArrow> harrows;
    std::vector<VArrow> varrows;
};

struct LawReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond) failures.push_back(what);
    }
    std::string summary() const;
    void merge(const LawReport& other);
};

// horizontal category laws, cell identity/associativity/interchange laws,
// coherence cells are isos and commute with each other
LawReport check_double_category(const Instance& A, const Universe& U,
                                size_t max_cells_per_boundary = 16);
// binding equations for companions, uniqueness up to iso, identity companions
LawReport check_companions(const Instance& A, const Universe& U);
LawReport check_conjoints(const Instance& A, const Universe& U);

// canned universes used by the unit tests, the acceptance gate and the CLI
Universe rel_universe();
Universe span_universe();
Universe mat_universe();
Universe prof_universe();

}  // namespace rk
