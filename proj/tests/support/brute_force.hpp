#pragma once

// Test-only reference evaluator. It enumerates every assignment of a small
// knowledge base directly (first variable varies fastest, unlike the engine's
// lexicographic layout) and expands every combination of material-form terms
// before grouping, instead of distributing rule by rule.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "possreason/kb.hpp"

namespace brute {

using possreason::Grade;
using possreason::KnowledgeBase;
using possreason::Literal;

struct Model {
    std::vector<std::string> names;
    std::vector<std::size_t> sizes;
    std::size_t count = 1;

    explicit Model(const KnowledgeBase& kb) {
        for (const auto& v : kb.variables) {
            names.push_back(v.name());
            sizes.push_back(v.universe->size());
            count *= v.universe->size();
        }
    }

    std::vector<std::size_t> assignment(std::size_t index) const {
        std::vector<std::size_t> a(sizes.size());
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            a[i] = index % sizes[i];
            index /= sizes[i];
        }
        return a;
    }

    std::size_t position(const std::string& name) const {
        return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
    }

    Grade value(const Literal& lit, const std::vector<std::size_t>& a) const {
        return lit.set[a[position(lit.variable)]];
    }
};

using Table = std::vector<Grade>;  // indexed by assignment number

inline Table facts_table(const KnowledgeBase& kb, const Model& m) {
    Table h(m.count, 1.0);
    for (std::size_t i = 0; i < m.count; ++i) {
        const auto a = m.assignment(i);
        for (const auto& f : kb.facts) h[i] = std::min(h[i], m.value(f.literal, a));
    }
    return h;
}

inline std::string literal_key(const Literal& lit) {
    std::string k = lit.variable;
    char buf[40];
    for (Grade g : lit.set.grades()) {
        std::snprintf(buf, sizeof buf, "|%a", g);
        k += buf;
    }
    return k;
}

/// One layer of simultaneous rules, evaluated by full expansion.
inline Table evaluate_layer(const Model& m, const Table& h,
                            const std::vector<const possreason::DefaultRule*>& rules) {
    // term 0: negated antecedent, term 1: blocked consequent, term 2: consequent
    std::vector<std::size_t> choice(rules.size(), 0);
    struct Group {
        Table k;
        std::vector<const Literal*> blocked;
    };
    std::map<std::string, Group> groups;

    while (true) {
        Table k = h;
        std::map<std::string, const Literal*> blocked;
        for (std::size_t r = 0; r < rules.size(); ++r) {
            const auto& rule = *rules[r];
            if (choice[r] == 1) {
                blocked.emplace(literal_key(rule.consequent), &rule.consequent);
                continue;
            }
            for (std::size_t i = 0; i < m.count; ++i) {
                const auto a = m.assignment(i);
                Grade t;
                if (choice[r] == 0) {
                    if (rule.antecedent.empty()) {
                        t = 0.0;
                    } else {
                        Grade ante = 1.0;
                        for (const auto& lit : rule.antecedent) ante = std::min(ante, m.value(lit, a));
                        t = 1.0 - ante;
                    }
                } else {
                    t = m.value(rule.consequent, a);
                }
                k[i] = std::min(k[i], t);
            }
        }
        std::string key;
        std::vector<const Literal*> lits;
        for (const auto& [bk, lit] : blocked) {
            key += bk + ";";
            lits.push_back(lit);
        }
        auto [it, inserted] = groups.try_emplace(key, Group{Table(m.count, 0.0), lits});
        for (std::size_t i = 0; i < m.count; ++i) it->second.k[i] = std::max(it->second.k[i], k[i]);

        std::size_t r = 0;
        while (r < rules.size() && ++choice[r] == 3) choice[r++] = 0;
        if (r == rules.size()) break;
    }

    Table out(m.count, 0.0);
    for (const auto& [_, g] : groups) {
        Grade beta = 1.0;
        for (const Literal* c : g.blocked) {
            Grade poss = 0.0;
            for (std::size_t i = 0; i < m.count; ++i) {
                poss = std::max(poss, std::min(g.k[i], m.value(*c, m.assignment(i))));
            }
            beta = std::min(beta, 1.0 - poss);
        }
        for (std::size_t i = 0; i < m.count; ++i) out[i] = std::max(out[i], std::min(g.k[i], beta));
    }
    return out;
}

/// Max over all assignments, per element of `name`'s universe.
inline std::vector<Grade> project(const Model& m, const Table& t, const std::string& name) {
    const std::size_t p = m.position(name);
    std::vector<Grade> out(m.sizes[p], 0.0);
    for (std::size_t i = 0; i < m.count; ++i) {
        const auto a = m.assignment(i);
        out[a[p]] = std::max(out[a[p]], t[i]);
    }
    return out;
}

/// Grade of the engine relation at the cell matching assignment `index`.
inline Grade engine_at(const possreason::Relation& r, const Model& m, std::size_t index) {
    const auto a = m.assignment(index);
    const auto& space = *r.space();
    std::vector<std::size_t> coords(space.variables().size());
    for (std::size_t ax = 0; ax < coords.size(); ++ax) coords[ax] = a[m.position(space.names()[ax])];
    return r[space.cell_of(coords)];
}

}  // namespace brute
