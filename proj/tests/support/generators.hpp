#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "possreason/kb.hpp"

namespace gen {

using possreason::FuzzySet;
using possreason::Grade;
using possreason::UniversePtr;

inline constexpr Grade kLevels[] = {0.0, 0.25, 0.5, 0.75, 1.0};

inline Grade grade(std::mt19937& rng, bool crisp) {
    if (crisp) return std::bernoulli_distribution(0.5)(rng) ? 1.0 : 0.0;
    const int pick = std::uniform_int_distribution<int>(0, 3)(rng);
    if (pick == 0) return kLevels[std::uniform_int_distribution<int>(0, 4)(rng)];
    return std::uniform_real_distribution<Grade>(0.0, 1.0)(rng);
}

inline FuzzySet fuzzy(std::mt19937& rng, const UniversePtr& u, bool crisp = false) {
    std::vector<Grade> g(u->size());
    for (auto& x : g) x = grade(rng, crisp);
    return FuzzySet(u, std::move(g));
}

inline FuzzySet nonempty(std::mt19937& rng, const UniversePtr& u, bool crisp) {
    while (true) {
        FuzzySet s = fuzzy(rng, u, crisp);
        if (possreason::height(s) > 0.0) return s;
    }
}

inline UniversePtr universe(std::size_t n, const std::string& name = "X") {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    return possreason::make_universe(name, std::move(labels));
}

/// Boolean KB over up to three variables with random facts and `rule_count` random defaults.
inline possreason::KnowledgeBase random_kb(std::mt19937& rng, std::size_t rule_count, bool crisp) {
    using namespace possreason;
    KnowledgeBase kb;
    const auto boolean = make_universe("Bool", {"t", "f"});
    kb.universes.push_back(boolean);
    const std::size_t nvars = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    for (std::size_t i = 0; i < nvars; ++i) kb.variables.push_back(make_variable("v" + std::to_string(i), std::nullopt, boolean));

    const std::size_t nfacts = std::uniform_int_distribution<std::size_t>(0, nvars)(rng);
    for (std::size_t i = 0; i < nfacts; ++i) {
        const auto& v = kb.variables[std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng)];
        kb.facts.push_back({"F" + std::to_string(i), {v.name(), fuzzy(rng, boolean, crisp)}});
    }
    for (std::size_t r = 0; r < rule_count; ++r) {
        std::vector<std::size_t> order(nvars);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const std::size_t cons = order.back();
        const std::size_t nante = std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng);
        DefaultRule rule{"R" + std::to_string(r), {}, {kb.variables[cons].name(), nonempty(rng, boolean, crisp)}};
        for (std::size_t i = 0; i < nante; ++i) {
            rule.antecedent.push_back({kb.variables[order[i]].name(), fuzzy(rng, boolean, crisp)});
        }
        kb.defaults.push_back(std::move(rule));
    }
    return kb;
}

}  // namespace gen
