#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "possreason/fuzzy_set.hpp"
#include "possreason/relation.hpp"
#include "possreason/second_order.hpp"

namespace possreason {

/// "V is A". Negated atoms carry the complemented set.
struct Literal {
    std::string variable;
    FuzzySet set;
};

bool operator==(const Literal& a, const Literal& b);

struct Fact {
    std::string id;
    Literal literal;
};

/// typically: if antecedent (conjunction) then consequent. Empty antecedent is the unconditional form.
struct DefaultRule {
    std::string id;
    std::vector<Literal> antecedent;
    Literal consequent;
};

struct Query {
    std::string variable;
    /// Primary query set; defaults to the first element of the variable's universe.
    std::optional<FuzzySet> set;
};

struct Options {
    std::size_t max_cells = kDefaultCellLimit;
    std::size_t max_disjuncts = 10'000;
    Grade threshold = 1.0;
    bool oracle_check = false;
    std::size_t oracle_limit = kDefaultOracleLimit;
};

struct KnowledgeBase {
    std::vector<UniversePtr> universes;
    std::vector<Variable> variables;
    std::vector<Fact> facts;
    std::vector<DefaultRule> defaults;
    std::vector<Query> queries;
    Options options;

    const UniversePtr* find_universe(std::string_view name) const;
    const Variable* find_variable(std::string_view name) const;
    const Variable& variable(std::string_view name) const;
    const DefaultRule* find_rule(std::string_view id) const;

    /// Every declared variable, under the configured cell limit.
    SpacePtr joint_space() const;
};

/// Check every cross-reference and invariant; throws DomainError or ResourceError.
void validate(const KnowledgeBase& kb);

/// Canonical DSL text; parse_kb(to_dsl(kb)) reproduces kb.
std::string to_dsl(const KnowledgeBase& kb);

/// `{label/grade, ...}` with zero grades omitted and grade 1 written as a bare label.
std::string format_set(const FuzzySet& set);
std::string format_literal(const Literal& literal);

/// Structural equality up to the order of facts, rules and universes.
bool equivalent(const KnowledgeBase& a, const KnowledgeBase& b);

}  // namespace possreason
