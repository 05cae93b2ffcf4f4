#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "possreason/fuzzy_set.hpp"
#include "possreason/kb.hpp"
#include "possreason/relation.hpp"
#include "possreason/scheduler.hpp"

namespace possreason {

/// "not(consequent is possible)": the guard that lets a default be overridden.
struct BlockedTerm {
    Literal consequent;

    /// Canonical identity: variable plus the exact grade bits of the set.
    std::string key() const;
};

/// First-order part `k` guarded by a set of blocked terms (sorted by key, no repeats).
struct Disjunct {
    Relation k;
    std::vector<BlockedTerm> blocked;
    std::string description;
};

struct EffectedTerm {
    std::string term;
    Grade possibility;
};

struct DisjunctRecord {
    std::string description;
    std::vector<EffectedTerm> terms;
    Grade beta;
    Grade k_height;
};

struct LayerRecord {
    std::size_t layer;
    std::vector<std::string> ids;
    std::vector<DisjunctRecord> disjuncts;
    Relation h_before;
    Relation h_after;
};

struct KnowledgeState {
    Relation h;
    PrioritySchedule schedule;
    std::vector<LayerRecord> trace;
    /// Set once any layer leaves h subnormal; never cleared.
    bool inconsistent = false;
};

enum class Classification { entailed, refuted, unknown, inconsistent };

const char* to_string(Classification c);

struct SetVerdict {
    FuzzySet set;
    Grade possibility;
    Grade certainty;
    Classification classification;
};

struct Verdict {
    std::string variable;
    FuzzySet projected;
    /// The primary query set comes first.
    std::vector<SetVerdict> sets;
    Classification classification;
    Grade kb_height;
};

/// (h ∧ (1 - Poss[a/h])) ∨ (a ∧ h), pointwise.
FuzzySet apply_default(const FuzzySet& h, const FuzzySet& a);

/// ¬antecedent ∪ blocked(consequent) ∪ consequent, over `space`.
/// The negated antecedent is omitted for unconditional rules.
std::vector<Disjunct> material_form(const DefaultRule& rule, const SpacePtr& space);

/// Distribute `h` over the material forms of `rules`, max-merging disjuncts that carry
/// identical blocked-term sets and dropping those with an all-zero first-order part.
std::vector<Disjunct> distribute(const Relation& h, std::span<const DefaultRule* const> rules,
                                 std::size_t max_disjuncts = Options{}.max_disjuncts);

/// β = min over blocked terms C of (1 - poss_against(k, C)); 1 when unguarded.
Grade effect_beta(const Disjunct& d, std::vector<EffectedTerm>* terms = nullptr);

/// Conjunction of all facts, extended over the KB's joint space.
KnowledgeState introduce_facts(const KnowledgeBase& kb, PrioritySchedule schedule);

/// Introduce one schedule layer of rules simultaneously.
KnowledgeState introduce_layer(KnowledgeState state, std::span<const DefaultRule* const> rules,
                               const Options& options = {});

/// Facts first, then every rule layer once, in schedule order.
KnowledgeState infer(const KnowledgeBase& kb);

/// Experiment hook: re-run the rule layers until h stops changing or `max_passes` is hit.
/// Not part of the inference semantics; `passes` reports how many rule passes ran.
KnowledgeState infer_to_fixpoint(const KnowledgeBase& kb, std::size_t max_passes, std::size_t* passes = nullptr);

/// Project h onto `variable` and grade each query set. Without `set`, every crisp
/// singleton of the universe is graded and the first one is primary.
Verdict query(const KnowledgeState& state, const KnowledgeBase& kb, const std::string& variable,
              const std::optional<FuzzySet>& set = std::nullopt, Grade threshold = 1.0);

std::string format_trace(const KnowledgeState& state, const KnowledgeBase& kb);

struct OracleFinding {
    std::size_t layer;
    std::string rule;
    std::string variable;
    bool power_set_checked;
    bool matched;
    std::string detail;
};

/// For every layer that introduces a single unconditional default on variable v, compare
/// project(h_after, v) with apply_default(project(h_before, v), A) and, when that projection
/// is crisp and small enough, with the power-set route.
std::vector<OracleFinding> oracle_check(const KnowledgeState& state, const KnowledgeBase& kb);

}  // namespace possreason
