#include "possreason/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "possreason/errors.hpp"
#include "possreason/second_order.hpp"

namespace possreason {

const char* to_string(Classification c) {
    switch (c) {
        case Classification::entailed: return "ENTAILED";
        case Classification::refuted: return "REFUTED";
        case Classification::unknown: return "UNKNOWN";
        case Classification::inconsistent: return "INCONSISTENT";
    }
    return "?";
}

std::string BlockedTerm::key() const {
    std::string k = consequent.variable;
    char buf[40];
    for (Grade g : consequent.set.grades()) {
        std::snprintf(buf, sizeof buf, "|%a", g);
        k += buf;
    }
    return k;
}

FuzzySet apply_default(const FuzzySet& h, const FuzzySet& a) {
    const Grade blocked = 1.0 - possibility(a, h);
    std::vector<Grade> out(h.size());
    for (std::size_t x = 0; x < out.size(); ++x) {
        out[x] = std::max(std::min(h[x], blocked), std::min(a[x], h[x]));
    }
    return FuzzySet(h.universe(), std::move(out));
}

std::vector<Disjunct> material_form(const DefaultRule& rule, const SpacePtr& space) {
    std::vector<Disjunct> form;
    if (!rule.antecedent.empty()) {
        Relation ante = Relation::ones(space);
        for (const auto& lit : rule.antecedent) {
            ante = conjoin(ante, cylindrical_extend(lit.set, lit.variable, space));
        }
        form.push_back({complement_rel(ante), {}, "~ant(" + rule.id + ")"});
    }
    form.push_back({Relation::ones(space), {BlockedTerm{rule.consequent}},
                    "blocked(" + format_literal(rule.consequent) + ")"});
    form.push_back({cylindrical_extend(rule.consequent.set, rule.consequent.variable, space), {},
                    format_literal(rule.consequent)});
    return form;
}

namespace {

std::string blocked_key(const std::vector<BlockedTerm>& blocked) {
    std::string k;
    for (const auto& b : blocked) k += b.key() + ";";
    return k;
}

std::vector<BlockedTerm> merge_blocked(const std::vector<BlockedTerm>& a, const std::vector<BlockedTerm>& b) {
    std::map<std::string, BlockedTerm> merged;
    for (const auto& t : a) merged.emplace(t.key(), t);
    for (const auto& t : b) merged.emplace(t.key(), t);
    std::vector<BlockedTerm> out;
    for (auto& [_, t] : merged) out.push_back(std::move(t));
    return out;
}

// Max-merges disjuncts sharing a blocked-term set; result ordered by key.
std::vector<Disjunct> merge_by_blocked(std::vector<Disjunct> disjuncts) {
    std::map<std::string, Disjunct> groups;
    for (auto& d : disjuncts) {
        const std::string key = blocked_key(d.blocked);
        auto it = groups.find(key);
        if (it == groups.end()) {
            groups.emplace(key, std::move(d));
        } else {
            it->second.k = disjoin(it->second.k, d.k);
            it->second.description += " | " + d.description;
        }
    }
    std::vector<Disjunct> out;
    out.reserve(groups.size());
    for (auto& [_, d] : groups) out.push_back(std::move(d));
    return out;
}

}  // namespace

std::vector<Disjunct> distribute(const Relation& h, std::span<const DefaultRule* const> rules,
                                 std::size_t max_disjuncts) {
    std::vector<Disjunct> current;
    if (height(h) > 0.0) current.push_back({h, {}, "h"});
    for (const DefaultRule* rule : rules) {
        const auto form = material_form(*rule, h.space());
        std::vector<Disjunct> next;
        for (const auto& d : current) {
            for (const auto& term : form) {
                Relation k = conjoin(d.k, term.k);
                if (height(k) == 0.0) continue;
                next.push_back({std::move(k), merge_blocked(d.blocked, term.blocked),
                                d.description + " & " + term.description});
                if (next.size() > max_disjuncts * form.size()) {
                    throw ResourceError("disjunct cap of " + std::to_string(max_disjuncts) + " exceeded");
                }
            }
        }
        current = merge_by_blocked(std::move(next));
        if (current.size() > max_disjuncts) {
            throw ResourceError("disjunct cap of " + std::to_string(max_disjuncts) + " exceeded");
        }
    }
    return current;
}

Grade effect_beta(const Disjunct& d, std::vector<EffectedTerm>* terms) {
    Grade beta = 1.0;
    for (const auto& b : d.blocked) {
        const Grade p = poss_against(d.k, b.consequent.set, b.consequent.variable);
        beta = std::min(beta, 1.0 - p);
        if (terms) terms->push_back({"blocked(" + format_literal(b.consequent) + ")", p});
    }
    return beta;
}

KnowledgeState introduce_facts(const KnowledgeBase& kb, PrioritySchedule schedule) {
    const SpacePtr space = kb.joint_space();
    Relation h = Relation::ones(space);
    for (const auto& f : kb.facts) h = conjoin(h, cylindrical_extend(f.literal.set, f.literal.variable, space));

    KnowledgeState state{h, std::move(schedule), {}, false};
    std::vector<std::string> ids;
    for (const auto& f : kb.facts) ids.push_back(f.id);
    std::sort(ids.begin(), ids.end());
    state.trace.push_back({0, std::move(ids), {}, Relation::ones(space), h});
    state.inconsistent = height(h) < 1.0;
    return state;
}

KnowledgeState introduce_layer(KnowledgeState state, std::span<const DefaultRule* const> rules,
                               const Options& options) {
    LayerRecord record{state.trace.size(), {}, {}, state.h, state.h};
    for (const DefaultRule* r : rules) record.ids.push_back(r->id);
    if (rules.empty()) {
        state.trace.push_back(std::move(record));
        return state;
    }

    const auto disjuncts = distribute(state.h, rules, options.max_disjuncts);
    const auto n = static_cast<std::ptrdiff_t>(disjuncts.size());
    std::vector<DisjunctRecord> records(disjuncts.size());
    std::vector<Relation> contributions(disjuncts.size(), Relation::zeros(state.h.space()));

    // Disjuncts are effected independently; the max-union below runs in a fixed order.
#pragma omp parallel for schedule(dynamic) if (n > 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Disjunct& d = disjuncts[i];
        DisjunctRecord& rec = records[i];
        rec.description = d.description;
        rec.beta = effect_beta(d, &rec.terms);
        rec.k_height = height(d.k, Execution::serial);
        contributions[i] = conjoin(d.k, Relation::filled(d.k.space(), rec.beta), Execution::serial);
    }

    Relation h = Relation::zeros(state.h.space());
    for (const auto& c : contributions) h = disjoin(h, c);

    record.disjuncts = std::move(records);
    record.h_after = h;
    state.h = std::move(h);
    if (height(state.h) < 1.0) state.inconsistent = true;
    state.trace.push_back(std::move(record));
    return state;
}

namespace {

std::vector<const DefaultRule*> layer_rules_of(const KnowledgeBase& kb, const std::vector<std::string>& ids) {
    std::vector<const DefaultRule*> rules;
    for (const auto& id : ids) {
        const DefaultRule* r = kb.find_rule(id);
        if (!r) throw DomainError("schedule names unknown rule '" + id + "'");
        rules.push_back(r);
    }
    return rules;
}

}  // namespace

KnowledgeState infer(const KnowledgeBase& kb) {
    validate(kb);
    KnowledgeState state = introduce_facts(kb, build_schedule(kb));
    const auto layers = state.schedule.layers;
    for (std::size_t k = 1; k < layers.size(); ++k) {
        const auto rules = layer_rules_of(kb, layers[k]);
        state = introduce_layer(std::move(state), rules, kb.options);
    }
    return state;
}

KnowledgeState infer_to_fixpoint(const KnowledgeBase& kb, std::size_t max_passes, std::size_t* passes) {
    KnowledgeState state = infer(kb);
    std::size_t done = 1;
    const auto layers = state.schedule.layers;
    while (done < max_passes) {
        const Relation before = state.h;
        for (std::size_t k = 1; k < layers.size(); ++k) {
            const auto rules = layer_rules_of(kb, layers[k]);
            state = introduce_layer(std::move(state), rules, kb.options);
        }
        ++done;
        if (state.h == before) break;
    }
    if (passes) *passes = done;
    return state;
}

namespace {

Classification classify(Grade poss, Grade cert, Grade threshold, bool inconsistent) {
    if (inconsistent) return Classification::inconsistent;
    if (cert >= threshold - kGradeTolerance) return Classification::entailed;
    if (poss <= 1.0 - threshold + kGradeTolerance) return Classification::refuted;
    return Classification::unknown;
}

}  // namespace

Verdict query(const KnowledgeState& state, const KnowledgeBase& kb, const std::string& variable,
              const std::optional<FuzzySet>& set, Grade threshold) {
    if (!(threshold > 0.5 && threshold <= 1.0)) throw DomainError("threshold must lie in (0.5, 1]");
    const Variable& v = kb.variable(variable);
    if (!state.h.space()->contains(variable)) {
        throw DomainError("variable '" + variable + "' is not in the knowledge state");
    }
    const FuzzySet projected = project_to_set(state.h, variable);
    const Grade kb_height = height(state.h);
    const bool inconsistent = state.inconsistent || kb_height < 1.0;

    std::vector<FuzzySet> sets;
    if (set) {
        if (!(*set->universe() == *v.universe)) {
            throw DomainError("query set is not on the universe of '" + variable + "'");
        }
        sets.push_back(*set);
    } else {
        for (const auto& label : v.universe->labels()) sets.push_back(FuzzySet::crisp(v.universe, {label}));
    }

    Verdict verdict{variable, projected, {}, Classification::unknown, kb_height};
    for (auto& q : sets) {
        const Grade poss = possibility(q, projected);
        const Grade cert = certainty(q, projected);
        verdict.sets.push_back({std::move(q), poss, cert, classify(poss, cert, threshold, inconsistent)});
    }
    verdict.classification = verdict.sets.front().classification;
    return verdict;
}

std::string format_trace(const KnowledgeState& state, const KnowledgeBase& kb) {
    std::ostringstream out;
    out << "schedule:\n" << format_schedule(state.schedule);
    for (const auto& rec : state.trace) {
        out << "layer " << rec.layer << (rec.layer == 0 ? " (facts)" : "") << ": {";
        for (std::size_t i = 0; i < rec.ids.size(); ++i) out << (i ? ", " : "") << rec.ids[i];
        out << "}\n";
        for (std::size_t i = 0; i < rec.disjuncts.size(); ++i) {
            const auto& d = rec.disjuncts[i];
            out << "  disjunct " << i + 1 << ": " << d.description << "\n";
            for (const auto& t : d.terms) {
                out << "    " << t.term << ": poss=" << format_grade(t.possibility)
                    << " -> 1-poss=" << format_grade(1.0 - t.possibility) << "\n";
            }
            out << "    beta=" << format_grade(d.beta) << " height(K)=" << format_grade(d.k_height) << "\n";
        }
        out << "  height(h)=" << format_grade(height(rec.h_after)) << "\n";
        for (const auto& v : kb.variables) {
            out << "  " << v.name() << " = " << format_grades(project_to_set(rec.h_after, v.name())) << "\n";
        }
    }
    if (state.inconsistent) out << "warning: knowledge is inconsistent (subnormal h)\n";
    return out.str();
}

std::vector<OracleFinding> oracle_check(const KnowledgeState& state, const KnowledgeBase& kb) {
    std::vector<OracleFinding> findings;
    for (const auto& rec : state.trace) {
        if (rec.layer == 0 || rec.ids.size() != 1) continue;
        const DefaultRule* rule = kb.find_rule(rec.ids.front());
        if (!rule || !rule->antecedent.empty()) continue;

        const std::string& var = rule->consequent.variable;
        const FuzzySet before = project_to_set(rec.h_before, var);
        const FuzzySet after = project_to_set(rec.h_after, var);
        const FuzzySet formula = apply_default(before, rule->consequent.set);

        OracleFinding f{rec.layer, rule->id, var, false, approx_equal(after, formula), ""};
        std::string detail = "engine=" + format_grades(after) + " formula=" + format_grades(formula);
        if (before.is_crisp() && before.size() <= kb.options.oracle_limit) {
            const FuzzySet oracle = default_combine_oracle(rule->consequent.set, before, kb.options.oracle_limit);
            f.power_set_checked = true;
            f.matched = f.matched && approx_equal(oracle, formula);
            detail += " power-set=" + format_grades(oracle);
        }
        f.detail = std::move(detail);
        findings.push_back(std::move(f));
    }
    return findings;
}

}  // namespace possreason
