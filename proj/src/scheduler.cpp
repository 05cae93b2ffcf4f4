#include "possreason/scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "possreason/errors.hpp"

namespace possreason {

std::size_t PrioritySchedule::layer_of(const std::string& id) const {
    for (std::size_t k = 0; k < layers.size(); ++k) {
        if (std::find(layers[k].begin(), layers[k].end(), id) != layers[k].end()) return k;
    }
    throw DomainError("'" + id + "' is not in the schedule");
}

namespace {

bool same_literal(const Literal& a, const Literal& b) {
    return a.variable == b.variable && approx_equal(a.set, b.set);
}

bool contains_literal(const std::vector<Literal>& lits, const Literal& lit) {
    return std::any_of(lits.begin(), lits.end(), [&](const Literal& l) { return same_literal(l, lit); });
}

bool strict_subset(const std::vector<Literal>& small, const std::vector<Literal>& large) {
    if (small.size() >= large.size()) return false;
    return std::all_of(small.begin(), small.end(), [&](const Literal& l) { return contains_literal(large, l); });
}

}  // namespace

std::vector<PriorityEdge> specialization_edges(std::span<const DefaultRule> rules) {
    std::vector<PriorityEdge> edges;
    for (const auto& general : rules) {
        for (const auto& special : rules) {
            if (&general == &special) continue;
            if (strict_subset(general.antecedent, special.antecedent)) {
                edges.push_back({special.id, general.id});
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<PriorityEdge> temporal_edges(const KnowledgeBase& kb) {
    std::vector<PriorityEdge> edges;
    for (const auto& first : kb.defaults) {
        const auto t1 = kb.variable(first.consequent.variable).time;
        if (!t1) continue;
        for (const auto& second : kb.defaults) {
            const auto t2 = kb.variable(second.consequent.variable).time;
            if (t2 && *t1 < *t2) edges.push_back({first.id, second.id});
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

// Depth-first search for a cycle; returns it as a closed path.
std::vector<std::string> find_cycle(const std::vector<std::string>& nodes,
                                    const std::map<std::string, std::vector<std::string>>& succ) {
    enum class Mark { fresh, active, done };
    std::map<std::string, Mark> mark;
    std::vector<std::string> stack;
    std::vector<std::string> cycle;

    auto visit = [&](auto&& self, const std::string& n) -> bool {
        mark[n] = Mark::active;
        stack.push_back(n);
        if (auto it = succ.find(n); it != succ.end()) {
            for (const auto& m : it->second) {
                if (mark[m] == Mark::active) {
                    auto from = std::find(stack.begin(), stack.end(), m);
                    cycle.assign(from, stack.end());
                    cycle.push_back(m);
                    return true;
                }
                if (mark[m] == Mark::fresh && self(self, m)) return true;
            }
        }
        stack.pop_back();
        mark[n] = Mark::done;
        return false;
    };
    for (const auto& n : nodes) {
        if (mark[n] == Mark::fresh && visit(visit, n)) return cycle;
    }
    return {};
}

}  // namespace

PrioritySchedule layer_rules(std::vector<std::string> facts, std::vector<std::string> rules,
                             std::vector<PriorityEdge> edges) {
    std::sort(facts.begin(), facts.end());
    std::sort(rules.begin(), rules.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const std::set<std::string> rule_set(rules.begin(), rules.end());
    std::map<std::string, std::vector<std::string>> succ;
    std::map<std::string, std::size_t> indegree;
    for (const auto& r : rules) indegree[r] = 0;
    for (const auto& e : edges) {
        if (!rule_set.count(e.earlier) || !rule_set.count(e.later)) {
            throw DomainError("priority edge (" + e.earlier + ", " + e.later + ") names an unknown rule");
        }
        if (e.earlier == e.later) throw ScheduleError("priority cycle: " + e.earlier + " -> " + e.earlier);
        succ[e.earlier].push_back(e.later);
        ++indegree[e.later];
    }

    // Kahn's algorithm with longest-path ranks.
    std::map<std::string, std::size_t> rank;
    std::vector<std::string> ready;
    for (const auto& r : rules) {
        if (indegree[r] == 0) ready.push_back(r);
        rank[r] = 0;
    }
    std::size_t visited = 0;
    while (!ready.empty()) {
        const std::string n = ready.back();
        ready.pop_back();
        ++visited;
        for (const auto& m : succ[n]) {
            rank[m] = std::max(rank[m], rank[n] + 1);
            if (--indegree[m] == 0) ready.push_back(m);
        }
    }
    if (visited != rules.size()) {
        const auto cycle = find_cycle(rules, succ);
        std::string path;
        for (std::size_t i = 0; i < cycle.size(); ++i) path += (i ? " -> " : "") + cycle[i];
        throw ScheduleError("priority cycle: " + path);
    }

    PrioritySchedule schedule;
    schedule.layers.push_back(std::move(facts));
    for (const auto& r : rules) {
        const std::size_t layer = rank[r] + 1;
        if (schedule.layers.size() <= layer) schedule.layers.resize(layer + 1);
        schedule.layers[layer].push_back(r);
    }
    schedule.edges = std::move(edges);
    return schedule;
}

PrioritySchedule build_schedule(const KnowledgeBase& kb) {
    const auto temporal = temporal_edges(kb);
    const auto special = specialization_edges(kb.defaults);
    const std::set<PriorityEdge> temporal_set(temporal.begin(), temporal.end());

    std::vector<PriorityEdge> edges = temporal;
    std::vector<std::string> warnings;
    for (const auto& e : special) {
        if (temporal_set.count({e.later, e.earlier})) {
            warnings.push_back("specialization edge (" + e.earlier + ", " + e.later +
                               ") dropped: temporal priority orders " + e.later + " first");
            continue;
        }
        edges.push_back(e);
    }

    std::vector<std::string> facts;
    for (const auto& f : kb.facts) facts.push_back(f.id);
    std::vector<std::string> rules;
    for (const auto& r : kb.defaults) rules.push_back(r.id);

    PrioritySchedule schedule = layer_rules(std::move(facts), std::move(rules), std::move(edges));
    schedule.warnings = std::move(warnings);
    return schedule;
}

std::string format_schedule(const PrioritySchedule& schedule) {
    std::ostringstream out;
    for (std::size_t k = 0; k < schedule.layers.size(); ++k) {
        out << "layer " << k << ": {";
        for (std::size_t i = 0; i < schedule.layers[k].size(); ++i) out << (i ? ", " : "") << schedule.layers[k][i];
        out << "}\n";
    }
    for (const auto& w : schedule.warnings) out << "warning: " << w << "\n";
    return out.str();
}

}  // namespace possreason
