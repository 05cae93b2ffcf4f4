#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "possreason/kb.hpp"

namespace possreason {

/// `earlier` is introduced in a strictly earlier layer than `later`.
struct PriorityEdge {
    std::string earlier;
    std::string later;

    auto operator<=>(const PriorityEdge&) const = default;
};

struct PrioritySchedule {
    /// Layer 0 holds the facts; ids are sorted inside each layer.
    std::vector<std::vector<std::string>> layers;
    /// Edges the layering honours, after conflict resolution.
    std::vector<PriorityEdge> edges;
    std::vector<std::string> warnings;

    std::size_t layer_of(const std::string& id) const;
};

/// Specialization priority: (R2, R1) whenever R1's antecedent is a strict subset of R2's.
std::vector<PriorityEdge> specialization_edges(std::span<const DefaultRule> rules);

/// Temporal priority: (R1, R2) whenever both consequents are timed and R1's is earlier.
std::vector<PriorityEdge> temporal_edges(const KnowledgeBase& kb);

/// Longest-path layering of rules under `edges`, preceded by a layer of facts.
/// Throws ScheduleError naming a cycle when the edges are not acyclic.
PrioritySchedule layer_rules(std::vector<std::string> facts, std::vector<std::string> rules,
                             std::vector<PriorityEdge> edges);

/// Temporal edges win over opposing specialization edges; each dropped edge leaves a warning.
PrioritySchedule build_schedule(const KnowledgeBase& kb);

std::string format_schedule(const PrioritySchedule& schedule);

}  // namespace possreason
