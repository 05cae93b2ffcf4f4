#include "possreason/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "possreason/errors.hpp"

namespace possreason {

Universe::Universe(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw DomainError("universe '" + name_ + "' has no elements");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : labels_) {
        if (!seen.insert(label).second) {
            throw DomainError("universe '" + name_ + "' repeats label '" + label + "'");
        }
    }
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

UniversePtr make_universe(std::string name, std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(name), std::move(labels));
}

FuzzySet::FuzzySet(UniversePtr universe, std::vector<Grade> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
    if (!universe_) throw DomainError("fuzzy set without a universe");
    if (grades_.size() != universe_->size()) {
        throw DomainError("fuzzy set on '" + universe_->name() + "' needs " +
                          std::to_string(universe_->size()) + " grades, got " +
                          std::to_string(grades_.size()));
    }
    for (Grade g : grades_) {
        if (!(g >= 0.0 && g <= 1.0)) {
            throw DomainError("grade outside [0,1] on '" + universe_->name() + "'");
        }
    }
}

FuzzySet FuzzySet::empty(UniversePtr universe) {
    const auto n = universe->size();
    return FuzzySet(std::move(universe), std::vector<Grade>(n, 0.0));
}

FuzzySet FuzzySet::full(UniversePtr universe) {
    const auto n = universe->size();
    return FuzzySet(std::move(universe), std::vector<Grade>(n, 1.0));
}

FuzzySet FuzzySet::crisp(UniversePtr universe, const std::vector<std::string>& members) {
    std::vector<Grade> grades(universe->size(), 0.0);
    for (const auto& m : members) {
        auto idx = universe->index_of(m);
        if (!idx) throw DomainError("'" + m + "' is not an element of '" + universe->name() + "'");
        grades[*idx] = 1.0;
    }
    return FuzzySet(std::move(universe), std::move(grades));
}

Grade FuzzySet::at(std::string_view label) const {
    auto idx = universe_->index_of(label);
    if (!idx) throw DomainError("'" + std::string(label) + "' is not an element of '" + universe_->name() + "'");
    return grades_[*idx];
}

bool FuzzySet::is_crisp() const {
    return std::all_of(grades_.begin(), grades_.end(), [](Grade g) { return g == 0.0 || g == 1.0; });
}

std::vector<std::string> FuzzySet::support() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < grades_.size(); ++i) {
        if (grades_[i] > 0.0) out.push_back(universe_->labels()[i]);
    }
    return out;
}

bool same_universe(const FuzzySet& a, const FuzzySet& b) {
    return a.universe() == b.universe() || *a.universe() == *b.universe();
}

namespace {

void require_same_universe(const FuzzySet& a, const FuzzySet& b, const char* op) {
    if (!same_universe(a, b)) {
        throw DomainError(std::string(op) + ": universe mismatch ('" + a.universe()->name() +
                          "' vs '" + b.universe()->name() + "')");
    }
}

template <typename Op>
FuzzySet pointwise(const FuzzySet& a, const FuzzySet& b, Op op) {
    std::vector<Grade> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
    return FuzzySet(a.universe(), std::move(out));
}

}  // namespace

FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a, b, "intersect");
    return pointwise(a, b, [](Grade x, Grade y) { return std::min(x, y); });
}

FuzzySet unite(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a, b, "union");
    return pointwise(a, b, [](Grade x, Grade y) { return std::max(x, y); });
}

FuzzySet complement(const FuzzySet& a) {
    std::vector<Grade> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 - a[i];
    return FuzzySet(a.universe(), std::move(out));
}

Grade possibility(const FuzzySet& a, const FuzzySet& g) {
    require_same_universe(a, g, "possibility");
    Grade best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::min(a[i], g[i]));
    return best;
}

Grade certainty(const FuzzySet& a, const FuzzySet& g) {
    require_same_universe(a, g, "certainty");
    return 1.0 - possibility(complement(a), g);
}

Grade height(const FuzzySet& a) {
    Grade best = 0.0;
    for (Grade g : a.grades()) best = std::max(best, g);
    return best;
}

bool is_normal(const FuzzySet& a) { return height(a) == 1.0; }

bool grades_equal(Grade a, Grade b, Grade tolerance) {
    return a == b || std::fabs(a - b) <= tolerance;
}

bool approx_equal(const FuzzySet& a, const FuzzySet& b, Grade tolerance) {
    if (!same_universe(a, b)) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!grades_equal(a[i], b[i], tolerance)) return false;
    }
    return true;
}

bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return same_universe(a, b) && std::equal(a.grades().begin(), a.grades().end(), b.grades().begin());
}

std::string format_grade(Grade g) {
    if (g == 0.0) return "0";
    if (g == 1.0) return "1";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", g);
    return buf;
}

std::string format_grades(const FuzzySet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += set.universe()->labels()[i] + "/" + format_grade(set[i]);
    }
    return out + "}";
}

}  // namespace possreason
