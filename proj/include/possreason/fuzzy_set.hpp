#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace possreason {

using Grade = double;

/// Tolerance used when comparing non-crisp grades.
inline constexpr Grade kGradeTolerance = 1e-9;

/// A finite, ordered set of opaque labels. Element order fixes the grade-vector layout.
class Universe {
public:
    Universe(std::string name, std::vector<std::string> labels);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const Universe& other) const {
        return name_ == other.name_ && labels_ == other.labels_;
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::string name, std::vector<std::string> labels);

/// Membership grades in [0,1], one per element of the universe.
class FuzzySet {
public:
    FuzzySet(UniversePtr universe, std::vector<Grade> grades);

    static FuzzySet empty(UniversePtr universe);
    static FuzzySet full(UniversePtr universe);
    /// Crisp set containing exactly the listed labels.
    static FuzzySet crisp(UniversePtr universe, const std::vector<std::string>& members);

    const UniversePtr& universe() const noexcept { return universe_; }
    std::span<const Grade> grades() const noexcept { return grades_; }
    std::size_t size() const noexcept { return grades_.size(); }
    Grade operator[](std::size_t i) const { return grades_[i]; }
    Grade at(std::string_view label) const;

    bool is_crisp() const;
    /// Labels with non-zero grade, in universe order.
    std::vector<std::string> support() const;

private:
    UniversePtr universe_;
    std::vector<Grade> grades_;
};

bool same_universe(const FuzzySet& a, const FuzzySet& b);

FuzzySet intersect(const FuzzySet& a, const FuzzySet& b);
FuzzySet unite(const FuzzySet& a, const FuzzySet& b);
FuzzySet complement(const FuzzySet& a);

/// max_x min(a(x), g(x)).
Grade possibility(const FuzzySet& a, const FuzzySet& g);
/// 1 - possibility(complement(a), g).
Grade certainty(const FuzzySet& a, const FuzzySet& g);

Grade height(const FuzzySet& a);
bool is_normal(const FuzzySet& a);

bool grades_equal(Grade a, Grade b, Grade tolerance = kGradeTolerance);
/// Pointwise equality within tolerance; universes must match.
bool approx_equal(const FuzzySet& a, const FuzzySet& b, Grade tolerance = kGradeTolerance);
/// Bitwise equality of grade vectors on the same universe.
bool operator==(const FuzzySet& a, const FuzzySet& b);

/// Six decimals; exact 0 and 1 print as "0" and "1".
std::string format_grade(Grade g);
/// Every element with its grade: `{a/1, b/0.300000}`.
std::string format_grades(const FuzzySet& set);

}  // namespace possreason
