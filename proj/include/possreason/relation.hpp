#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "possreason/fuzzy_set.hpp"
#include "possreason/kernels.hpp"

namespace possreason {

inline constexpr std::size_t kDefaultCellLimit = 1'000'000;

/// A named variable over a universe. `alive@2` and `alive@3` are distinct variables.
struct Variable {
    std::string base;
    std::optional<int> time;
    UniversePtr universe;

    /// Base name plus `@time` when timed; the identity used everywhere else.
    std::string name() const;
};

Variable make_variable(std::string base, std::optional<int> time, UniversePtr universe);

/// Product space of distinct variables, ordered lexicographically by name.
/// Cell layout is row-major: the last variable varies fastest.
class JointSpace {
public:
    JointSpace(std::vector<Variable> variables, std::size_t cell_limit = kDefaultCellLimit);

    const std::vector<Variable>& variables() const noexcept { return variables_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t cells() const noexcept { return cells_; }
    std::size_t cell_limit() const noexcept { return cell_limit_; }
    std::size_t stride(std::size_t axis) const { return strides_[axis]; }
    std::optional<std::size_t> axis_of(std::string_view name) const;
    bool contains(std::string_view name) const { return axis_of(name).has_value(); }
    const Variable& variable(std::string_view name) const;

    /// Per-axis element index of a cell.
    std::vector<std::size_t> coordinates(std::size_t cell) const;
    std::size_t cell_of(std::span<const std::size_t> coordinates) const;

    bool operator==(const JointSpace& other) const { return names_ == other.names_; }

private:
    std::vector<Variable> variables_;
    std::vector<std::string> names_;
    std::vector<std::size_t> strides_;
    std::size_t cells_ = 1;
    std::size_t cell_limit_;
};

using SpacePtr = std::shared_ptr<const JointSpace>;

SpacePtr make_space(std::vector<Variable> variables, std::size_t cell_limit = kDefaultCellLimit);
/// Smallest space holding the variables of both operands.
SpacePtr union_space(const SpacePtr& a, const SpacePtr& b);

/// Dense fuzzy relation: one grade per joint cell.
class Relation {
public:
    Relation(SpacePtr space, std::vector<Grade> grades);

    static Relation filled(SpacePtr space, Grade value);
    static Relation ones(SpacePtr space) { return filled(std::move(space), 1.0); }
    static Relation zeros(SpacePtr space) { return filled(std::move(space), 0.0); }

    const SpacePtr& space() const noexcept { return space_; }
    std::span<const Grade> grades() const noexcept { return grades_; }
    Grade operator[](std::size_t cell) const { return grades_[cell]; }
    std::size_t cells() const noexcept { return grades_.size(); }
    bool is_crisp() const;

private:
    SpacePtr space_;
    std::vector<Grade> grades_;
};

using kernels::Execution;

/// Embed a set on `variable` into `target`, ignoring every other coordinate.
Relation cylindrical_extend(const FuzzySet& set, std::string_view variable, const SpacePtr& target,
                            Execution exec = Execution::automatic);
/// Re-express `r` over a superspace of its own space.
Relation align(const Relation& r, const SpacePtr& target, Execution exec = Execution::automatic);

Relation conjoin(const Relation& a, const Relation& b, Execution exec = Execution::automatic);
Relation disjoin(const Relation& a, const Relation& b, Execution exec = Execution::automatic);
Relation complement_rel(const Relation& r, Execution exec = Execution::automatic);

/// Max over every coordinate not in `keep`.
Relation project(const Relation& r, const std::vector<std::string>& keep,
                 Execution exec = Execution::automatic);
/// Projection onto a single variable, returned as a fuzzy set on its universe.
FuzzySet project_to_set(const Relation& r, std::string_view variable,
                        Execution exec = Execution::automatic);

/// max over cells of min(r(cell), set(value of `variable` in cell)).
Grade poss_against(const Relation& r, const FuzzySet& set, std::string_view variable,
                   Execution exec = Execution::automatic);

Grade height(const Relation& r, Execution exec = Execution::automatic);

bool operator==(const Relation& a, const Relation& b);
bool approx_equal(const Relation& a, const Relation& b, Grade tolerance = kGradeTolerance);

}  // namespace possreason
