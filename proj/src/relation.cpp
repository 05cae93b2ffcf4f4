#include "possreason/relation.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "possreason/errors.hpp"

namespace possreason {

std::string Variable::name() const {
    return time ? base + "@" + std::to_string(*time) : base;
}

Variable make_variable(std::string base, std::optional<int> time, UniversePtr universe) {
    if (!universe) throw DomainError("variable '" + base + "' without a universe");
    return Variable{std::move(base), time, std::move(universe)};
}

JointSpace::JointSpace(std::vector<Variable> variables, std::size_t cell_limit)
    : variables_(std::move(variables)), cell_limit_(cell_limit) {
    std::sort(variables_.begin(), variables_.end(),
              [](const Variable& a, const Variable& b) { return a.name() < b.name(); });
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        names_.push_back(variables_[i].name());
        if (i > 0 && names_[i] == names_[i - 1]) {
            throw DomainError("joint space repeats variable '" + names_[i] + "'");
        }
    }
    strides_.assign(variables_.size(), 1);
    for (std::size_t i = variables_.size(); i-- > 0;) {
        strides_[i] = cells_;
        const std::size_t n = variables_[i].universe->size();
        if (cells_ > cell_limit_ / n) {
            throw ResourceError("joint space exceeds the cell limit of " + std::to_string(cell_limit_));
        }
        cells_ *= n;
    }
    if (cells_ > cell_limit_) {
        throw ResourceError("joint space exceeds the cell limit of " + std::to_string(cell_limit_));
    }
}

std::optional<std::size_t> JointSpace::axis_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

const Variable& JointSpace::variable(std::string_view name) const {
    auto axis = axis_of(name);
    if (!axis) throw DomainError("variable '" + std::string(name) + "' is not in the joint space");
    return variables_[*axis];
}

std::vector<std::size_t> JointSpace::coordinates(std::size_t cell) const {
    std::vector<std::size_t> out(variables_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (cell / strides_[i]) % variables_[i].universe->size();
    }
    return out;
}

std::size_t JointSpace::cell_of(std::span<const std::size_t> coordinates) const {
    std::size_t cell = 0;
    for (std::size_t i = 0; i < coordinates.size(); ++i) cell += coordinates[i] * strides_[i];
    return cell;
}

SpacePtr make_space(std::vector<Variable> variables, std::size_t cell_limit) {
    return std::make_shared<const JointSpace>(std::move(variables), cell_limit);
}

SpacePtr union_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b || *a == *b) return a;
    std::map<std::string, Variable> merged;
    for (const auto& v : a->variables()) merged.emplace(v.name(), v);
    for (const auto& v : b->variables()) {
        auto [it, inserted] = merged.emplace(v.name(), v);
        if (!inserted && !(*it->second.universe == *v.universe)) {
            throw DomainError("variable '" + v.name() + "' has two different universes");
        }
    }
    std::vector<Variable> vars;
    for (auto& [_, v] : merged) vars.push_back(v);
    return make_space(std::move(vars), std::min(a->cell_limit(), b->cell_limit()));
}

Relation::Relation(SpacePtr space, std::vector<Grade> grades)
    : space_(std::move(space)), grades_(std::move(grades)) {
    if (grades_.size() != space_->cells()) {
        throw DomainError("relation needs " + std::to_string(space_->cells()) + " grades, got " +
                          std::to_string(grades_.size()));
    }
    for (Grade g : grades_) {
        if (!(g >= 0.0 && g <= 1.0)) throw DomainError("relation grade outside [0,1]");
    }
}

Relation Relation::filled(SpacePtr space, Grade value) {
    const auto n = space->cells();
    return Relation(std::move(space), std::vector<Grade>(n, value));
}

bool Relation::is_crisp() const {
    return std::all_of(grades_.begin(), grades_.end(), [](Grade g) { return g == 0.0 || g == 1.0; });
}

namespace {

std::vector<kernels::Axis> axes_between(const JointSpace& source, const JointSpace& target) {
    std::vector<kernels::Axis> axes;
    for (std::size_t i = 0; i < target.variables().size(); ++i) {
        const auto& name = target.names()[i];
        std::size_t src_stride = 0;
        if (auto s = source.axis_of(name)) {
            if (!(*source.variables()[*s].universe == *target.variables()[i].universe)) {
                throw DomainError("variable '" + name + "' has two different universes");
            }
            src_stride = source.stride(*s);
        }
        axes.push_back({target.variables()[i].universe->size(), target.stride(i), src_stride});
    }
    for (const auto& name : source.names()) {
        if (!target.contains(name)) {
            throw DomainError("variable '" + name + "' is missing from the target space");
        }
    }
    return axes;
}

std::vector<Grade> run_broadcast(std::span<const Grade> src, const std::vector<kernels::Axis>& axes,
                                 std::size_t cells, Execution exec) {
    std::vector<Grade> out(cells);
    if (kernels::use_parallel(exec, cells)) {
        kernels::parallel::broadcast(src, axes, out);
    } else {
        kernels::serial::broadcast(src, axes, out);
    }
    return out;
}

template <typename Serial, typename Parallel>
Relation combine(const Relation& a, const Relation& b, Execution exec, Serial serial_op,
                 Parallel parallel_op) {
    const SpacePtr space = union_space(a.space(), b.space());
    const Relation lhs = align(a, space, exec);
    const Relation rhs = align(b, space, exec);
    std::vector<Grade> out(space->cells());
    if (kernels::use_parallel(exec, out.size())) {
        parallel_op(lhs.grades(), rhs.grades(), out);
    } else {
        serial_op(lhs.grades(), rhs.grades(), out);
    }
    return Relation(space, std::move(out));
}

}  // namespace

Relation cylindrical_extend(const FuzzySet& set, std::string_view variable, const SpacePtr& target,
                            Execution exec) {
    auto axis = target->axis_of(variable);
    if (!axis) {
        throw DomainError("cannot extend: variable '" + std::string(variable) + "' is not in the target space");
    }
    const auto& universe = target->variables()[*axis].universe;
    if (!(*universe == *set.universe())) {
        throw DomainError("cannot extend: set is on '" + set.universe()->name() + "' but '" +
                          std::string(variable) + "' ranges over '" + universe->name() + "'");
    }
    std::vector<kernels::Axis> axes{{universe->size(), target->stride(*axis), 1}};
    return Relation(target, run_broadcast(set.grades(), axes, target->cells(), exec));
}

Relation align(const Relation& r, const SpacePtr& target, Execution exec) {
    if (r.space() == target || *r.space() == *target) return Relation(target, {r.grades().begin(), r.grades().end()});
    const auto axes = axes_between(*r.space(), *target);
    return Relation(target, run_broadcast(r.grades(), axes, target->cells(), exec));
}

Relation conjoin(const Relation& a, const Relation& b, Execution exec) {
    return combine(a, b, exec, kernels::serial::min, kernels::parallel::min);
}

Relation disjoin(const Relation& a, const Relation& b, Execution exec) {
    return combine(a, b, exec, kernels::serial::max, kernels::parallel::max);
}

Relation complement_rel(const Relation& r, Execution exec) {
    std::vector<Grade> out(r.cells());
    if (kernels::use_parallel(exec, out.size())) {
        kernels::parallel::complement(r.grades(), out);
    } else {
        kernels::serial::complement(r.grades(), out);
    }
    return Relation(r.space(), std::move(out));
}

Relation project(const Relation& r, const std::vector<std::string>& keep, Execution exec) {
    if (keep.empty()) throw DomainError("projection needs at least one variable (use height for none)");
    const JointSpace& space = *r.space();
    std::vector<Variable> kept_vars;
    for (const auto& name : keep) {
        const Variable& v = space.variable(name);
        if (std::any_of(kept_vars.begin(), kept_vars.end(), [&](const Variable& k) { return k.name() == name; })) {
            continue;
        }
        kept_vars.push_back(v);
    }
    const SpacePtr target = make_space(kept_vars, space.cell_limit());
    if (*target == space) return Relation(target, {r.grades().begin(), r.grades().end()});

    // Base offset of every kept cell, and offsets spanning the eliminated axes.
    std::vector<std::size_t> bases(target->cells(), 0);
    for (std::size_t o = 0; o < bases.size(); ++o) {
        const auto coords = target->coordinates(o);
        for (std::size_t k = 0; k < coords.size(); ++k) {
            bases[o] += coords[k] * space.stride(*space.axis_of(target->names()[k]));
        }
    }
    std::vector<std::size_t> offsets{0};
    for (std::size_t i = 0; i < space.variables().size(); ++i) {
        if (target->contains(space.names()[i])) continue;
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * space.variables()[i].universe->size());
        for (std::size_t off : offsets) {
            for (std::size_t e = 0; e < space.variables()[i].universe->size(); ++e) {
                next.push_back(off + e * space.stride(i));
            }
        }
        offsets = std::move(next);
    }

    std::vector<Grade> out(target->cells());
    if (kernels::use_parallel(exec, r.cells())) {
        kernels::parallel::project_max(r.grades(), bases, offsets, out);
    } else {
        kernels::serial::project_max(r.grades(), bases, offsets, out);
    }
    return Relation(target, std::move(out));
}

FuzzySet project_to_set(const Relation& r, std::string_view variable, Execution exec) {
    const Relation p = project(r, {std::string(variable)}, exec);
    return FuzzySet(p.space()->variables().front().universe, {p.grades().begin(), p.grades().end()});
}

Grade poss_against(const Relation& r, const FuzzySet& set, std::string_view variable, Execution exec) {
    const JointSpace& space = *r.space();
    auto axis = space.axis_of(variable);
    if (!axis) {
        throw DomainError("variable '" + std::string(variable) + "' is not in the relation's space");
    }
    if (!(*space.variables()[*axis].universe == *set.universe())) {
        throw DomainError("set universe does not match variable '" + std::string(variable) + "'");
    }
    if (kernels::use_parallel(exec, r.cells())) {
        return kernels::parallel::max_min_axis(r.grades(), set.grades(), space.stride(*axis));
    }
    return kernels::serial::max_min_axis(r.grades(), set.grades(), space.stride(*axis));
}

Grade height(const Relation& r, Execution exec) {
    if (kernels::use_parallel(exec, r.cells())) return kernels::parallel::max_reduce(r.grades());
    return kernels::serial::max_reduce(r.grades());
}

bool operator==(const Relation& a, const Relation& b) {
    return *a.space() == *b.space() &&
           std::equal(a.grades().begin(), a.grades().end(), b.grades().begin());
}

bool approx_equal(const Relation& a, const Relation& b, Grade tolerance) {
    if (!(*a.space() == *b.space())) return false;
    for (std::size_t i = 0; i < a.cells(); ++i) {
        if (!grades_equal(a[i], b[i], tolerance)) return false;
    }
    return true;
}

}  // namespace possreason
