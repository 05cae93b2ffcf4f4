#include "possreason/second_order.hpp"

#include <algorithm>

#include "possreason/errors.hpp"

namespace possreason {

namespace {

constexpr std::size_t kMaskBits = sizeof(SubsetMask) * 8 - 1;

void check_size(const Universe& universe, std::size_t limit) {
    if (universe.size() > std::min(limit, kMaskBits)) {
        throw ResourceError("universe '" + universe.name() + "' has " + std::to_string(universe.size()) +
                            " elements; the power-set oracle is limited to " + std::to_string(limit));
    }
}

void require_same_universe(const SecondOrderSet& a, const SecondOrderSet& b) {
    if (!(a.universe() == b.universe() || *a.universe() == *b.universe())) {
        throw DomainError("second-order sets on different universes");
    }
}

}  // namespace

SecondOrderSet::SecondOrderSet(UniversePtr universe, std::vector<Grade> grades, std::size_t limit)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
    check_size(*universe_, limit);
    if (grades_.size() != (std::size_t{1} << universe_->size())) {
        throw DomainError("second-order set needs 2^" + std::to_string(universe_->size()) + " grades");
    }
    for (Grade g : grades_) {
        if (!(g >= 0.0 && g <= 1.0)) throw DomainError("second-order grade outside [0,1]");
    }
}

SubsetMask support_mask(const FuzzySet& set) {
    check_size(*set.universe(), kMaskBits);
    SubsetMask mask = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] > 0.0) mask |= SubsetMask{1} << i;
    }
    return mask;
}

FuzzySet characteristic(const UniversePtr& universe, SubsetMask subset) {
    std::vector<Grade> grades(universe->size());
    for (std::size_t i = 0; i < grades.size(); ++i) grades[i] = (subset >> i) & 1U ? 1.0 : 0.0;
    return FuzzySet(universe, std::move(grades));
}

SecondOrderSet qualify(const FuzzySet& a, std::size_t limit) {
    check_size(*a.universe(), limit);
    const std::size_t n = std::size_t{1} << a.size();
    std::vector<Grade> grades(n);
    for (std::size_t g = 0; g < n; ++g) {
        grades[g] = possibility(a, characteristic(a.universe(), static_cast<SubsetMask>(g)));
    }
    return SecondOrderSet(a.universe(), std::move(grades), limit);
}

SecondOrderSet star(const FuzzySet& a, std::size_t limit) {
    const SecondOrderSet q = qualify(a, limit);
    std::vector<Grade> grades(q.subsets());
    for (std::size_t g = 0; g < grades.size(); ++g) grades[g] = 1.0 - q.grades()[g];
    return SecondOrderSet(a.universe(), std::move(grades), limit);
}

SecondOrderSet lift(const FuzzySet& b, std::size_t limit) {
    if (!b.is_crisp()) {
        throw DomainError("only crisp sets can be lifted into the power set");
    }
    check_size(*b.universe(), limit);
    std::vector<Grade> grades(std::size_t{1} << b.size(), 0.0);
    grades[support_mask(b)] = 1.0;
    return SecondOrderSet(b.universe(), std::move(grades), limit);
}

SecondOrderSet so_intersect(const SecondOrderSet& a, const SecondOrderSet& b) {
    require_same_universe(a, b);
    std::vector<Grade> grades(a.subsets());
    for (std::size_t g = 0; g < grades.size(); ++g) grades[g] = std::min(a.grades()[g], b.grades()[g]);
    return SecondOrderSet(a.universe(), std::move(grades), kMaskBits);
}

SecondOrderSet so_union(const SecondOrderSet& a, const SecondOrderSet& b) {
    require_same_universe(a, b);
    std::vector<Grade> grades(a.subsets());
    for (std::size_t g = 0; g < grades.size(); ++g) grades[g] = std::max(a.grades()[g], b.grades()[g]);
    return SecondOrderSet(a.universe(), std::move(grades), kMaskBits);
}

FuzzySet reduce(const SecondOrderSet& s) {
    const auto& universe = s.universe();
    std::vector<Grade> grades(universe->size(), 0.0);
    for (std::size_t g = 0; g < s.subsets(); ++g) {
        for (std::size_t x = 0; x < grades.size(); ++x) {
            if ((g >> x) & 1U) grades[x] = std::max(grades[x], s.grades()[g]);
        }
    }
    return FuzzySet(universe, std::move(grades));
}

FuzzySet default_combine_oracle(const FuzzySet& a, const FuzzySet& b, std::size_t limit) {
    const FuzzySet blocked_part = reduce(so_intersect(star(a, limit), lift(b, limit)));
    return unite(blocked_part, intersect(a, b));
}

}  // namespace possreason
