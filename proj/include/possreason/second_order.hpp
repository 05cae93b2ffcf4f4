#pragma once

// Explicit power-set computations. This is a brute-force route used to
// validate the first-order default formula; it is never on the inference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "possreason/fuzzy_set.hpp"

namespace possreason {

inline constexpr std::size_t kDefaultOracleLimit = 12;

/// Crisp subset of a universe; bit i stands for element i in universe order.
using SubsetMask = std::uint32_t;

/// Grades over every crisp subset of a universe (2^|X| entries).
class SecondOrderSet {
public:
    SecondOrderSet(UniversePtr universe, std::vector<Grade> grades,
                   std::size_t limit = kDefaultOracleLimit);

    const UniversePtr& universe() const noexcept { return universe_; }
    std::span<const Grade> grades() const noexcept { return grades_; }
    Grade operator[](SubsetMask subset) const { return grades_[subset]; }
    std::size_t subsets() const noexcept { return grades_.size(); }

private:
    UniversePtr universe_;
    std::vector<Grade> grades_;
};

SubsetMask support_mask(const FuzzySet& set);
FuzzySet characteristic(const UniversePtr& universe, SubsetMask subset);

/// Entry for G is Poss[a/G].
SecondOrderSet qualify(const FuzzySet& a, std::size_t limit = kDefaultOracleLimit);
/// Entry for G is 1 - Poss[a/G].
SecondOrderSet star(const FuzzySet& a, std::size_t limit = kDefaultOracleLimit);
/// Singleton at the subset equal to b's support; b must be crisp.
SecondOrderSet lift(const FuzzySet& b, std::size_t limit = kDefaultOracleLimit);

SecondOrderSet so_intersect(const SecondOrderSet& a, const SecondOrderSet& b);
SecondOrderSet so_union(const SecondOrderSet& a, const SecondOrderSet& b);

/// First-order set with grade at x = max over subsets G containing x of s(G).
FuzzySet reduce(const SecondOrderSet& s);

/// reduce(star(a) ∩ lift(b)) ∪ (a ∩ b), computed through the power set.
FuzzySet default_combine_oracle(const FuzzySet& a, const FuzzySet& b,
                                std::size_t limit = kDefaultOracleLimit);

}  // namespace possreason
