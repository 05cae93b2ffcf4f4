#include <doctest.h>

#include <random>

#include "possreason/errors.hpp"
#include "possreason/fuzzy_set.hpp"
#include "support/generators.hpp"

using namespace possreason;

namespace {

UniversePtr ab() { return make_universe("AB", {"a", "b"}); }
FuzzySet set(const UniversePtr& u, std::vector<Grade> g) { return FuzzySet(u, std::move(g)); }

}  // namespace

TEST_SUITE("fuzzy-core") {

TEST_CASE("universe rejects empty and repeated labels") {
    CHECK_THROWS_AS(make_universe("E", {}), DomainError);
    CHECK_THROWS_AS(make_universe("R", {"a", "a"}), DomainError);
    const auto u = make_universe("U", {"p", "q", "r"});
    CHECK(u->index_of("q") == 1u);
    CHECK_FALSE(u->index_of("z").has_value());
}

TEST_CASE("grades must lie in [0,1] and match the universe size") {
    const auto u = ab();
    CHECK_THROWS_AS(set(u, {1.5, 0.0}), DomainError);
    CHECK_THROWS_AS(set(u, {-0.1, 0.0}), DomainError);
    CHECK_THROWS_AS(set(u, {1.0}), DomainError);
}

TEST_CASE("intersect") {
    const auto u = ab();
    const auto a = set(u, {1, 0});
    CHECK(intersect(a, a) == a);
    CHECK(intersect(a, set(u, {0, 1})) == set(u, {0, 0}));
    CHECK(intersect(set(u, {1, 0.3}), set(u, {0.6, 1})) == set(u, {0.6, 0.3}));
}

TEST_CASE("union") {
    const auto u = ab();
    const auto a = set(u, {0.2, 0.7});
    CHECK(unite(a, FuzzySet::empty(u)) == a);
    CHECK(unite(set(u, {1, 0}), set(u, {0, 1})) == set(u, {1, 1}));
    CHECK(unite(a, set(u, {0.5, 0.1})) == set(u, {0.5, 0.7}));
}

TEST_CASE("complement") {
    const auto u = ab();
    CHECK(complement(set(u, {1, 0})) == set(u, {0, 1}));
    const auto a = set(u, {0.3, 0.3});
    CHECK(approx_equal(complement(a), set(u, {0.7, 0.7})));
    CHECK(approx_equal(complement(complement(a)), a));
}

TEST_CASE("possibility") {
    const auto u = make_universe("X", {"a", "b", "c"});
    CHECK(possibility(FuzzySet::crisp(u, {"a"}), FuzzySet::crisp(u, {"b", "c"})) == 0.0);
    CHECK(possibility(FuzzySet::crisp(u, {"a", "b"}), FuzzySet::crisp(u, {"b", "c"})) == 1.0);
    const auto v = ab();
    CHECK(possibility(set(v, {1, 0.5}), set(v, {0, 1})) == 0.5);
}

TEST_CASE("height and normality") {
    const auto u = ab();
    CHECK(height(set(u, {1, 0})) == 1.0);
    CHECK(height(FuzzySet::empty(u)) == 0.0);
    CHECK(height(set(u, {0.4, 0.7})) == 0.7);
    CHECK(is_normal(set(u, {1, 0})));
    CHECK_FALSE(is_normal(set(u, {0.4, 0.7})));
}

TEST_CASE("certainty") {
    const auto u = make_universe("X", {"a", "b", "c"});
    const auto a = FuzzySet::crisp(u, {"a", "b"});
    CHECK(certainty(a, a) == 1.0);
    CHECK(certainty(a, FuzzySet::full(u)) == 0.0);
    const auto v = ab();
    CHECK(certainty(set(v, {1, 0.2}), set(v, {1, 0.6})) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("universe mismatch is a domain error") {
    const auto a = FuzzySet::full(ab());
    const auto b = FuzzySet::full(make_universe("CD", {"c", "d"}));
    CHECK_THROWS_AS(intersect(a, b), DomainError);
    CHECK_THROWS_AS(unite(a, b), DomainError);
    CHECK_THROWS_AS(possibility(a, b), DomainError);
    CHECK_THROWS_AS(certainty(a, b), DomainError);
}

TEST_CASE("empty set is handled consistently") {
    const auto u = ab();
    const auto e = FuzzySet::empty(u);
    CHECK(height(e) == 0.0);
    CHECK(possibility(e, FuzzySet::full(u)) == 0.0);
    CHECK(possibility(set(u, {0.3, 1}), e) == 0.0);
}

TEST_CASE("crisp possibility agrees with label-set overlap") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto u = gen::universe(1 + i % 6);
        const auto a = gen::fuzzy(rng, u, true);
        const auto b = gen::fuzzy(rng, u, true);
        bool overlap = false;
        for (std::size_t x = 0; x < u->size(); ++x) overlap = overlap || (a[x] == 1.0 && b[x] == 1.0);
        CHECK(possibility(a, b) == (overlap ? 1.0 : 0.0));
    }
}

TEST_CASE("grade formatting") {
    CHECK(format_grade(0.0) == "0");
    CHECK(format_grade(1.0) == "1");
    CHECK(format_grade(0.4) == "0.400000");
    CHECK(format_grades(set(ab(), {1, 0.25})) == "{a/1, b/0.250000}");
}

}
