#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "possreason/errors.hpp"
#include "possreason/parser.hpp"
#include "support/generators.hpp"

using namespace possreason;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ParseError parse_error(const std::string& text) {
    try {
        parse_kb(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    return ParseError("", 0, 0);
}

constexpr const char* kHeader = "universe Bool = { true, false }\nvar a : Bool\nvar b@1 : Bool\n";

}  // namespace

TEST_SUITE("kb-model") {

TEST_CASE("empty input") {
    const auto kb = parse_kb("");
    CHECK(kb.universes.empty());
    CHECK(kb.variables.empty());
    CHECK(kb.facts.empty());
    CHECK(kb.defaults.empty());
    const auto kb2 = parse_kb("# only a comment\n\n   \n");
    CHECK(kb2.variables.empty());
}

TEST_CASE("bundled yale.kb") {
    const auto kb = parse_kb(read_file(POSSREASON_DATA_DIR "/yale.kb"));
    CHECK(kb.variables.size() == 5);
    CHECK(kb.facts.size() == 3);
    CHECK(kb.defaults.size() == 4);
    for (const auto& v : kb.variables) CHECK(v.universe->size() == 2);
    REQUIRE(kb.queries.size() == 1);
    CHECK(kb.queries[0].variable == "alive@3");

    const auto& d4 = *kb.find_rule("D4");
    REQUIRE(d4.antecedent.size() == 3);
    CHECK(d4.antecedent[2].variable == "loaded@2");
    CHECK(d4.antecedent[2].set.support() == std::vector<std::string>{"false"});
    CHECK(d4.consequent.set.support() == std::vector<std::string>{"true"});
    CHECK(kb.variable("loaded@1").time == 1);
    CHECK(kb.variable("loaded@1").base == "loaded");
}

TEST_CASE("builtins match the bundled files") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        CHECK(equivalent(builtin(name), parse_kb(read_file(POSSREASON_DATA_DIR "/" + name + ".kb"))));
    }
    CHECK_THROWS_AS(builtin("nope"), DomainError);
}

TEST_CASE("builtin yale has the transcribed rules and time indices") {
    const auto kb = builtin("yale");
    std::vector<std::string> facts;
    for (const auto& f : kb.facts) facts.push_back(f.literal.variable);
    CHECK(facts == std::vector<std::string>{"loaded@1", "alive@2", "shot@2"});
    const std::vector<std::pair<int, int>> times{{1, 2}, {2, 3}, {2, 3}, {2, 3}};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& r = kb.defaults[i];
        CHECK(r.id == "D" + std::to_string(i + 1));
        int latest_antecedent = 0;
        for (const auto& l : r.antecedent) latest_antecedent = std::max(latest_antecedent, *kb.variable(l.variable).time);
        CHECK(latest_antecedent == times[i].first);
        CHECK(*kb.variable(r.consequent.variable).time == times[i].second);
    }
    // D3 requires the gun loaded at t2.
    const auto& d3 = *kb.find_rule("D3");
    CHECK(d3.antecedent[2].variable == "loaded@2");
    CHECK(d3.antecedent[2].set.support() == std::vector<std::string>{"true"});
}

TEST_CASE("builtin nixon variants") {
    CHECK(builtin("nixon").facts.empty());
    CHECK(builtin("nixon").defaults.size() == 2);
    const auto both = builtin("nixon-both");
    REQUIRE(both.facts.size() == 2);
    CHECK(format_literal(both.facts[0].literal) == "V is {quaker}");
    CHECK(format_literal(both.facts[1].literal) == "W is {republican}");
    CHECK(builtin("nixon-quaker-only").facts.size() == 1);
    CHECK(builtin("nixon-republican-only").facts.size() == 1);
}

TEST_CASE("fuzzy grades, bare labels and negation") {
    const auto kb = parse_kb(std::string(kHeader) +
                             "fact F: a is {true/0.25, false}\n"
                             "default T: typically a is not {true/0.75}\n"
                             "default U: if not a is {true} then b@1 is not {}\n"
                             "query a is {false}, b@1\n");
    CHECK(kb.facts[0].literal.set[0] == 0.25);
    CHECK(kb.facts[0].literal.set[1] == 1.0);
    CHECK(kb.defaults[0].antecedent.empty());
    CHECK(kb.defaults[0].consequent.set[0] == doctest::Approx(0.25));
    CHECK(kb.defaults[0].consequent.set[1] == 1.0);
    CHECK(kb.queries.size() == 2);
    CHECK(kb.queries[0].set.has_value());
    CHECK_FALSE(kb.queries[1].set.has_value());
}

TEST_CASE("empty consequent is rejected") {
    const auto e = parse_error(std::string(kHeader) + "default U: if a is {true} then b@1 is {}\n");
    CHECK(e.line() == 4);
}

TEST_CASE("diagnostics carry line and column") {
    SUBCASE("grade out of range") {
        const auto e = parse_error(std::string(kHeader) + "fact F: a is {true/1.5}\n");
        CHECK(e.line() == 4);
        CHECK(e.column() == 20);
        CHECK(e.message().find("outside [0,1]") != std::string::npos);
    }
    SUBCASE("unknown universe") {
        const auto e = parse_error("var x : Nope\n");
        CHECK(e.line() == 1);
        CHECK(e.message().find("unknown universe") != std::string::npos);
    }
    SUBCASE("unknown variable") {
        const auto e = parse_error(std::string(kHeader) + "fact F: c is {true}\n");
        CHECK(e.message().find("unknown variable 'c'") != std::string::npos);
    }
    SUBCASE("duplicate id across facts and defaults") {
        const auto e = parse_error(std::string(kHeader) + "fact F: a is {true}\ndefault F: a is {true}\n");
        CHECK(e.line() == 5);
        CHECK(e.message().find("duplicate identifier") != std::string::npos);
    }
    SUBCASE("non-integer time index") {
        const auto e = parse_error("universe B = { t }\nvar x@1.5 : B\n");
        CHECK(e.line() == 2);
        CHECK(e.column() == 7);
        CHECK(e.message().find("integer") != std::string::npos);
        CHECK(parse_error("universe B = { t }\nvar x@t2 : B\n").message().find("integer") != std::string::npos);
    }
    SUBCASE("syntax") {
        CHECK(parse_error("universe B = { t\n").message().find("expected '}'") != std::string::npos);
        CHECK(parse_error("frobnicate\n").message().find("unknown statement") != std::string::npos);
        CHECK(parse_error(std::string(kHeader) + "fact F: a is {true} extra\n").line() == 4);
        CHECK(parse_error(std::string(kHeader) + "fact F: a is {maybe}\n").message().find("not an element") !=
              std::string::npos);
        CHECK(parse_error(std::string(kHeader) + "fact F: a is {true, true}\n").message().find("twice") !=
              std::string::npos);
        CHECK(parse_error("universe B = { t, t }\n").message().find("duplicate element") != std::string::npos);
        CHECK(parse_error("universe B = { }\n").line() == 1);
        CHECK(parse_error("universe B = { \"t }\n").message().find("unterminated") != std::string::npos);
    }
    SUBCASE("rule shape") {
        CHECK(parse_error(std::string(kHeader) + "default D: if a is {true} and a is {false} then b@1 is {true}\n")
                  .message()
                  .find("twice") != std::string::npos);
        CHECK(parse_error(std::string(kHeader) + "default D: if a is {true} then a is {false}\n")
                  .message()
                  .find("also appears") != std::string::npos);
    }
    SUBCASE("options") {
        CHECK(parse_error("option threshold = 0.4\n").message().find("threshold") != std::string::npos);
        CHECK(parse_error("option max_cells = 0\n").message().find("positive") != std::string::npos);
        CHECK(parse_error("option colour = 3\n").message().find("unknown option") != std::string::npos);
    }
}

TEST_CASE("options and the cell limit") {
    const auto kb = parse_kb("option threshold = 0.8\noption oracle_check = true\noption max_cells = 64\n");
    CHECK(kb.options.threshold == 0.8);
    CHECK(kb.options.oracle_check);
    CHECK(kb.options.max_cells == 64);
    CHECK_THROWS_AS(parse_kb("option max_cells = 3\nuniverse B = { t, f }\nvar x : B\nvar y : B\n"), ResourceError);
}

TEST_CASE("quoted labels survive printing") {
    const auto kb = parse_kb("universe Odd = { \"two words\", plain, \"q\\\"uote\" }\nvar x : Odd\n"
                             "fact F: x is {\"two words\"/0.5, \"q\\\"uote\"}\n");
    CHECK(kb.universes[0]->labels()[0] == "two words");
    CHECK(kb.universes[0]->labels()[2] == "q\"uote");
    CHECK(equivalent(parse_kb(to_dsl(kb)), kb));
}

TEST_CASE("print then parse reproduces random knowledge bases") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        auto kb = gen::random_kb(rng, 1 + i % 3, i % 2 == 0);
        kb.queries.push_back({kb.variables[0].name(), std::nullopt});
        kb.queries.push_back({kb.variables.back().name(), gen::fuzzy(rng, kb.variables.back().universe)});
        if (i % 5 == 0) kb.options.threshold = 0.75;
        const std::string text = to_dsl(kb);
        CAPTURE(text);
        const auto back = parse_kb(text);
        CHECK(equivalent(back, kb));
        CHECK(to_dsl(back) == text);
    }
    for (const auto& name : builtin_names()) CHECK(equivalent(parse_kb(to_dsl(builtin(name))), builtin(name)));
}

TEST_CASE("validate catches programmatic mistakes") {
    auto kb = builtin("yale");
    kb.facts.push_back(kb.facts.front());
    CHECK_THROWS_AS(validate(kb), DomainError);
    kb = builtin("yale");
    kb.defaults[0].consequent.variable = "ghost";
    CHECK_THROWS_AS(validate(kb), DomainError);
    kb = builtin("yale");
    kb.options.threshold = 0.5;
    CHECK_THROWS_AS(validate(kb), DomainError);
}

}
