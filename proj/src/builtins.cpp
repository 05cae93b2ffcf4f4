#include <array>
#include <utility>

#include "possreason/errors.hpp"
#include "possreason/parser.hpp"

namespace possreason {

namespace {

// Mirrors data/*.kb; tests keep the two in sync.
constexpr std::array<std::pair<std::string_view, std::string_view>, 5> kBuiltins{{
    {"nixon", R"kb(# Complementary defaults: quakers are typically pacifists,
# republicans are typically not.
universe X = { quaker, non_quaker }
universe Y = { pacifist, non_pacifist }
universe Z = { republican, non_republican }

var V : X
var U : Y
var W : Z

default P1: if V is {quaker} then U is {pacifist}
default P2: if W is {republican} then U is not {pacifist}

query U
)kb"},
    {"nixon-quaker-only", R"kb(# Complementary defaults: quakers are typically pacifists,
# republicans are typically not.
universe X = { quaker, non_quaker }
universe Y = { pacifist, non_pacifist }
universe Z = { republican, non_republican }

var V : X
var U : Y
var W : Z

fact F1: V is {quaker}

default P1: if V is {quaker} then U is {pacifist}
default P2: if W is {republican} then U is not {pacifist}

query U
)kb"},
    {"nixon-republican-only", R"kb(# Complementary defaults: quakers are typically pacifists,
# republicans are typically not.
universe X = { quaker, non_quaker }
universe Y = { pacifist, non_pacifist }
universe Z = { republican, non_republican }

var V : X
var U : Y
var W : Z

fact F2: W is {republican}

default P1: if V is {quaker} then U is {pacifist}
default P2: if W is {republican} then U is not {pacifist}

query U
)kb"},
    {"nixon-both", R"kb(# Complementary defaults: quakers are typically pacifists,
# republicans are typically not.
universe X = { quaker, non_quaker }
universe Y = { pacifist, non_pacifist }
universe Z = { republican, non_republican }

var V : X
var U : Y
var W : Z

fact F1: V is {quaker}
fact F2: W is {republican}

default P1: if V is {quaker} then U is {pacifist}
default P2: if W is {republican} then U is not {pacifist}

query U
)kb"},
    {"yale", R"kb(# Yale shooting: a loaded gun, a person alive at t2, shot at t2.
universe Bool = { true, false }

var loaded@1 : Bool
var loaded@2 : Bool
var alive@2  : Bool
var alive@3  : Bool
var shot@2   : Bool

fact F1: loaded@1 is {true}
fact F2: alive@2  is {true}
fact F3: shot@2   is {true}

default D1: if loaded@1 is {true} then loaded@2 is {true}
default D2: if alive@2 is {true} then alive@3 is {true}
default D3: if alive@2 is {true} and shot@2 is {true} and loaded@2 is {true} then alive@3 is {false}
default D4: if alive@2 is {true} and shot@2 is {true} and not loaded@2 is {true} then alive@3 is {true}

query alive@3
)kb"},
}};

}  // namespace

std::string_view builtin_source(std::string_view name) {
    for (const auto& [key, source] : kBuiltins) {
        if (key == name) return source;
    }
    throw DomainError("unknown builtin '" + std::string(name) + "'");
}

KnowledgeBase builtin(std::string_view name) { return parse_kb(builtin_source(name)); }

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [key, _] : kBuiltins) names.emplace_back(key);
    return names;
}

}  // namespace possreason
