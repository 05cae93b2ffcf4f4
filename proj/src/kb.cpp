#include "possreason/kb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "possreason/errors.hpp"

namespace possreason {

bool operator==(const Literal& a, const Literal& b) {
    return a.variable == b.variable && a.set == b.set;
}

const UniversePtr* KnowledgeBase::find_universe(std::string_view name) const {
    auto it = std::find_if(universes.begin(), universes.end(),
                           [&](const UniversePtr& u) { return u->name() == name; });
    return it == universes.end() ? nullptr : &*it;
}

const Variable* KnowledgeBase::find_variable(std::string_view name) const {
    auto it = std::find_if(variables.begin(), variables.end(),
                           [&](const Variable& v) { return v.name() == name; });
    return it == variables.end() ? nullptr : &*it;
}

const Variable& KnowledgeBase::variable(std::string_view name) const {
    if (const auto* v = find_variable(name)) return *v;
    throw DomainError("unknown variable '" + std::string(name) + "'");
}

const DefaultRule* KnowledgeBase::find_rule(std::string_view id) const {
    auto it = std::find_if(defaults.begin(), defaults.end(), [&](const DefaultRule& r) { return r.id == id; });
    return it == defaults.end() ? nullptr : &*it;
}

SpacePtr KnowledgeBase::joint_space() const { return make_space(variables, options.max_cells); }

namespace {

void check_literal(const KnowledgeBase& kb, const Literal& lit, const std::string& where) {
    const Variable* v = kb.find_variable(lit.variable);
    if (!v) throw DomainError(where + ": unknown variable '" + lit.variable + "'");
    if (!(*v->universe == *lit.set.universe())) {
        throw DomainError(where + ": set is not on the universe of '" + lit.variable + "'");
    }
}

}  // namespace

void validate(const KnowledgeBase& kb) {
    std::set<std::string> names;
    for (const auto& u : kb.universes) {
        if (!names.insert(u->name()).second) throw DomainError("duplicate universe '" + u->name() + "'");
    }
    names.clear();
    for (const auto& v : kb.variables) {
        if (!v.universe) throw DomainError("variable '" + v.name() + "' has no universe");
        if (!names.insert(v.name()).second) throw DomainError("duplicate variable '" + v.name() + "'");
    }
    std::set<std::string> ids;
    for (const auto& f : kb.facts) {
        if (!ids.insert(f.id).second) throw DomainError("duplicate identifier '" + f.id + "'");
        check_literal(kb, f.literal, "fact " + f.id);
    }
    for (const auto& r : kb.defaults) {
        if (!ids.insert(r.id).second) throw DomainError("duplicate identifier '" + r.id + "'");
        std::set<std::string> ante_vars;
        for (const auto& lit : r.antecedent) {
            check_literal(kb, lit, "default " + r.id);
            if (!ante_vars.insert(lit.variable).second) {
                throw DomainError("default " + r.id + ": antecedent mentions '" + lit.variable + "' twice");
            }
        }
        check_literal(kb, r.consequent, "default " + r.id);
        if (ante_vars.count(r.consequent.variable)) {
            throw DomainError("default " + r.id + ": consequent variable '" + r.consequent.variable +
                              "' also appears in the antecedent");
        }
        if (height(r.consequent.set) == 0.0) {
            throw DomainError("default " + r.id + ": consequent set is empty");
        }
    }
    for (const auto& q : kb.queries) {
        const Variable& v = kb.variable(q.variable);
        if (q.set && !(*q.set->universe() == *v.universe)) {
            throw DomainError("query " + q.variable + ": set is not on the variable's universe");
        }
    }
    if (!(kb.options.threshold > 0.5 && kb.options.threshold <= 1.0)) {
        throw DomainError("threshold must lie in (0.5, 1]");
    }
    if (kb.options.max_cells < 1) throw DomainError("max_cells must be at least 1");
    if (kb.options.max_disjuncts < 1) throw DomainError("max_disjuncts must be at least 1");
    (void)kb.joint_space();
}

namespace {

bool plain_label(std::string_view s) {
    if (s.empty()) return false;
    static constexpr std::string_view keywords[] = {"universe", "var", "fact", "default", "if", "and", "then",
                                                    "not", "is", "query", "option", "typically", "all"};
    for (auto k : keywords) {
        if (s == k) return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'' || c == '.' ||
               c == '+';
    });
}

std::string quote_label(const std::string& s) {
    if (plain_label(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string shortest(Grade g) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, g);
    return std::string(buf, end);
}

}  // namespace

std::string format_set(const FuzzySet& set) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] == 0.0) continue;
        if (!first) out += ", ";
        first = false;
        out += quote_label(set.universe()->labels()[i]);
        if (set[i] != 1.0) out += "/" + shortest(set[i]);
    }
    return out + "}";
}

std::string format_literal(const Literal& literal) {
    return literal.variable + " is " + format_set(literal.set);
}

std::string to_dsl(const KnowledgeBase& kb) {
    std::ostringstream out;
    for (const auto& u : kb.universes) {
        out << "universe " << u->name() << " = {";
        for (std::size_t i = 0; i < u->size(); ++i) out << (i ? ", " : " ") << quote_label(u->labels()[i]);
        out << " }\n";
    }
    for (const auto& v : kb.variables) out << "var " << v.name() << " : " << v.universe->name() << "\n";
    const Options defaults;
    if (kb.options.max_cells != defaults.max_cells) out << "option max_cells = " << kb.options.max_cells << "\n";
    if (kb.options.max_disjuncts != defaults.max_disjuncts) {
        out << "option max_disjuncts = " << kb.options.max_disjuncts << "\n";
    }
    if (kb.options.threshold != defaults.threshold) out << "option threshold = " << shortest(kb.options.threshold) << "\n";
    if (kb.options.oracle_check != defaults.oracle_check) {
        out << "option oracle_check = " << (kb.options.oracle_check ? "true" : "false") << "\n";
    }
    if (kb.options.oracle_limit != defaults.oracle_limit) {
        out << "option oracle_limit = " << kb.options.oracle_limit << "\n";
    }
    for (const auto& f : kb.facts) out << "fact " << f.id << ": " << format_literal(f.literal) << "\n";
    for (const auto& r : kb.defaults) {
        out << "default " << r.id << ": ";
        if (!r.antecedent.empty()) {
            out << "if ";
            for (std::size_t i = 0; i < r.antecedent.size(); ++i) {
                out << (i ? " and " : "") << format_literal(r.antecedent[i]);
            }
            out << " then ";
        }
        out << format_literal(r.consequent) << "\n";
    }
    for (const auto& q : kb.queries) {
        out << "query " << q.variable;
        if (q.set) out << " is " << format_set(*q.set);
        out << "\n";
    }
    return out.str();
}

namespace {

template <typename T, typename Key>
bool same_by_key(std::vector<T> a, std::vector<T> b, Key key) {
    if (a.size() != b.size()) return false;
    auto less = [&](const T& x, const T& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return std::equal(a.begin(), a.end(), b.begin(), [&](const T& x, const T& y) { return key(x) == key(y); });
}

}  // namespace

bool equivalent(const KnowledgeBase& a, const KnowledgeBase& b) {
    auto universe_key = [](const UniversePtr& u) {
        std::string k = u->name();
        for (const auto& l : u->labels()) k += "\x1f" + l;
        return k;
    };
    auto variable_key = [](const Variable& v) { return v.name() + "\x1f" + v.universe->name(); };
    auto fact_key = [](const Fact& f) { return f.id + "\x1f" + format_literal(f.literal); };
    auto rule_key = [](const DefaultRule& r) {
        std::string k = r.id;
        for (const auto& l : r.antecedent) k += "\x1f" + format_literal(l);
        return k + "\x1e" + format_literal(r.consequent);
    };
    auto query_key = [](const Query& q) { return q.variable + (q.set ? "\x1f" + format_set(*q.set) : ""); };
    return same_by_key(a.universes, b.universes, universe_key) &&
           same_by_key(a.variables, b.variables, variable_key) && same_by_key(a.facts, b.facts, fact_key) &&
           same_by_key(a.defaults, b.defaults, rule_key) && same_by_key(a.queries, b.queries, query_key) &&
           a.options.max_cells == b.options.max_cells && a.options.max_disjuncts == b.options.max_disjuncts &&
           a.options.threshold == b.options.threshold && a.options.oracle_check == b.options.oracle_check &&
           a.options.oracle_limit == b.options.oracle_limit;
}

}  // namespace possreason
