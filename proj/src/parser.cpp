#include "possreason/parser.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "possreason/errors.hpp"

namespace possreason {

namespace {

struct Token {
    enum class Kind { word, string, punct, end };
    Kind kind;
    std::string text;
    std::size_t column;
};

bool word_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u >= 0x80 || c == '_' || c == '-' || c == '\'' || c == '.' || c == '+';
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '"') {
            const std::size_t start = i++;
            std::string text;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    text += line[i + 1];
                    i += 2;
                } else if (line[i] == '"') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    text += line[i++];
                }
            }
            if (!closed) throw ParseError("unterminated string", line_no, start + 1);
            tokens.push_back({Token::Kind::string, std::move(text), start + 1});
        } else if (std::string_view("{}:,/=@").find(c) != std::string_view::npos) {
            tokens.push_back({Token::Kind::punct, std::string(1, c), i + 1});
            ++i;
        } else if (word_char(c)) {
            const std::size_t start = i;
            while (i < line.size() && word_char(line[i])) ++i;
            tokens.push_back({Token::Kind::word, std::string(line.substr(start, i - start)), start + 1});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line_no, i + 1);
        }
    }
    tokens.push_back({Token::Kind::end, "", line.size() + 1});
    return tokens;
}

bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    const auto first = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(first) || first == '_' || first >= 0x80)) return false;
    for (char c : s) {
        const auto u = static_cast<unsigned char>(c);
        if (!(std::isalnum(u) || u >= 0x80 || c == '_' || c == '-' || c == '\'')) return false;
    }
    return true;
}

class Parser {
public:
    KnowledgeBase run(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            const std::string_view line =
                text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            ++line_no;
            statement(line, line_no);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        validate(kb_);
        return std::move(kb_);
    }

private:
    KnowledgeBase kb_;
    std::set<std::string> ids_;
    std::vector<Token> tokens_;
    std::size_t cur_ = 0;
    std::size_t line_ = 0;

    [[noreturn]] void fail(const std::string& message, const Token& at) const {
        throw ParseError(message, line_, at.column);
    }
    [[noreturn]] void fail(const std::string& message) const { fail(message, peek()); }

    const Token& peek() const { return tokens_[cur_]; }
    const Token& next() {
        const Token& t = tokens_[cur_];
        if (t.kind != Token::Kind::end) ++cur_;
        return t;
    }
    bool at_word(std::string_view w) const { return peek().kind == Token::Kind::word && peek().text == w; }
    bool at_punct(char c) const { return peek().kind == Token::Kind::punct && peek().text[0] == c; }

    void expect_word(std::string_view w) {
        if (!at_word(w)) fail("expected '" + std::string(w) + "'" + found());
        next();
    }
    void expect_punct(char c) {
        if (!at_punct(c)) fail(std::string("expected '") + c + "'" + found());
        next();
    }
    std::string found() const {
        return peek().kind == Token::Kind::end ? " at end of line" : ", found '" + peek().text + "'";
    }

    std::string identifier(const char* what) {
        const Token& t = peek();
        if (t.kind != Token::Kind::word || !valid_identifier(t.text)) fail(std::string("expected ") + what + found());
        return next().text;
    }

    void statement(std::string_view line, std::size_t line_no) {
        line_ = line_no;
        tokens_ = tokenize(line, line_no);
        cur_ = 0;
        if (peek().kind == Token::Kind::end) return;
        if (at_word("universe")) {
            next();
            universe_decl();
        } else if (at_word("var")) {
            next();
            variable_decl();
        } else if (at_word("fact")) {
            next();
            fact_decl();
        } else if (at_word("default")) {
            next();
            default_decl();
        } else if (at_word("query")) {
            next();
            query_decl();
        } else if (at_word("option")) {
            next();
            option_decl();
        } else {
            fail("unknown statement '" + peek().text + "'");
        }
        if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "' after statement");
    }

    std::string label() {
        const Token& t = peek();
        if (t.kind == Token::Kind::string || t.kind == Token::Kind::word) return next().text;
        fail("expected an element label" + found());
    }

    void universe_decl() {
        const Token& name_tok = peek();
        std::string name = identifier("a universe name");
        if (kb_.find_universe(name)) fail("duplicate universe '" + name + "'", name_tok);
        expect_punct('=');
        expect_punct('{');
        std::vector<std::string> labels;
        std::set<std::string> seen;
        if (!at_punct('}')) {
            while (true) {
                const Token& t = peek();
                std::string l = label();
                if (!seen.insert(l).second) fail("duplicate element '" + l + "'", t);
                labels.push_back(std::move(l));
                if (!at_punct(',')) break;
                next();
            }
        }
        if (labels.empty()) fail("universe '" + name + "' needs at least one element");
        expect_punct('}');
        kb_.universes.push_back(make_universe(std::move(name), std::move(labels)));
    }

    std::pair<std::string, std::optional<int>> variable_name() {
        std::string base = identifier("a variable name");
        std::optional<int> time;
        if (at_punct('@')) {
            next();
            const Token& t = peek();
            int value = 0;
            const char* first = t.text.data();
            const char* last = first + t.text.size();
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (t.kind != Token::Kind::word || ec != std::errc() || ptr != last) {
                fail("time index must be an integer" + found(), t);
            }
            next();
            time = value;
        }
        return {std::move(base), time};
    }

    const Variable& variable_ref() {
        const Token& t = peek();
        auto [base, time] = variable_name();
        const std::string name = time ? base + "@" + std::to_string(*time) : base;
        const Variable* v = kb_.find_variable(name);
        if (!v) fail("unknown variable '" + name + "'", t);
        return *v;
    }

    void variable_decl() {
        const Token& t = peek();
        auto [base, time] = variable_name();
        expect_punct(':');
        const Token& ut = peek();
        const std::string uname = identifier("a universe name");
        const UniversePtr* u = kb_.find_universe(uname);
        if (!u) fail("unknown universe '" + uname + "'", ut);
        Variable v = make_variable(std::move(base), time, *u);
        if (kb_.find_variable(v.name())) fail("duplicate variable '" + v.name() + "'", t);
        kb_.variables.push_back(std::move(v));
    }

    Grade grade() {
        const Token& t = peek();
        if (t.kind != Token::Kind::word) fail("expected a grade" + found());
        double value = 0.0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) fail("invalid grade '" + t.text + "'", t);
        if (!(value >= 0.0 && value <= 1.0)) fail("grade " + t.text + " outside [0,1]", t);
        next();
        return value;
    }

    FuzzySet set_literal(const UniversePtr& universe) {
        bool negate = false;
        if (at_word("not")) {
            next();
            negate = true;
        }
        expect_punct('{');
        std::vector<Grade> grades(universe->size(), 0.0);
        std::vector<bool> seen(universe->size(), false);
        if (!at_punct('}')) {
            while (true) {
                const Token& t = peek();
                const std::string l = label();
                auto idx = universe->index_of(l);
                if (!idx) fail("'" + l + "' is not an element of universe '" + universe->name() + "'", t);
                if (seen[*idx]) fail("element '" + l + "' listed twice", t);
                seen[*idx] = true;
                Grade g = 1.0;
                if (at_punct('/')) {
                    next();
                    g = grade();
                }
                grades[*idx] = g;
                if (!at_punct(',')) break;
                next();
            }
        }
        expect_punct('}');
        FuzzySet set(universe, std::move(grades));
        return negate ? complement(set) : set;
    }

    Literal literal() {
        bool negate = false;
        if (at_word("not")) {
            next();
            negate = true;
        }
        const Variable& v = variable_ref();
        expect_word("is");
        FuzzySet set = set_literal(v.universe);
        return Literal{v.name(), negate ? complement(set) : set};
    }

    std::string fresh_id() {
        const Token& t = peek();
        std::string id = identifier("an identifier");
        if (!ids_.insert(id).second) fail("duplicate identifier '" + id + "'", t);
        return id;
    }

    void fact_decl() {
        std::string id = fresh_id();
        expect_punct(':');
        kb_.facts.push_back(Fact{std::move(id), literal()});
    }

    void default_decl() {
        const Token& id_tok = peek();
        std::string id = fresh_id();
        expect_punct(':');
        if (at_word("typically")) next();
        std::vector<Literal> antecedent;
        std::set<std::string> ante_vars;
        if (at_word("if")) {
            next();
            while (true) {
                const Token& t = peek();
                Literal lit = literal();
                if (!ante_vars.insert(lit.variable).second) {
                    fail("antecedent mentions '" + lit.variable + "' twice", t);
                }
                antecedent.push_back(std::move(lit));
                if (!at_word("and")) break;
                next();
            }
            expect_word("then");
        }
        const Token& ct = peek();
        Literal consequent = literal();
        if (ante_vars.count(consequent.variable)) {
            fail("consequent variable '" + consequent.variable + "' also appears in the antecedent", ct);
        }
        if (height(consequent.set) == 0.0) fail("consequent of '" + id + "' is the empty set", id_tok);
        kb_.defaults.push_back(DefaultRule{std::move(id), std::move(antecedent), std::move(consequent)});
    }

    void query_decl() {
        if (at_word("all")) {
            next();
            for (const auto& v : kb_.variables) kb_.queries.push_back(Query{v.name(), std::nullopt});
            return;
        }
        while (true) {
            const Variable& v = variable_ref();
            Query q{v.name(), std::nullopt};
            if (at_word("is")) {
                next();
                q.set = set_literal(v.universe);
            }
            kb_.queries.push_back(std::move(q));
            if (!at_punct(',')) break;
            next();
        }
    }

    std::size_t count_value(const Token& t) {
        std::size_t value = 0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (t.kind != Token::Kind::word || ec != std::errc() || ptr != last || value < 1) {
            fail("expected a positive integer" + found(), t);
        }
        next();
        return value;
    }

    void option_decl() {
        const Token& name_tok = peek();
        const std::string name = identifier("an option name");
        expect_punct('=');
        const Token& t = peek();
        auto& opts = kb_.options;
        if (name == "max_cells") {
            opts.max_cells = count_value(t);
        } else if (name == "max_disjuncts") {
            opts.max_disjuncts = count_value(t);
        } else if (name == "oracle_limit") {
            opts.oracle_limit = count_value(t);
        } else if (name == "threshold") {
            const Grade g = grade();
            if (!(g > 0.5)) fail("threshold must lie in (0.5, 1]", t);
            opts.threshold = g;
        } else if (name == "oracle_check") {
            if (at_word("true")) {
                opts.oracle_check = true;
            } else if (at_word("false")) {
                opts.oracle_check = false;
            } else {
                fail("expected true or false" + found());
            }
            next();
        } else {
            fail("unknown option '" + name + "'", name_tok);
        }
    }
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text) { return Parser().run(text); }

KnowledgeBase parse_kb_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_kb(buf.str());
}

}  // namespace possreason
