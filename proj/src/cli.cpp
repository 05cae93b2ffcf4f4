#include "possreason/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

#include "possreason/engine.hpp"
#include "possreason/errors.hpp"
#include "possreason/parser.hpp"

namespace possreason::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
    int code;
    std::string message;
};

KnowledgeBase load(const RunConfig& config) {
    try {
        KnowledgeBase kb = config.builtin ? builtin(config.input) : parse_kb_file(config.input);
        if (config.threshold) kb.options.threshold = *config.threshold;
        if (config.max_cells) kb.options.max_cells = *config.max_cells;
        if (config.oracle_check) kb.options.oracle_check = true;
        validate(kb);
        return kb;
    } catch (const IoError& e) {
        throw Failure{kParse, e.what()};
    } catch (const ParseError& e) {
        throw Failure{kParse, (config.builtin ? "builtin " : "") + config.input + ":" + e.what()};
    } catch (const ResourceError& e) {
        throw Failure{kResource, e.what()};
    } catch (const DomainError& e) {
        throw Failure{config.builtin ? kUsage : kParse, e.what()};
    }
}

struct Request {
    std::string variable;
    std::optional<FuzzySet> set;
};

std::vector<Request> requests(const RunConfig& config, const KnowledgeBase& kb) {
    std::vector<Request> out;
    auto all = [&] {
        for (const auto& v : kb.variables) out.push_back({v.name(), std::nullopt});
    };
    if (config.queries.empty()) {
        if (kb.queries.empty()) all();
        for (const auto& q : kb.queries) out.push_back({q.variable, q.set});
        return out;
    }
    for (const auto& name : config.queries) {
        if (name == "all") {
            all();
        } else if (!kb.find_variable(name)) {
            throw Failure{kUsage, "unknown query variable '" + name + "'"};
        } else {
            out.push_back({name, std::nullopt});
        }
    }
    return out;
}

std::string set_name(const FuzzySet& set) {
    if (!set.is_crisp()) return format_set(set);
    const auto labels = set.support();
    if (labels.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "|" : "") + labels[i];
    return out;
}

Json json_grade(Grade g) { return std::stod(format_grade(g)); }

Json grades_json(const FuzzySet& set) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < set.size(); ++i) obj[set.universe()->labels()[i]] = json_grade(set[i]);
    return obj;
}

void print_text(std::ostream& out, const Verdict& v) {
    const SetVerdict& primary = v.sets.front();
    const FuzzySet negated = complement(primary.set);
    out << v.variable << ": " << to_string(v.classification) << " (poss(" << set_name(primary.set)
        << ")=" << format_grade(primary.possibility) << ", cert(" << set_name(negated)
        << ")=" << format_grade(certainty(negated, v.projected)) << ")\n";
    out << "  projected: " << format_grades(v.projected) << "\n";
    for (const auto& s : v.sets) {
        out << "  " << set_name(s.set) << ": poss=" << format_grade(s.possibility)
            << " cert=" << format_grade(s.certainty) << " " << to_string(s.classification) << "\n";
    }
}

Json verdict_json(const Verdict& v) {
    Json sets = Json::array();
    for (const auto& s : v.sets) {
        sets.push_back({{"set", set_name(s.set)},
                        {"possibility", json_grade(s.possibility)},
                        {"certainty", json_grade(s.certainty)},
                        {"classification", to_string(s.classification)}});
    }
    return {{"variable", v.variable},
            {"classification", to_string(v.classification)},
            {"projected", grades_json(v.projected)},
            {"sets", sets}};
}

int execute(const RunConfig& config, std::ostream& out) {
    const KnowledgeBase kb = load(config);
    const auto reqs = requests(config, kb);

    KnowledgeState state = [&] {
        try {
            return infer(kb);
        } catch (const ScheduleError& e) {
            throw Failure{kSchedule, e.what()};
        } catch (const ResourceError& e) {
            throw Failure{kResource, e.what()};
        }
    }();

    std::vector<Verdict> verdicts;
    for (const auto& r : reqs) verdicts.push_back(query(state, kb, r.variable, r.set, kb.options.threshold));

    std::vector<OracleFinding> findings;
    if (kb.options.oracle_check) findings = oracle_check(state, kb);
    const bool mismatch = std::any_of(findings.begin(), findings.end(), [](const auto& f) { return !f.matched; });

    if (config.format == Format::machine) {
        Json doc;
        doc["input"] = (config.builtin ? "builtin:" : "") + config.input;
        doc["threshold"] = json_grade(kb.options.threshold);
        doc["kb_height"] = json_grade(height(state.h));
        doc["inconsistent"] = state.inconsistent;
        doc["schedule"] = state.schedule.layers;
        doc["warnings"] = state.schedule.warnings;
        Json qs = Json::array();
        for (const auto& v : verdicts) qs.push_back(verdict_json(v));
        doc["queries"] = qs;
        if (kb.options.oracle_check) {
            Json fs = Json::array();
            for (const auto& f : findings) {
                fs.push_back({{"layer", f.layer},
                              {"rule", f.rule},
                              {"variable", f.variable},
                              {"power_set", f.power_set_checked},
                              {"matched", f.matched},
                              {"detail", f.detail}});
            }
            doc["oracle_check"] = fs;
        }
        if (config.trace) {
            Json lines = Json::array();
            std::istringstream trace(format_trace(state, kb));
            for (std::string line; std::getline(trace, line);) lines.push_back(line);
            doc["trace"] = lines;
        }
        out << doc.dump(2) << "\n";
    } else {
        if (config.trace) out << format_trace(state, kb);
        for (const auto& v : verdicts) print_text(out, v);
        if (kb.options.oracle_check) {
            if (findings.empty()) out << "oracle-check: no single unconditional-default layers to check\n";
            for (const auto& f : findings) {
                out << "oracle-check: layer " << f.layer << " rule " << f.rule << " on " << f.variable << ": "
                    << (f.matched ? "ok" : "MISMATCH") << (f.power_set_checked ? " (power-set)" : " (formula)");
                if (!f.matched) out << " " << f.detail;
                out << "\n";
            }
        }
    }
    return mismatch ? kOracleMismatch : kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return execute(config, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

int print(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        out << to_dsl(load(config));
        return kOk;
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Possibilistic default reasoning over finite universes"};
    app.require_subcommand(1);

    RunConfig config;
    std::string builtin_name;
    std::string file;
    std::string queries;
    std::string format = "text";

    std::string builtins;
    for (const auto& n : builtin_names()) builtins += (builtins.empty() ? "" : ", ") + n;

    auto add_input = [&](CLI::App* cmd) {
        auto* b = cmd->add_option("--builtin", builtin_name, "Bundled knowledge base: " + builtins);
        auto* f = cmd->add_option("file", file, "Knowledge-base file");
        b->excludes(f);
        f->excludes(b);
    };

    CLI::App* run_cmd = app.add_subcommand("run", "Run inference and print verdicts");
    add_input(run_cmd);
    run_cmd->add_option("--query", queries, "Variables to query, comma separated, or 'all'");
    run_cmd->add_flag("--trace", config.trace, "Print the per-layer inference trace");
    run_cmd->add_flag("--oracle-check", config.oracle_check, "Cross-check default steps against the power-set oracle");
    run_cmd->add_option("--threshold", config.threshold, "Verdict threshold in (0.5, 1]")
        ->check([](const std::string& s) -> std::string {
            try {
                const double t = std::stod(s);
                return t > 0.5 && t <= 1.0 ? "" : "threshold must lie in (0.5, 1]";
            } catch (const std::exception&) {
                return "threshold must be a number";
            }
        });
    run_cmd->add_option("--max-cells", config.max_cells, "Joint-space cell limit")->check(CLI::PositiveNumber);
    run_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

    CLI::App* print_cmd = app.add_subcommand("print", "Print the knowledge base in canonical form");
    add_input(print_cmd);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (builtin_name.empty() == file.empty()) {
        err << "error: give exactly one of FILE or --builtin NAME\n";
        return kUsage;
    }
    config.builtin = !builtin_name.empty();
    config.input = config.builtin ? builtin_name : file;
    config.format = format == "machine" ? Format::machine : Format::text;
    std::stringstream list(queries);
    for (std::string item; std::getline(list, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) config.queries.push_back(item);
    }

    return print_cmd->parsed() ? print(config, out, err) : run(config, out, err);
}

}  // namespace possreason::cli
