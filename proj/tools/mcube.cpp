#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "mcube/decision.hpp"
#include "mcube/errors.hpp"
#include "mcube/io.hpp"
#include "mcube/kripke.hpp"
#include "mcube/logics.hpp"
#include "mcube/xcheck.hpp"

namespace {

using namespace mcube;

struct RunConfig {
    std::string logic = "K";
    std::vector<std::string> formulas;
    std::vector<std::string> assumptions;
    std::string format;
    std::size_t max_worlds = 3;
    std::size_t row_cap = default_row_cap;
    std::uint64_t seed = 42;
    std::size_t count = 200;
    std::size_t max_depth = 2;
    std::size_t atoms = 2;
    int level = -1;
    bool nmatrix_dump = false;
};

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
    std::vector<Formula> out;
    for (const std::string& t : texts) out.push_back(parse(t));
    return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw Error("format '" + format + "' not supported here; use one of: " + list);
}

int run_decide(const RunConfig& cfg) {
    const Logic& logic = lookup(cfg.logic);
    std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json"});
    std::vector<Formula> premises = parse_all(cfg.assumptions);
    Formula goal = parse(cfg.formulas.at(0));
    Verdict v = decide(logic, premises, goal, {cfg.row_cap, false});
    if (format == "json") {
        nlohmann::json out = {{"logic", logic.name},
                              {"goal", print(goal, true)},
                              {"verdict", v.valid ? "VALID" : "INVALID"},
                              {"rows", v.model.rows.size()}};
        if (v.witness) {
            nlohmann::json row = nlohmann::json::object();
            for (std::size_t c = 0; c < v.model.closure.size(); ++c)
                row[print(v.model.closure[c])] = std::string(name(v.model.rows[*v.witness][c]));
            out["witness"] = row;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (v.valid ? "VALID" : "INVALID") << '\n';
        if (v.witness) {
            std::cout << "witness row " << *v.witness << ":\n";
            for (std::size_t c = 0; c < v.model.closure.size(); ++c)
                std::cout << "  " << print(v.model.closure[c], true) << " = "
                          << name(v.model.rows[*v.witness][c]) << '\n';
        }
    }
    return v.valid ? 0 : 1;
}

int run_table(const RunConfig& cfg) {
    const Logic& logic = lookup(cfg.logic);
    std::string format = cfg.format.empty() ? "csv" : cfg.format;
    require_format(format, {"csv", "json"});
    if (cfg.nmatrix_dump) {
        const Nmatrix& m = nmatrix(logic);
        std::cout << (format == "json" ? nmatrix_json(m).dump(2) + "\n" : nmatrix_csv(m));
        return 0;
    }
    if (cfg.formulas.empty()) throw Error("table needs at least one formula (or --nmatrix)");
    std::vector<Formula> roots = parse_all(cfg.formulas);
    Closure c = closure(roots);
    if (cfg.level >= 0) {
        LevelTrace t = level_filter_demo(logic, c, static_cast<std::size_t>(cfg.level), cfg.row_cap);
        std::cout << (format == "json" ? level_trace_json(t).dump(2) + "\n" : level_trace_csv(t));
        return 0;
    }
    FilteredModel fm = filter_model(logic, c, {cfg.row_cap, format == "json"});
    if (format == "json")
        std::cout << table_json(fm.model).dump(2) << '\n';
    else
        std::cout << table_csv(fm.model.closure, fm.model.rows);
    return 0;
}

int run_model(const RunConfig& cfg) {
    const Logic& logic = lookup(cfg.logic);
    std::string format = cfg.format.empty() ? "json" : cfg.format;
    require_format(format, {"dot", "json"});
    Formula goal = parse(cfg.formulas.at(0));
    std::vector<Formula> premises = parse_all(cfg.assumptions);
    Verdict v = decide(logic, premises, goal, {cfg.row_cap, true});
    KripkeModel k = to_kripke(v.model);
    std::string label = "model";
    if (v.witness) {
        std::vector<bool> goal_truth = truth_set(k, goal);
        bool premises_hold = true;
        for (const Formula& p : premises) premises_hold = premises_hold && forces(k, *v.witness, p);
        label = premises_hold && !goal_truth[*v.witness] ? "kripke-verified" : "table witness";
    }
    if (format == "json") {
        nlohmann::json out = kripke_json(k);
        out["verdict"] = v.valid ? "VALID" : "INVALID";
        out["label"] = label;
        if (v.witness) out["witness"] = *v.witness;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "// " << (v.valid ? "VALID" : "INVALID") << ", " << label << '\n';
        std::cout << kripke_dot(k, v.witness);
    }
    return v.valid ? 0 : 1;
}

int run_oracle(const RunConfig& cfg) {
    const Logic& logic = lookup(cfg.logic);
    std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json", "dot"});
    Formula goal = parse(cfg.formulas.at(0));
    std::vector<Formula> premises = parse_all(cfg.assumptions);
    OracleVerdict o = oracle_decide(logic, premises, goal, cfg.max_worlds);
    if (format == "json") {
        nlohmann::json out = {{"verdict", o.countermodel_found ? "COUNTERMODEL" : "NO_COUNTERMODEL_UPTO"},
                              {"bound", o.bound}};
        if (o.model) {
            out["model"] = kripke_json(*o.model);
            out["world"] = o.world;
        }
        std::cout << out.dump(2) << '\n';
    } else if (format == "dot" && o.model) {
        std::cout << kripke_dot(*o.model, o.world);
    } else if (o.countermodel_found) {
        std::cout << "COUNTERMODEL at world " << o.world << '\n' << kripke_json(*o.model).dump() << '\n';
    } else {
        std::cout << "NO_COUNTERMODEL_UPTO " << o.bound << '\n';
    }
    return o.countermodel_found ? 1 : 0;
}

int run_xcheck(const RunConfig& cfg) {
    const Logic& logic = lookup(cfg.logic);
    XcheckConfig x{cfg.count, cfg.max_depth, cfg.atoms, cfg.seed, cfg.max_worlds};
    XcheckReport r = xcheck(logic, x);
    for (const Formula& f : r.disagreements)
        std::cout << "disagreement: " << print(f, true) << '\n';
    std::cout << "agree=" << r.agree() << " refuted=" << r.refuted << " unresolved=" << r.unresolved
              << '\n';
    std::cout << "disagree=" << r.disagreements.size()
              << " invalid_unconfirmed=" << r.invalid_unconfirmed << '\n';
    return r.disagreements.empty() ? 0 : 1;
}

int run_axioms(const RunConfig& cfg) {
    const Logic& logic = lookup(cfg.logic);
    std::string format = cfg.format.empty() ? "json" : cfg.format;
    require_format(format, {"json", "text"});
    if (format == "json") {
        std::cout << axioms_json(logic).dump(2) << '\n';
    } else {
        for (const Axiom& a : axioms(logic)) std::cout << a.label << ": " << print(a.schema, true) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedure for the logics of the modal cube"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_logic = [&](CLI::App* sub) {
        sub->add_option("--logic,-l", cfg.logic, "Logic name or alias")->required();
    };
    auto add_format = [&](CLI::App* sub, const std::string& help) {
        sub->add_option("--format,-f", cfg.format, help);
    };

    auto* decide_cmd = app.add_subcommand("decide", "Decide a consequence");
    add_logic(decide_cmd);
    decide_cmd->add_option("--assume,-a", cfg.assumptions, "Assumption formula (repeatable)");
    decide_cmd->add_option("goal", cfg.formulas, "Goal formula")->required()->expected(1);
    decide_cmd->add_option("--row-cap", cfg.row_cap, "Row cap");
    add_format(decide_cmd, "text|json");

    auto* table_cmd = app.add_subcommand("table", "Dump a filtered table or level trace");
    add_logic(table_cmd);
    table_cmd->add_option("formulas", cfg.formulas, "Formulas whose closure is tabulated");
    table_cmd->add_option("--level", cfg.level, "Run the level filter for n levels");
    table_cmd->add_flag("--nmatrix", cfg.nmatrix_dump, "Dump the logic's truth tables");
    table_cmd->add_option("--row-cap", cfg.row_cap, "Row cap");
    add_format(table_cmd, "csv|json");

    auto* model_cmd = app.add_subcommand("model", "Extract a Kripke model");
    add_logic(model_cmd);
    model_cmd->add_option("--assume,-a", cfg.assumptions, "Assumption formula (repeatable)");
    model_cmd->add_option("formula", cfg.formulas, "Formula")->required()->expected(1);
    model_cmd->add_option("--row-cap", cfg.row_cap, "Row cap");
    add_format(model_cmd, "dot|json");

    auto* oracle_cmd = app.add_subcommand("oracle", "Bounded Kripke countermodel search");
    add_logic(oracle_cmd);
    oracle_cmd->add_option("--assume,-a", cfg.assumptions, "Assumption formula (repeatable)");
    oracle_cmd->add_option("goal", cfg.formulas, "Goal formula")->required()->expected(1);
    oracle_cmd->add_option("--max-worlds,-k", cfg.max_worlds, "World bound");
    add_format(oracle_cmd, "text|json|dot");

    auto* xcheck_cmd = app.add_subcommand("xcheck", "Random differential test against the oracle");
    add_logic(xcheck_cmd);
    xcheck_cmd->add_option("--count,-n", cfg.count, "Number of formulas");
    xcheck_cmd->add_option("--max-depth,-d", cfg.max_depth, "Maximum formula depth");
    xcheck_cmd->add_option("--atoms", cfg.atoms, "Number of atoms");
    xcheck_cmd->add_option("--seed,-s", cfg.seed, "Random seed");
    xcheck_cmd->add_option("--max-worlds,-k", cfg.max_worlds, "Oracle world bound");

    auto* axioms_cmd = app.add_subcommand("axioms", "List the defining axiom schemata");
    add_logic(axioms_cmd);
    add_format(axioms_cmd, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*decide_cmd) return run_decide(cfg);
        if (*table_cmd) return run_table(cfg);
        if (*model_cmd) return run_model(cfg);
        if (*oracle_cmd) return run_oracle(cfg);
        if (*xcheck_cmd) return run_xcheck(cfg);
        if (*axioms_cmd) return run_axioms(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
