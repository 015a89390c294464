#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcube/decision.hpp"
#include "mcube/errors.hpp"
#include "mcube/kripke.hpp"
#include "mcube/nmatrix.hpp"
#include "mcube/random_formula.hpp"
#include "mcube/xcheck.hpp"

using namespace mcube;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    // Set when every failure belongs to the documented unattainable set.
    bool known = false;
};

std::ostringstream failures;

void note(Outcome& o, const std::string& what) {
    if (o.pass) failures.str("");
    o.pass = false;
    failures << "  " << what << "\n";
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::map<std::string, Formula>& binding() {
    static const std::map<std::string, Formula> b{{"A", parse("p")}, {"B", parse("q")}};
    return b;
}

// Plain pairwise frame checks, independent of the library's predicates.
bool frame_ok(const Relation& r, FrameProps props, std::string& why) {
    std::size_t n = r.node_count();
    for (std::size_t i = 0; i < n; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) any = any || r.contains(i, j);
        if (props.has(FrameProperty::serial) && !any) return why = "serial", false;
        if (props.has(FrameProperty::reflexive) && !r.contains(i, i)) return why = "reflexive", false;
        for (std::size_t j = 0; j < n; ++j) {
            if (!r.contains(i, j)) continue;
            if (props.has(FrameProperty::symmetric) && !r.contains(j, i)) return why = "symmetric", false;
            for (std::size_t k = 0; k < n; ++k) {
                if (props.has(FrameProperty::transitive) && r.contains(j, k) && !r.contains(i, k))
                    return why = "transitive", false;
                if (props.has(FrameProperty::euclidean) && r.contains(i, k) && !r.contains(j, k))
                    return why = "euclidean", false;
            }
        }
    }
    return true;
}

// Picks a formula outside the closure whose immediate subformulas are inside.
Formula next_formula(const Closure& c, std::mt19937_64& rng) {
    for (;;) {
        const Formula& a = c[rng() % c.size()];
        const Formula& b = c[rng() % c.size()];
        Formula f = rng() % 2 ? Formula::box(a) : Formula::implies(a, b);
        if (!c.contains(f)) return f;
    }
}

Outcome axiom_validity() {
    Outcome o;
    double slowest = 0;
    std::size_t count = 0;
    auto start = Clock::now();
    for (const Logic& l : all_logics()) {
        std::set<std::string> seen;
        std::vector<Axiom> all = axioms(l);
        for (const Axiom& ax : frame_axioms(l)) all.push_back(ax);
        for (const Axiom& ax : all) {
            if (!seen.insert(ax.label).second) continue;
            Formula inst = instantiate(ax.schema, binding());
            auto t0 = Clock::now();
            bool valid = decide(l, inst).valid;
            double dt = seconds_since(t0);
            slowest = std::max(slowest, dt);
            ++count;
            if (!valid) note(o, l.name + " axiom " + ax.label + " not VALID");
            if (dt > 5) note(o, l.name + " axiom " + ax.label + " took over 5 s");
        }
    }
    double total = seconds_since(start);
    if (total > 120) note(o, "total over 2 min");
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu instances, slowest %.3fs", count, slowest);
    o.detail = buf;
    return o;
}

Outcome separation() {
    Outcome o;
    const std::vector<std::pair<FrameProperty, char>> table = {
        {FrameProperty::serial, 'd'},     {FrameProperty::reflexive, 't'},
        {FrameProperty::symmetric, 'b'},  {FrameProperty::transitive, '4'},
        {FrameProperty::euclidean, '5'},
    };
    std::size_t count = 0;
    auto start = Clock::now();
    for (const Logic& l : all_logics()) {
        for (const auto& [prop, label] : table) {
            if (l.has(prop)) continue;
            Formula inst = instantiate(axiom_schema(label), binding());
            std::string tag = l.name + " axiom " + label;
            ++count;
            if (decide(l, inst).valid) {
                note(o, tag + " decided VALID");
                continue;
            }
            OracleVerdict ov = oracle_decide(l, {}, inst, 3);
            if (!ov.countermodel_found || !ov.model) {
                note(o, tag + " has no countermodel within 3 worlds");
                continue;
            }
            std::string why;
            if (!frame_ok(ov.model->relation, l.frame, why)) note(o, tag + " countermodel not " + why);
            if (forces(*ov.model, ov.world, inst)) note(o, tag + " countermodel forces the axiom");
        }
    }
    if (seconds_since(start) > 300) note(o, "total over 5 min");
    o.detail = std::to_string(count) + " logic/axiom pairs";
    return o;
}

bool row_matches(std::span<const Value> row, const std::vector<ValueSet>& pattern) {
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (!pattern[i].contains(row[i])) return false;
    return true;
}

Outcome level_demo() {
    using V = Value;
    Outcome o;
    const Logic& kt = lookup("KT");
    Formula goal = parse("[][](p -> p)");
    Closure c = closure({goal});
    LevelTrace t = level_filter_demo(kt, c, 2);
    if (t.levels.size() != 3) {
        note(o, "level trace does not have levels 0..2");
        return o;
    }
    std::vector<int> last(t.rows.size(), -1);
    for (std::size_t k = 0; k < t.levels.size(); ++k)
        for (std::size_t r : t.levels[k]) last[r] = static_cast<int>(k);

    // Lines of the printed table, columns p, p->p, [](p->p), [][](p->p), with the
    // last level at which each line is still present.
    struct Line {
        const char* name;
        std::vector<ValueSet> pattern;
        int last_level;
    };
    const std::vector<Line> lines = {
        {"line 1", {{V::F}, {V::T}, {V::T}, {V::T, V::t}}, 2},
        {"line 2", {{V::F}, {V::T}, {V::t}, {V::F, V::f}}, 1},
        {"line 3", {{V::f}, {V::t}, {V::F, V::f}, {V::F, V::f}}, 0},
    };
    for (const Line& line : lines) {
        std::size_t hits = 0;
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            if (!row_matches(t.rows[r], line.pattern)) continue;
            ++hits;
            if (last[r] != line.last_level)
                note(o, std::string(line.name) + " row last present at level " + std::to_string(last[r]));
        }
        if (hits == 0) note(o, std::string(line.name) + " has no rows");
    }
    // Exact elimination sets: a level drops precisely the rows whose next box is undesignated.
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        int expected = !is_designated(t.rows[r][2]) ? 0 : !is_designated(t.rows[r][3]) ? 1 : 2;
        if (last[r] != expected) note(o, "row " + std::to_string(r) + " eliminated at the wrong level");
    }

    FilteredModel fm = filter_model(kt, c);
    if (fm.rounds > 3) note(o, "filter took " + std::to_string(fm.rounds) + " rounds");
    for (std::size_t r = 0; r < fm.model.rows.size(); ++r)
        for (std::size_t i = 1; i < fm.model.rows.width(); ++i)
            if (fm.model.rows[r][i] != V::T) note(o, "surviving row with a non-T compound value");
    if (fm.model.rows.size() == 0) note(o, "no surviving rows");
    o.detail = std::to_string(t.rows.size()) + " rows, levels " + std::to_string(t.levels[0].size()) + "/" +
               std::to_string(t.levels[1].size()) + "/" + std::to_string(t.levels[2].size()) + ", filter rounds " +
               std::to_string(fm.rounds);
    return o;
}

ValueSet from_json(const nlohmann::json& j) {
    ValueSet s;
    for (const auto& n : j) s.insert(*value_from_name(n.get<std::string>()));
    return s;
}

Outcome golden_tables() {
    Outcome o;
    std::ifstream in(std::string(MCUBE_TEST_DATA) + "/nmatrix_tables.json");
    if (!in.good()) {
        note(o, "cannot open nmatrix_tables.json");
        return o;
    }
    nlohmann::json golden = nlohmann::json::parse(in);
    std::size_t cells = 0;
    if (from_json(golden["bot"]) != raw_bot) note(o, "bot table differs");
    for (Value a : all_values)
        for (Value b : all_values) {
            ++cells;
            if (raw_implication(a, b) != from_json(golden["implication"][std::string(name(a))][std::string(name(b))]))
                note(o, "implication " + std::string(name(a)) + "->" + std::string(name(b)) + " differs");
        }
    for (const Logic& l : all_logics())
        for (Value a : all_values) {
            const auto& column = golden["box"][l.name];
            std::string key(name(a));
            ValueSet expected = column.contains(key) ? from_json(column[key]) : ValueSet{};
            ++cells;
            if (raw_box(l, a) != expected) note(o, l.name + " box " + key + " differs");
        }
    bool golden_ok = o.pass;

    // Nonemptiness of every restricted output.
    std::vector<std::string> empty;
    for (const Logic& l : all_logics()) {
        const Nmatrix& m = nmatrix(l);
        if (m.bot().empty()) empty.push_back(l.name + " bot");
        for (Value a : l.values) {
            if (m.box(a).empty()) empty.push_back(l.name + " []" + std::string(name(a)));
            for (Value b : l.values)
                if (m.imp(a, b).empty())
                    empty.push_back(l.name + " " + std::string(name(a)) + "->" + std::string(name(b)));
        }
    }
    for (const std::string& e : empty) note(o, "empty restricted output " + e);
    const std::vector<std::string> documented = {"KB5 ff->F", "KB5 tt->t", "KB5 t->ff"};
    o.known = golden_ok && !empty.empty() && empty == documented;
    o.detail = std::to_string(cells) + " golden cells " + (golden_ok ? "match" : "differ") + ", " +
               std::to_string(empty.size()) + " empty restricted outputs";
    return o;
}

Outcome dead_ends() {
    Outcome o;
    Formula dia = parse("<>(p -> p)");
    bool k = decide(lookup("K"), dia).valid;
    bool kd = decide(lookup("KD"), dia).valid;
    bool d = decide(lookup("KD"), parse("[]p -> <>p")).valid;
    if (k) note(o, "K <>(p->p) VALID");
    if (!kd) note(o, "KD <>(p->p) INVALID");
    if (!d) note(o, "KD []p -> <>p INVALID");
    o.detail = std::string("K ") + (k ? "VALID" : "INVALID") + ", KD " + (kd ? "VALID" : "INVALID") +
               ", KD axiom d " + (d ? "VALID" : "INVALID");
    return o;
}

Outcome consistency() {
    Outcome o;
    Formula p = Formula::atom("p");
    std::size_t count = 0;
    auto start = Clock::now();
    for (const char* name : {"K", "KD", "KT", "S4", "S5", "KB5"}) {
        const Logic& l = lookup(name);
        std::vector<Value> vs = l.values.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                Formula f = neg(conj(characterization(vs[i], p), characterization(vs[j], p)));
                ++count;
                if (!decide(l, f).valid)
                    note(o, l.name + " " + std::string(mcube::name(vs[i])) + "/" +
                                std::string(mcube::name(vs[j])) + " not VALID");
            }
    }
    double total = seconds_since(start);
    if (total > 600) note(o, "total over 10 min");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu pairs in %.1fs", count, total);
    o.detail = buf;
    return o;
}

Outcome fuzzing() {
    Outcome o;
    XcheckConfig cfg;
    cfg.count = 200;
    cfg.max_depth = 2;
    cfg.atoms = 2;
    cfg.seed = 42;
    cfg.max_worlds = 3;
    std::size_t refuted = 0, unresolved = 0, unconfirmed = 0;
    auto start = Clock::now();
    for (const Logic& l : all_logics()) {
        XcheckReport r = xcheck(l, cfg);
        refuted += r.refuted;
        unresolved += r.unresolved;
        unconfirmed += r.invalid_unconfirmed;
        if (r.total != cfg.count) note(o, l.name + " ran " + std::to_string(r.total) + " formulas");
        for (const Formula& f : r.disagreements) note(o, l.name + " disagreement on " + print(f, true));
    }
    double total = seconds_since(start);
    if (total > 900) note(o, "total over 15 min");
    char buf[160];
    std::snprintf(buf, sizeof buf, "refuted=%zu unresolved=%zu invalid_unconfirmed=%zu in %.1fs", refuted,
                  unresolved, unconfirmed, total);
    o.detail = buf;
    return o;
}

Outcome analyticity() {
    Outcome o;
    std::size_t count = 0;
    for (const Logic& l : all_logics()) {
        FormulaGenerator gen(1000 + l.id, 2);
        std::mt19937_64 rng(2000 + l.id);
        for (int i = 0; i < 50; ++i) {
            Formula seed = gen.next(2);
            std::string tag = l.name + " " + print(seed, true);
            ++count;
            try {
                FilteredModel fm = filter_model(l, closure({seed}));
                fm.model.relation = to_kripke(fm.model).relation;
                Formula f = next_formula(fm.model.closure, rng);
                TableModel ext = extend_column(fm.model, f);
                if (ext.rows.size() != fm.model.rows.size()) note(o, tag + " extension changed the row count");
                if (!(ext.relation == fm.model.relation)) note(o, tag + " extension changed the relation");
                if (filter_rows(l, ext.rows).rounds != 0) note(o, tag + " extended model loses rows");

                const RowSet& rows = fm.model.rows;
                RowSet cut(rows.width() - 1);
                for (std::size_t r = 0; r < rows.size(); ++r) cut.push_back(rows[r].first(rows.width() - 1));
                if (filter_rows(l, cut).rounds != 0) note(o, tag + " dropping the last column loses rows");
            } catch (const Error& e) {
                note(o, tag + " threw " + e.what());
            }
        }
    }
    o.detail = std::to_string(count) + " closures";
    return o;
}

Outcome frames() {
    Outcome o;
    std::size_t count = 0, worlds = 0;
    for (const Logic& l : all_logics()) {
        FormulaGenerator gen(3000 + l.id, 2);
        for (int i = 0; i < 50; ++i) {
            Formula seed = gen.next(2);
            std::string tag = l.name + " " + print(seed, true);
            ++count;
            try {
                FilteredModel fm = filter_model(l, closure({seed}));
                KripkeModel k = to_kripke(fm.model);
                worlds += k.world_count;
                std::string why;
                if (!frame_ok(k.relation, l.frame, why)) note(o, tag + " relation not " + why);
                if (l.has(FrameProperty::serial))
                    for (std::size_t w = 0; w < k.world_count; ++w)
                        if (k.relation.successors(w).empty()) note(o, tag + " dead end in a serial logic");
            } catch (const Error& e) {
                note(o, tag + " threw " + e.what());
            }
        }
    }
    o.detail = std::to_string(count) + " models, " + std::to_string(worlds) + " worlds";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"axiom validity", axiom_validity},
        {"separation", separation},
        {"level demo", level_demo},
        {"table golden and nonemptiness", golden_tables},
        {"dead-end discrimination", dead_ends},
        {"consistency on values", consistency},
        {"differential fuzzing", fuzzing},
        {"analyticity", analyticity},
        {"frame properties", frames},
    };
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = Clock::now();
        failures.str("");
        Outcome o = criteria[i].second();
        std::string details = failures.str();
        std::printf("criterion %zu %-30s %s  %s (%.1fs)%s\n", i + 1, criteria[i].first,
                    o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds_since(start),
                    !o.pass && o.known ? " [known unattainable, see README]" : "");
        if (!o.pass) std::fputs(details.c_str(), stdout);
        if (!o.pass && !o.known) ++unexpected;
        std::fflush(stdout);
    }
    return unexpected == 0 ? 0 : 1;
}
