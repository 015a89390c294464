#include <algorithm>
#include <numeric>

#include "mcube/decision.hpp"

namespace mcube {

FilteredModel filter_model(const Logic& logic, const Closure& c, const FilterOptions& options) {
    RowSet all = enumerate_rows(logic, c, options.row_cap);
    FilterResult kept = filter_rows(logic, all);
    FilteredModel out;
    out.initial_rows = all.size();
    out.rounds = kept.rounds;
    out.model.logic = &logic;
    out.model.closure = c;
    out.model.rows = all.select(kept.survivors);
    out.model.relation = options.with_relation ? build_relation(logic, out.model.rows)
                                               : Relation(out.model.rows.size());
    return out;
}

Verdict decide(const Logic& logic, std::span<const Formula> assumptions, const Formula& goal,
               const DecideOptions& options) {
    std::vector<Formula> roots(assumptions.begin(), assumptions.end());
    roots.push_back(goal);
    Closure c = closure(roots);
    FilteredModel filtered = filter_model(logic, c, {options.row_cap, options.with_relation});

    std::vector<std::size_t> premise_columns;
    for (const Formula& a : assumptions) premise_columns.push_back(*c.index_of(a));
    std::size_t goal_column = *c.index_of(goal);

    Verdict v;
    v.rounds = filtered.rounds;
    v.model = std::move(filtered.model);
    v.valid = true;
    for (std::size_t i = 0; i < v.model.rows.size(); ++i) {
        auto row = v.model.rows[i];
        bool premises = std::all_of(premise_columns.begin(), premise_columns.end(),
                                    [&](std::size_t col) { return is_designated(row[col]); });
        if (premises && !is_designated(row[goal_column])) {
            v.valid = false;
            v.witness = i;
            break;
        }
    }
    return v;
}

Verdict decide(const Logic& logic, const Formula& goal, const DecideOptions& options) {
    return decide(logic, std::span<const Formula>(), goal, options);
}

LevelTrace level_filter_demo(const Logic& logic, const Closure& c, std::size_t levels,
                             std::size_t row_cap) {
    LevelTrace trace;
    trace.closure = c;
    trace.rows = enumerate_rows(logic, c, row_cap);
    std::vector<std::size_t> current(trace.rows.size());
    std::iota(current.begin(), current.end(), 0);
    trace.levels.push_back(current);
    const ValueSet necessary_truth{Value::T, Value::tt};
    for (std::size_t k = 0; k < levels; ++k) {
        std::vector<std::size_t> tautologies;
        for (std::size_t col = 0; col < c.size(); ++col) {
            bool everywhere = std::all_of(current.begin(), current.end(), [&](std::size_t r) {
                return is_designated(trace.rows[r][col]);
            });
            if (everywhere) tautologies.push_back(col);
        }
        std::vector<std::size_t> next;
        for (std::size_t r : current) {
            bool keep = std::all_of(tautologies.begin(), tautologies.end(), [&](std::size_t col) {
                return necessary_truth.contains(trace.rows[r][col]);
            });
            if (keep) next.push_back(r);
        }
        current = std::move(next);
        trace.levels.push_back(current);
    }
    return trace;
}

}  // namespace mcube
