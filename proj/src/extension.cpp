#include <algorithm>

#include "mcube/decision.hpp"
#include "mcube/errors.hpp"

namespace mcube {

namespace {

bool row_is_stable(std::span<const Value> row) {
    return !row.empty() && std::all_of(row.begin(), row.end(), is_stable);
}

ValueSet cell_options(const Nmatrix& m, const Closure& c, const Formula& f,
                      std::span<const Value> row) {
    ValueSet domain = row_is_stable(row) ? stable_values : m.logic().values - stable_values;
    switch (f.kind()) {
        case Connective::atom: return domain;
        case Connective::falsum: return m.bot() & domain;
        case Connective::implies:
            return m.imp_cell(row[*c.index_of(f.lhs())], row[*c.index_of(f.rhs())]) & domain;
        case Connective::box: return m.box_cell(row[*c.index_of(f.operand())]) & domain;
    }
    return {};
}

// Picks the option whose necessity and possibility flags agree with what the
// successors say about the new formula; ties go to the lowest value.
Value choose(ValueSet options, bool all_successors, bool some_successor) {
    Value best = options.first();
    int best_score = -1;
    for (Value v : options) {
        int score = 2 * (necessary_values.contains(v) == all_successors) +
                    (possible_values.contains(v) == some_successor);
        if (score > best_score) {
            best = v;
            best_score = score;
        }
    }
    return best;
}

}  // namespace

TableModel extend_column(const TableModel& m, const Formula& f) {
    const Logic& logic = *m.logic;
    const Nmatrix& nm = nmatrix(logic);
    if (m.closure.contains(f))
        throw Error("formula " + print(f) + " is already in the closure");
    auto require = [&](const Formula& sub) {
        if (!m.closure.contains(sub))
            throw MissingSubformula("immediate subformula " + print(sub) + " of " + print(f) +
                                    " is not in the closure");
    };
    if (f.is_implies()) {
        require(f.lhs());
        require(f.rhs());
    } else if (f.is_box()) {
        require(f.operand());
    }

    TableModel out;
    out.logic = m.logic;
    out.closure = m.closure.with(f);
    out.rows = RowSet(out.closure.size());

    if (m.closure.empty()) {
        ValueSet values = f.is_atom() ? logic.values : nm.bot();
        for (Value v : values) out.rows.push_back({v});
        out.relation = build_relation(logic, out.rows);
        return out;
    }

    const std::size_t n = m.rows.size();
    std::vector<ValueSet> options(n);
    for (std::size_t i = 0; i < n; ++i) options[i] = cell_options(nm, m.closure, f, m.rows[i]);

    std::vector<Value> chosen(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = m.rows[i];
        if (f.is_atom()) {
            chosen[i] = row[0];
            continue;
        }
        if (options[i].size() == 1) {
            chosen[i] = options[i].first();
            continue;
        }
        bool all = true;
        bool some = false;
        for (std::uint32_t j : m.relation.successors(i)) {
            bool holds = is_designated(options[j].first());
            all = all && holds;
            some = some || holds;
        }
        chosen[i] = choose(options[i], all, some);
    }

    std::vector<Value> buffer(out.closure.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto row = m.rows[i];
        std::copy(row.begin(), row.end(), buffer.begin());
        buffer.back() = chosen[i];
        out.rows.push_back(buffer);
    }
    out.relation = Relation(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t j : m.relation.successors(i))
            if (allowed_successors(logic, chosen[i]).contains(chosen[j])) out.relation.add(i, j);
    return out;
}

}  // namespace mcube
