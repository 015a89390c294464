#include "mcube/io.hpp"

#include <sstream>

namespace mcube {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(ValueSet s) {
    std::string out;
    for (Value v : s) {
        if (!out.empty()) out += ' ';
        out += name(v);
    }
    return out;
}

nlohmann::json closure_json(const Closure& c) {
    nlohmann::json out = nlohmann::json::array();
    for (const Formula& f : c.formulas()) out.push_back(print(f));
    return out;
}

nlohmann::json rows_json(const RowSet& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Value v : rows[i]) row.push_back(std::string(name(v)));
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json pairs_json(const Relation& r) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [a, b] : r.pairs()) out.push_back({a, b});
    return out;
}

}  // namespace

nlohmann::json value_set_json(ValueSet s) {
    nlohmann::json out = nlohmann::json::array();
    for (Value v : s) out.push_back(std::string(name(v)));
    return out;
}

nlohmann::json table_json(const TableModel& m) {
    return {{"logic", m.logic ? m.logic->name : ""},
            {"closure", closure_json(m.closure)},
            {"rows", rows_json(m.rows)},
            {"relation", pairs_json(m.relation)}};
}

std::string table_csv(const Closure& c, const RowSet& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << csv_field(print(c[i]));
    out << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto row = rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << name(row[i]);
        out << '\n';
    }
    return out.str();
}

nlohmann::json level_trace_json(const LevelTrace& t) {
    return {{"closure", closure_json(t.closure)},
            {"rows", rows_json(t.rows)},
            {"levels", t.levels}};
}

std::string level_trace_csv(const LevelTrace& t) {
    std::vector<std::size_t> depth(t.rows.size(), 0);
    for (std::size_t k = 0; k < t.levels.size(); ++k)
        for (std::size_t r : t.levels[k]) depth[r] = k;
    std::ostringstream out;
    out << "level";
    for (const Formula& f : t.closure.formulas()) out << ',' << csv_field(print(f));
    out << '\n';
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << depth[r];
        for (Value v : t.rows[r]) out << ',' << name(v);
        out << '\n';
    }
    return out.str();
}

nlohmann::json nmatrix_json(const Nmatrix& m) {
    const Logic& l = m.logic();
    nlohmann::json imp = nlohmann::json::object();
    nlohmann::json box = nlohmann::json::object();
    for (Value a : l.values) {
        nlohmann::json row = nlohmann::json::object();
        for (Value b : l.values) row[std::string(name(b))] = value_set_json(m.imp(a, b));
        imp[std::string(name(a))] = row;
        box[std::string(name(a))] = value_set_json(m.box(a));
    }
    return {{"logic", l.name},
            {"values", value_set_json(l.values)},
            {"bot", value_set_json(m.bot())},
            {"implication", imp},
            {"box", box}};
}

std::string nmatrix_csv(const Nmatrix& m) {
    const Logic& l = m.logic();
    std::ostringstream out;
    out << "bot," << cell_text(m.bot()) << "\n\n->";
    for (Value b : l.values) out << ',' << name(b);
    out << '\n';
    for (Value a : l.values) {
        out << name(a);
        for (Value b : l.values) out << ',' << cell_text(m.imp(a, b));
        out << '\n';
    }
    out << "\n[],value\n";
    for (Value a : l.values) out << name(a) << ',' << cell_text(m.box(a)) << '\n';
    return out.str();
}

nlohmann::json kripke_json(const KripkeModel& k) {
    nlohmann::json valuation = nlohmann::json::object();
    for (const auto& [atom, truth] : k.valuation) valuation[atom] = truth;
    return {{"worlds", k.world_count}, {"relation", pairs_json(k.relation)}, {"valuation", valuation}};
}

std::string kripke_dot(const KripkeModel& k, std::optional<std::size_t> highlight) {
    std::ostringstream out;
    out << "digraph kripke {\n";
    for (std::size_t w = 0; w < k.world_count; ++w) {
        std::string label = "w" + std::to_string(w) + ":";
        for (const auto& [atom, truth] : k.valuation)
            if (truth[w]) label += " " + atom;
        out << "  w" << w << " [label=\"" << label << "\"";
        if (highlight && *highlight == w) out << ", peripheries=2";
        out << "];\n";
    }
    for (const auto& [a, b] : k.relation.pairs()) out << "  w" << a << " -> w" << b << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json axioms_json(const Logic& l) {
    nlohmann::json out = nlohmann::json::array();
    for (const Axiom& a : axioms(l))
        out.push_back({{"label", a.label}, {"schema", print(a.schema, true)}});
    return out;
}

}  // namespace mcube
