#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mcube/decision.hpp"
#include "mcube/kripke.hpp"
#include "mcube/logics.hpp"
#include "mcube/nmatrix.hpp"

namespace mcube {

nlohmann::json value_set_json(ValueSet s);

// {closure: [...], rows: [[...]], relation: [[i, j], ...]}
nlohmann::json table_json(const TableModel& m);
std::string table_csv(const Closure& c, const RowSet& rows);

// {closure, rows, levels: [[row indices], ...]}
nlohmann::json level_trace_json(const LevelTrace& t);
// One column "level" holding the deepest level each row reaches.
std::string level_trace_csv(const LevelTrace& t);

// {logic, values, bot, implication: {a: {b: [...]}}, box: {a: [...]}}
nlohmann::json nmatrix_json(const Nmatrix& m);
std::string nmatrix_csv(const Nmatrix& m);

// {worlds: n, relation: [[i, j]], valuation: {atom: [bools]}}
nlohmann::json kripke_json(const KripkeModel& k);
std::string kripke_dot(const KripkeModel& k, std::optional<std::size_t> highlight = std::nullopt);

// [{label, schema}, ...]
nlohmann::json axioms_json(const Logic& l);

}  // namespace mcube
