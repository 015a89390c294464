#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <string_view>

#include "mcube/decision.hpp"
#include "mcube/errors.hpp"

namespace mcube {

void RowSet::push_back(std::span<const Value> row) {
    if (row.size() != width_) throw std::invalid_argument("row width mismatch");
    cells_.insert(cells_.end(), row.begin(), row.end());
    ++count_;
}

RowSet RowSet::select(std::span<const std::size_t> indices) const {
    RowSet out(width_);
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back((*this)[i]);
    return out;
}

// ------------------------------------------------------------ enumeration

namespace {

class RowEnumerator {
public:
    RowEnumerator(const Logic& logic, const Closure& c, std::size_t cap, RowSet& out)
        : m_(nmatrix(logic)), c_(c), cap_(cap), out_(out), row_(c.size()) {}

    void run(ValueSet domain, Value bot) {
        domain_ = domain;
        bot_ = bot;
        extend(0);
    }

private:
    void extend(std::size_t i) {
        if (i == c_.size()) {
            if (out_.size() >= cap_)
                throw RowCapExceeded("row count exceeds the cap of " + std::to_string(cap_));
            out_.push_back(row_);
            return;
        }
        const Formula& f = c_[i];
        ValueSet options;
        switch (f.kind()) {
            case Connective::atom: options = domain_; break;
            case Connective::falsum: options = ValueSet{bot_}; break;
            case Connective::implies:
                options = m_.imp_cell(row_[c_.lhs_index(i)], row_[c_.rhs_index(i)]) & domain_;
                break;
            case Connective::box: options = m_.box_cell(row_[c_.lhs_index(i)]) & domain_; break;
        }
        for (Value v : options) {
            row_[i] = v;
            extend(i + 1);
        }
    }

    const Nmatrix& m_;
    const Closure& c_;
    std::size_t cap_;
    RowSet& out_;
    std::vector<Value> row_;
    ValueSet domain_;
    Value bot_ = Value::F;
};

bool row_less(std::span<const Value> a, std::span<const Value> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

RowSet enumerate_rows(const Logic& logic, const Closure& c, std::size_t row_cap) {
    RowSet raw(c.size());
    RowEnumerator gen(logic, c, row_cap, raw);
    gen.run(logic.values - stable_values, Value::F);
    if (logic.admits_stable() && !c.empty()) gen.run(stable_values, Value::ff);

    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return row_less(raw[a], raw[b]); });
    return raw.select(order);
}

bool row_is_admissible(const Logic& logic, const Closure& c, std::span<const Value> row) {
    if (row.size() != c.size()) return false;
    const Nmatrix& m = nmatrix(logic);
    bool any_stable = false;
    bool all_stable = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
        Value v = row[i];
        if (!logic.values.contains(v)) return false;
        any_stable = any_stable || is_stable(v);
        all_stable = all_stable && is_stable(v);
        const Formula& f = c[i];
        switch (f.kind()) {
            case Connective::atom: break;
            case Connective::falsum:
                if (!m.bot().contains(v)) return false;
                break;
            case Connective::implies:
                if (!m.imp_cell(row[c.lhs_index(i)], row[c.rhs_index(i)]).contains(v)) return false;
                break;
            case Connective::box:
                if (!m.box_cell(row[c.lhs_index(i)]).contains(v)) return false;
                break;
        }
    }
    return !any_stable || all_stable;
}

// ------------------------------------------------------- relational tables

namespace {

// Per logic in registry order, values in canonical order F f ff fff ttt tt t T.
// "*" stands for V(L), "." for no successor at all.
constexpr std::array<std::array<std::string_view, 8>, 15> successor_text = {{
    /* K    */ {"F f ff fff", "*", ".", "T t tt ttt", "F f ff fff", ".", "*", "T t tt ttt"},
    /* KD   */ {"F f fff", "*", ".", "T t ttt", "F f fff", ".", "*", "T t ttt"},
    /* KT   */ {"F f", "*", ".", "*", "*", ".", "*", "T t"},
    /* KB   */ {"F f", "F f t ttt", ".", "t ttt", "f fff", ".", "T t f fff", "T t"},
    /* KDB  */ {"F f", "F f t ttt", ".", "t ttt", "f fff", ".", "T t f fff", "T t"},
    /* KTB  */ {"F f", "F f t", ".", "*", "*", ".", "T t f", "T t"},
    /* K4   */ {"F ff", "*", ".", "T tt", "F ff", ".", "*", "T tt"},
    /* KD4  */ {"F", "*", ".", "T", "F", ".", "*", "T"},
    /* KT4  */ {"F", "*", ".", "*", "*", ".", "*", "T"},
    /* K5   */ {"F f", "t f", ".", "T t", "F f", ".", "t f", "T t"},
    /* KD5  */ {"F f", "t f", ".", "T t", "F f", ".", "t f", "T t"},
    /* K45  */ {"F", "t f", ".", "T", "F", ".", "t f", "T"},
    /* KD45 */ {"F", "t f", ".", "T", "F", ".", "t f", "T"},
    /* KB5  */ {"F", "t f", ".", "*", "*", ".", "t f", "T"},
    /* KT45 */ {"F", "t f", ".", "*", "*", ".", "t f", "T"},
}};

struct SuccessorTables {
    std::array<std::array<ValueSet, 8>, 15> allowed{};
    std::array<std::array<std::vector<ValueSet>, 8>, 15> requirements{};
};

const SuccessorTables& successor_tables() {
    static const SuccessorTables tables = [] {
        SuccessorTables t;
        for (const Logic& l : all_logics()) {
            for (Value v : l.values) {
                std::string_view text = successor_text[l.id][index(v)];
                ValueSet s;
                if (text == "*") {
                    s = l.values;
                } else if (text != ".") {
                    std::istringstream in{std::string(text)};
                    std::string word;
                    while (in >> word) s.insert(*value_from_name(word));
                }
                s = s & l.values;
                t.allowed[l.id][index(v)] = s;
                auto& req = t.requirements[l.id][index(v)];
                if (possible_values.contains(v)) req.push_back(s & l.designated);
                if (possibly_not_values.contains(v)) req.push_back(s & l.undesignated);
            }
        }
        return t;
    }();
    return tables;
}

}  // namespace

ValueSet allowed_successors(const Logic& logic, Value v) {
    return successor_tables().allowed[logic.id][index(v)];
}

std::vector<ValueSet> support_requirements(const Logic& logic, Value v) {
    return successor_tables().requirements[logic.id][index(v)];
}

bool may_succeed(const Logic& logic, std::span<const Value> from, std::span<const Value> to) {
    const auto& allowed = successor_tables().allowed[logic.id];
    for (std::size_t i = 0; i < from.size(); ++i)
        if (!allowed[index(from[i])].contains(to[i])) return false;
    return true;
}

Relation build_relation(const Logic& logic, const RowSet& rows) {
    const auto& allowed = successor_tables().allowed[logic.id];
    // Rows with equal per-column successor sets share their successor list.
    std::map<std::vector<std::uint8_t>, std::vector<std::uint32_t>> cache;
    Relation r(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto row = rows[i];
        std::vector<std::uint8_t> sig(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) sig[c] = allowed[index(row[c])].bits();
        auto [it, fresh] = cache.try_emplace(sig);
        if (fresh) {
            for (std::size_t j = 0; j < rows.size(); ++j) {
                auto other = rows[j];
                bool ok = true;
                for (std::size_t c = 0; c < row.size() && ok; ++c)
                    ok = ValueSet::from_bits(sig[c]).contains(other[c]);
                if (ok) it->second.push_back(static_cast<std::uint32_t>(j));
            }
        }
        for (std::uint32_t j : it->second) r.add(i, j);
    }
    return r;
}

}  // namespace mcube
