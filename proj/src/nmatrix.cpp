#include "mcube/nmatrix.hpp"

#include <sstream>
#include <string_view>
#include <vector>

#include "mcube/errors.hpp"

namespace mcube {

namespace {

// Rows and columns in canonical order F f ff fff ttt tt t T.
constexpr std::array<std::array<std::string_view, 8>, 8> implication_text = {{
    {"T", "T", "T", "T", "T", "T", "T", "T"},
    {"t", "T t", "tt", "T", "t", "T", "T t", "T"},
    {"ttt", "t", "tt", "T", "ttt", "tt", "t", "T"},
    {"ttt", "t", "tt", "T", "ttt", "tt", "t", "T"},
    {"fff", "fff", "fff", "fff", "T", "T", "T", "T"},
    {"F", "f", "ff", "fff", "ttt", "tt", "ttt", "T"},
    {"f", "f fff", "fff", "fff", "t", "T", "T t", "T"},
    {"F", "f", "ff", "fff", "ttt", "tt", "t", "T"},
}};

// One column per logic in registry order; "-" marks values outside V(L).
constexpr std::array<std::array<std::string_view, 8>, 15> box_text = {{
    /* K    */ {"F f fff", "F f fff", "tt", "T t ttt", "F f fff", "tt", "F f fff", "T t ttt"},
    /* KD   */ {"F f fff", "F f fff", "-", "T t ttt", "F f fff", "-", "F f fff", "T t ttt"},
    /* KT   */ {"F", "F f", "-", "-", "-", "-", "F f", "T t"},
    /* KB   */ {"F", "F", "tt", "ttt", "F f fff", "tt", "F f fff", "T t ttt"},
    /* KDB  */ {"F", "F", "-", "ttt", "F f fff", "-", "F f fff", "T t ttt"},
    /* KTB  */ {"F", "F", "-", "-", "-", "-", "F f", "T t"},
    /* K4   */ {"F f fff", "F f fff", "tt", "T", "F f fff", "tt", "F f fff", "T"},
    /* KD4  */ {"F", "F f fff", "-", "T", "F", "-", "F f fff", "T"},
    /* KT4  */ {"F", "F f", "-", "-", "-", "-", "F f", "T"},
    /* K5   */ {"F", "F", "tt", "T ttt", "F", "tt", "F", "T ttt"},
    /* KD5  */ {"F", "F", "-", "T ttt", "F", "-", "F", "T ttt"},
    /* K45  */ {"F", "F", "tt", "T", "F", "tt", "F", "T"},
    /* KD45 */ {"F", "F", "-", "T", "F", "-", "F", "T"},
    /* KB5  */ {"F", "F", "tt", "-", "-", "tt", "F", "T"},
    /* KT45 */ {"F", "F", "-", "-", "-", "-", "F", "T"},
}};

ValueSet parse_cell(std::string_view text) {
    ValueSet out;
    if (text == "-") return out;
    std::istringstream in{std::string(text)};
    std::string word;
    while (in >> word) out.insert(*value_from_name(word));
    return out;
}

}  // namespace

ValueSet raw_implication(Value a, Value b) {
    return parse_cell(implication_text[index(a)][index(b)]);
}

ValueSet raw_box(const Logic& logic, Value a) { return parse_cell(box_text[logic.id][index(a)]); }

Nmatrix::Nmatrix(const Logic& logic) : logic_(&logic), bot_(raw_bot & logic.values) {
    for (Value a : logic.values) {
        for (Value b : logic.values) imp_[index(a)][index(b)] = raw_implication(a, b) & logic.values;
        box_[index(a)] = raw_box(logic, a) & logic.values;
    }
}

void Nmatrix::require(Value v) const {
    if (!logic_->values.contains(v))
        throw ValueDomainError("value " + std::string(name(v)) + " is not admissible in " +
                               logic_->name);
}

ValueSet Nmatrix::imp(Value a, Value b) const {
    require(a);
    require(b);
    return imp_cell(a, b);
}

ValueSet Nmatrix::box(Value a) const {
    require(a);
    return box_cell(a);
}

ValueSet Nmatrix::neg(Value a, Value bot_value) const {
    if (!bot_.contains(bot_value))
        throw ValueDomainError("value " + std::string(name(bot_value)) +
                               " is not a falsum value in " + logic_->name);
    return imp(a, bot_value);
}

ValueSet Nmatrix::dia(Value a, Value bot_value) const {
    ValueSet out;
    for (Value b : neg(a, bot_value))
        for (Value c : box(b)) out = out | neg(c, bot_value);
    return out;
}

const Nmatrix& nmatrix(const Logic& logic) {
    static const std::vector<Nmatrix> tables = [] {
        std::vector<Nmatrix> v;
        for (const Logic& l : all_logics()) v.emplace_back(l);
        return v;
    }();
    return tables.at(logic.id);
}

}  // namespace mcube
