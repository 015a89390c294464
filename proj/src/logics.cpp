#include "mcube/logics.hpp"

#include <array>
#include <utility>

#include "mcube/errors.hpp"

namespace mcube {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::K: return "K*";
        case Family::KD: return "KD*";
        case Family::KT: return "KT*";
        case Family::KB5: return "KB45";
    }
    return "";
}

std::string format(FrameProps p) {
    std::string out;
    auto add = [&](FrameProperty q, const char* label) {
        if (!p.has(q)) return;
        if (!out.empty()) out += ",";
        out += label;
    };
    add(FrameProperty::serial, "D");
    add(FrameProperty::reflexive, "T");
    add(FrameProperty::symmetric, "B");
    add(FrameProperty::transitive, "4");
    add(FrameProperty::euclidean, "5");
    return "{" + out + "}";
}

namespace {

using FP = FrameProperty;

constexpr ValueSet family_values(Family f) {
    switch (f) {
        case Family::K: return ValueSet::all();
        case Family::KB5:
            return {Value::F, Value::f, Value::ff, Value::tt, Value::t, Value::T};
        case Family::KD:
            return {Value::F, Value::f, Value::fff, Value::ttt, Value::t, Value::T};
        case Family::KT: return {Value::F, Value::f, Value::t, Value::T};
    }
    return {};
}

std::vector<Logic> build_registry() {
    struct Entry {
        const char* name;
        Family family;
        FrameProps frame;
        const char* axioms;
    };
    const std::array<Entry, 15> entries = {{
        {"K", Family::K, {}, "k"},
        {"KD", Family::KD, {FP::serial}, "kd"},
        {"KT", Family::KT, {FP::reflexive, FP::serial}, "kt"},
        {"KB", Family::K, {FP::symmetric}, "kb"},
        {"KDB", Family::KD, {FP::serial, FP::symmetric}, "kdb"},
        {"KTB", Family::KT, {FP::reflexive, FP::serial, FP::symmetric}, "ktb"},
        {"K4", Family::K, {FP::transitive}, "k4"},
        {"KD4", Family::KD, {FP::serial, FP::transitive}, "kd4"},
        {"KT4", Family::KT, {FP::reflexive, FP::serial, FP::transitive}, "kt4"},
        {"K5", Family::K, {FP::euclidean}, "k5"},
        {"KD5", Family::KD, {FP::serial, FP::euclidean}, "kd5"},
        {"K45", Family::K, {FP::transitive, FP::euclidean}, "k45"},
        {"KD45", Family::KD, {FP::serial, FP::transitive, FP::euclidean}, "kd45"},
        {"KB5", Family::KB5, {FP::symmetric, FP::transitive, FP::euclidean}, "kb5"},
        {"KT45", Family::KT,
         {FP::reflexive, FP::serial, FP::symmetric, FP::transitive, FP::euclidean}, "ktb45"},
    }};
    std::vector<Logic> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        ValueSet vs = family_values(e.family);
        out.push_back(Logic{e.name, e.family, e.frame, e.axioms, vs, vs & designated_values,
                            vs & undesignated_values, i});
    }
    return out;
}

constexpr std::array<std::pair<std::string_view, std::string_view>, 11> aliases = {{
    {"D", "KD"},
    {"T", "KT"},
    {"B", "KTB"},
    {"S4", "KT4"},
    {"S5", "KT45"},
    {"DB", "KDB"},
    {"D4", "KD4"},
    {"D5", "KD5"},
    {"D45", "KD45"},
    {"KB45", "KB5"},
    {"KTB45", "KT45"},
}};

}  // namespace

const std::vector<Logic>& all_logics() {
    static const std::vector<Logic> registry = build_registry();
    return registry;
}

std::vector<std::string> logic_names() {
    std::vector<std::string> out;
    for (const Logic& l : all_logics()) out.push_back(l.name);
    return out;
}

const Logic& lookup(std::string_view name) {
    std::string_view target = name;
    for (const auto& [alias, canonical] : aliases)
        if (alias == name) target = canonical;
    for (const Logic& l : all_logics())
        if (l.name == target) return l;
    std::string known;
    for (const Logic& l : all_logics()) known += (known.empty() ? "" : ", ") + l.name;
    for (const auto& [alias, canonical] : aliases) known += ", " + std::string(alias);
    throw UnknownLogicError("unknown logic '" + std::string(name) + "'; known: " + known);
}

Formula axiom_schema(char label) {
    switch (label) {
        case 'k': return parse("[](A -> B) -> []A -> []B", true);
        case 'd': return parse("[]A -> <>A", true);
        case 't': return parse("[]A -> A", true);
        case 'b': return parse("A -> []<>A", true);
        case '4': return parse("[]A -> [][]A", true);
        case '5': return parse("<>A -> []<>A", true);
        default: throw std::invalid_argument(std::string("unknown axiom label ") + label);
    }
}

std::vector<Axiom> axioms(const Logic& l) {
    std::vector<Axiom> out;
    for (char c : l.axiom_labels) out.push_back({std::string(1, c), axiom_schema(c)});
    return out;
}

std::vector<Axiom> frame_axioms(const Logic& l) {
    std::vector<Axiom> out{{"k", axiom_schema('k')}};
    const std::array<std::pair<FrameProperty, char>, 5> table = {{
        {FP::serial, 'd'},
        {FP::reflexive, 't'},
        {FP::symmetric, 'b'},
        {FP::transitive, '4'},
        {FP::euclidean, '5'},
    }};
    for (const auto& [p, c] : table)
        if (l.has(p)) out.push_back({std::string(1, c), axiom_schema(c)});
    return out;
}

}  // namespace mcube
