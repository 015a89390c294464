#include "mcube/values.hpp"

namespace mcube {

namespace {

constexpr std::array<std::string_view, 8> value_names = {"F", "f", "ff", "fff",
                                                         "ttt", "tt", "t", "T"};

}  // namespace

std::string_view name(Value v) { return value_names[index(v)]; }

std::optional<Value> value_from_name(std::string_view s) {
    for (Value v : all_values)
        if (value_names[index(v)] == s) return v;
    return std::nullopt;
}

std::vector<Value> ValueSet::to_vector() const {
    std::vector<Value> out;
    for (Value v : *this) out.push_back(v);
    return out;
}

std::string format(ValueSet s) {
    std::string out = "{";
    bool first = true;
    for (Value v : s) {
        if (!first) out += ",";
        out += name(v);
        first = false;
    }
    return out + "}";
}

ValueSet named_set(NamedSet s) {
    switch (s) {
        case NamedSet::D: return designated_values;
        case NamedSet::Dc: return undesignated_values;
        case NamedSet::N: return necessary_values;
        case NamedSet::I: return impossible_values;
        case NamedSet::P: return possible_values;
        case NamedSet::PN: return possibly_not_values;
    }
    return {};
}

bool member(Value v, NamedSet s) { return named_set(s).contains(v); }

Formula characterization(Value v, const Formula& a) {
    // Three conjuncts: possibility, the value itself, necessity.
    const char* pattern = "";
    switch (v) {
        case Value::F: pattern = "<>!A & !A & []!A"; break;
        case Value::f: pattern = "<>!A & !A & <>A"; break;
        case Value::ff: pattern = "[]A & !A & []!A"; break;
        case Value::fff: pattern = "[]A & !A & <>A"; break;
        case Value::ttt: pattern = "<>!A & A & []!A"; break;
        case Value::tt: pattern = "[]A & A & []!A"; break;
        case Value::t: pattern = "<>!A & A & <>A"; break;
        case Value::T: pattern = "[]A & A & <>A"; break;
    }
    return instantiate(parse(pattern, true), {{"A", a}});
}

}  // namespace mcube
