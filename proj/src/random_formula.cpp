#include "mcube/random_formula.hpp"

#include <array>

namespace mcube {

std::string atom_name(std::size_t i) {
    static constexpr std::array<const char*, 8> base = {"p", "q", "r", "s", "u", "v", "w", "x"};
    if (i < base.size()) return base[i];
    return "p" + std::to_string(i - base.size() + 1);
}

FormulaGenerator::FormulaGenerator(std::uint64_t seed, std::size_t atom_count)
    : rng_(seed), atom_count_(atom_count == 0 ? 1 : atom_count) {}

// Modulo reduction keeps the stream identical across standard libraries.
std::size_t FormulaGenerator::pick(std::uint64_t bound) {
    return static_cast<std::size_t>(rng_() % bound);
}

Formula FormulaGenerator::leaf() {
    // atom:4, bot:1
    if (pick(5) < 4) return Formula::atom(atom_name(pick(atom_count_)));
    return Formula::falsum();
}

Formula FormulaGenerator::next(std::size_t max_depth) {
    if (max_depth == 0) return leaf();
    enum Shape { imp, box, diamond, negation, conjunction, disjunction, atom, bot };
    static constexpr std::array<std::pair<Shape, int>, 8> weights = {{
        {imp, 3}, {box, 2}, {diamond, 2}, {negation, 2},
        {conjunction, 1}, {disjunction, 1}, {atom, 4}, {bot, 1},
    }};
    std::size_t roll = pick(16);
    Shape shape = bot;
    for (const auto& [s, w] : weights) {
        if (roll < static_cast<std::size_t>(w)) {
            shape = s;
            break;
        }
        roll -= static_cast<std::size_t>(w);
    }
    const std::size_t d = max_depth - 1;
    switch (shape) {
        case imp: {
            Formula a = next(d);
            return Formula::implies(a, next(d));
        }
        case box: return Formula::box(next(d));
        case diamond: return dia(next(d));
        case negation: return neg(next(d));
        case conjunction: {
            Formula a = next(d);
            return conj(a, next(d));
        }
        case disjunction: {
            Formula a = next(d);
            return disj(a, next(d));
        }
        case atom: return Formula::atom(atom_name(pick(atom_count_)));
        case bot: return Formula::falsum();
    }
    return Formula::falsum();
}

}  // namespace mcube
