#pragma once

#include <cstdint>
#include <random>

#include "mcube/formula.hpp"

namespace mcube {

// Seeded generator of random formulas built from the sugared connectives.
class FormulaGenerator {
public:
    FormulaGenerator(std::uint64_t seed, std::size_t atom_count);

    Formula next(std::size_t max_depth);

private:
    std::size_t pick(std::uint64_t bound);
    Formula leaf();

    std::mt19937_64 rng_;
    std::size_t atom_count_;
};

// Atom names p, q, r, s, ... then p1, p2, ...
std::string atom_name(std::size_t i);

}  // namespace mcube
