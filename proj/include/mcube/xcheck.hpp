#pragma once

#include <cstdint>
#include <vector>

#include "mcube/formula.hpp"
#include "mcube/logics.hpp"

namespace mcube {

struct XcheckConfig {
    std::size_t count = 200;
    std::size_t max_depth = 2;
    std::size_t atoms = 2;
    std::uint64_t seed = 42;
    std::size_t max_worlds = 3;
};

struct XcheckReport {
    std::size_t total = 0;
    // VALID verdicts with an oracle countermodel.
    std::vector<Formula> disagreements;
    // INVALID verdicts with an oracle countermodel.
    std::size_t refuted = 0;
    // VALID verdicts, no countermodel within the bound.
    std::size_t unresolved = 0;
    // INVALID verdicts, no countermodel within the bound.
    std::size_t invalid_unconfirmed = 0;

    std::size_t agree() const { return total - disagreements.size(); }
};

XcheckReport xcheck(const Logic& logic, const XcheckConfig& config);

}  // namespace mcube
