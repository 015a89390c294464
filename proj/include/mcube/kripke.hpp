#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcube/decision.hpp"
#include "mcube/formula.hpp"
#include "mcube/logics.hpp"
#include "mcube/relation.hpp"

namespace mcube {

struct KripkeModel {
    std::size_t world_count = 0;
    Relation relation;
    // Atom name to truth per world.
    std::map<std::string, std::vector<bool>> valuation;
};

bool satisfies(const Relation& r, FrameProps props);

// Least superset of r inside candidates with the requested properties.
Relation frame_closure(const Relation& r, FrameProps props, const Relation& candidates);

KripkeModel to_kripke(const TableModel& m);

// Truth of f at every world; unknown atoms are false.
std::vector<bool> truth_set(const KripkeModel& k, const Formula& f);
bool forces(const KripkeModel& k, std::size_t world, const Formula& f);

inline constexpr std::size_t default_oracle_budget = 200'000'000;

struct OracleVerdict {
    bool countermodel_found = false;
    std::optional<KripkeModel> model;
    std::size_t world = 0;
    std::size_t bound = 0;
};

OracleVerdict oracle_decide(const Logic& logic, std::span<const Formula> assumptions,
                            const Formula& goal, std::size_t max_worlds = 3,
                            std::size_t budget = default_oracle_budget);

}  // namespace mcube
