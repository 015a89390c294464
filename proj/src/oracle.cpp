#include <cmath>
#include <algorithm>

#include "mcube/errors.hpp"
#include "mcube/kripke.hpp"

namespace mcube {

namespace {

using Mask = std::uint32_t;

struct Frame {
    std::size_t n;
    std::vector<Mask> succ;
};

bool frame_ok(const Frame& fr, FrameProps props) {
    const std::size_t n = fr.n;
    for (std::size_t i = 0; i < n; ++i) {
        Mask s = fr.succ[i];
        if (props.has(FrameProperty::serial) && s == 0) return false;
        if (props.has(FrameProperty::reflexive) && !((s >> i) & 1u)) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (!((s >> j) & 1u)) continue;
            if (props.has(FrameProperty::symmetric) && !((fr.succ[j] >> i) & 1u)) return false;
            if (props.has(FrameProperty::transitive) && (fr.succ[j] & ~s)) return false;
            if (props.has(FrameProperty::euclidean) && (s & ~fr.succ[j])) return false;
        }
    }
    return true;
}

Mask box_of(const Frame& fr, Mask x) {
    Mask out = 0;
    for (std::size_t w = 0; w < fr.n; ++w)
        if ((fr.succ[w] & ~x) == 0) out |= Mask{1} << w;
    return out;
}

}  // namespace

OracleVerdict oracle_decide(const Logic& logic, std::span<const Formula> assumptions,
                            const Formula& goal, std::size_t max_worlds, std::size_t budget) {
    if (max_worlds < 1) throw std::invalid_argument("max_worlds must be at least 1");
    std::vector<Formula> roots(assumptions.begin(), assumptions.end());
    roots.push_back(goal);
    Closure c = closure(roots);
    std::vector<std::string> names = c.atom_names();
    const std::size_t a = names.size();

    double total = 0;
    for (std::size_t n = 1; n <= max_worlds; ++n)
        total += std::ldexp(1.0, static_cast<int>(n * n + n * a));
    if (max_worlds > 5 || total > static_cast<double>(budget))
        throw OracleBudgetExceeded("oracle enumeration of " + std::to_string(max_worlds) +
                                   " worlds over " + std::to_string(a) +
                                   " atoms exceeds the budget");

    std::vector<std::size_t> premise_columns;
    for (const Formula& f : assumptions) premise_columns.push_back(*c.index_of(f));
    const std::size_t goal_column = *c.index_of(goal);
    std::vector<int> atom_slot(c.size(), -1);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].is_atom())
            atom_slot[i] = static_cast<int>(
                std::lower_bound(names.begin(), names.end(), c[i].name()) - names.begin());

    OracleVerdict verdict;
    verdict.bound = max_worlds;
    std::vector<Mask> value(c.size());
    for (std::size_t n = 1; n <= max_worlds; ++n) {
        const Mask all = (Mask{1} << n) - 1;
        const std::uint64_t relations = std::uint64_t{1} << (n * n);
        const std::uint64_t valuations = std::uint64_t{1} << (n * a);
        Frame fr{n, std::vector<Mask>(n)};
        for (std::uint64_t rel = 0; rel < relations; ++rel) {
            for (std::size_t i = 0; i < n; ++i) fr.succ[i] = static_cast<Mask>((rel >> (i * n)) & all);
            if (!frame_ok(fr, logic.frame)) continue;
            for (std::uint64_t val = 0; val < valuations; ++val) {
                for (std::size_t i = 0; i < c.size(); ++i) {
                    const Formula& f = c[i];
                    switch (f.kind()) {
                        case Connective::atom:
                            value[i] = static_cast<Mask>(
                                (val >> (static_cast<std::size_t>(atom_slot[i]) * n)) & all);
                            break;
                        case Connective::falsum: value[i] = 0; break;
                        case Connective::implies:
                            value[i] = (~value[static_cast<std::size_t>(c.lhs_index(i))] |
                                        value[static_cast<std::size_t>(c.rhs_index(i))]) & all;
                            break;
                        case Connective::box:
                            value[i] = box_of(fr, value[static_cast<std::size_t>(c.lhs_index(i))]);
                            break;
                    }
                }
                Mask bad = all & ~value[goal_column];
                for (std::size_t col : premise_columns) bad &= value[col];
                if (bad == 0) continue;
                KripkeModel k;
                k.world_count = n;
                k.relation = Relation(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if ((fr.succ[i] >> j) & 1u) k.relation.add(i, j);
                for (std::size_t s = 0; s < a; ++s) {
                    std::vector<bool> truth(n);
                    for (std::size_t w = 0; w < n; ++w) truth[w] = (val >> (s * n + w)) & 1u;
                    k.valuation[names[s]] = truth;
                }
                verdict.countermodel_found = true;
                verdict.model = std::move(k);
                verdict.world = static_cast<std::size_t>(__builtin_ctz(bad));
                return verdict;
            }
        }
    }
    return verdict;
}

}  // namespace mcube
