#include <algorithm>
#include <numeric>

#include "mcube/errors.hpp"
#include "mcube/kripke.hpp"

namespace mcube {

bool satisfies(const Relation& r, FrameProps props) {
    return (!props.has(FrameProperty::serial) || is_serial(r)) &&
           (!props.has(FrameProperty::reflexive) || is_reflexive(r)) &&
           (!props.has(FrameProperty::symmetric) || is_symmetric(r)) &&
           (!props.has(FrameProperty::transitive) || is_transitive(r)) &&
           (!props.has(FrameProperty::euclidean) || is_euclidean(r));
}

namespace {

class BitMatrix {
public:
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
    explicit BitMatrix(const Relation& r) : BitMatrix(r.node_count()) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::uint32_t j : r.successors(i)) set(i, j);
    }

    bool get(std::size_t i, std::size_t j) const { return (row(i)[j / 64] >> (j % 64)) & 1u; }
    // Returns true when the bit was newly set.
    bool set(std::size_t i, std::size_t j) {
        std::uint64_t& w = row(i)[j / 64];
        std::uint64_t b = std::uint64_t{1} << (j % 64);
        if (w & b) return false;
        w |= b;
        return true;
    }
    // row(dst) |= row(src); returns true on change.
    bool merge(std::size_t dst, std::size_t src) {
        bool changed = false;
        std::uint64_t* d = row(dst);
        const std::uint64_t* s = row(src);
        for (std::size_t k = 0; k < words_; ++k) {
            std::uint64_t next = d[k] | s[k];
            changed = changed || next != d[k];
            d[k] = next;
        }
        return changed;
    }
    bool row_subset(std::size_t i, const BitMatrix& other) const {
        const std::uint64_t* a = row(i);
        const std::uint64_t* b = other.row(i);
        for (std::size_t k = 0; k < words_; ++k)
            if (a[k] & ~b[k]) return false;
        return true;
    }
    std::vector<std::uint32_t> members(std::size_t i) const {
        std::vector<std::uint32_t> out;
        for (std::size_t j = 0; j < n_; ++j)
            if (get(i, j)) out.push_back(static_cast<std::uint32_t>(j));
        return out;
    }
    Relation to_relation() const {
        Relation r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::uint32_t j : members(i)) r.add(i, j);
        return r;
    }

private:
    std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace

Relation frame_closure(const Relation& r, FrameProps props, const Relation& candidates) {
    const std::size_t n = r.node_count();
    if (candidates.node_count() != n || !r.subset_of(candidates))
        throw std::invalid_argument("relation is not contained in the candidate relation");
    BitMatrix m(r);
    const BitMatrix allowed(candidates);
    auto check = [&](const char* what) {
        for (std::size_t i = 0; i < n; ++i)
            if (!m.row_subset(i, allowed))
                throw ClosureImpossible(std::string(what) +
                                        " closure needs a pair outside the candidate relation");
    };
    bool changed = true;
    while (changed) {
        changed = false;
        if (props.has(FrameProperty::reflexive)) {
            for (std::size_t i = 0; i < n; ++i) changed = m.set(i, i) || changed;
            check("reflexive");
        }
        if (props.has(FrameProperty::symmetric)) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::uint32_t j : m.members(i)) changed = m.set(j, i) || changed;
            check("symmetric");
        }
        if (props.has(FrameProperty::transitive)) {
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t i = 0; i < n; ++i)
                    if (m.get(i, k)) changed = m.merge(i, k) || changed;
            check("transitive");
        }
        if (props.has(FrameProperty::euclidean)) {
            bool again = true;
            while (again) {
                again = false;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::uint32_t j : m.members(i)) again = m.merge(j, i) || again;
                changed = changed || again;
            }
            check("euclidean");
        }
    }
    Relation out = m.to_relation();
    if (props.has(FrameProperty::serial) && !is_serial(out))
        throw ClosureImpossible("some world has no successor in a serial logic");
    return out;
}

namespace {

bool supports(const Logic& logic, const RowSet& rows, std::size_t v,
              const std::vector<std::uint32_t>& targets) {
    auto row = rows[v];
    for (std::size_t c = 0; c < row.size(); ++c)
        for (ValueSet need : support_requirements(logic, row[c])) {
            bool found = std::any_of(targets.begin(), targets.end(),
                                     [&](std::uint32_t x) { return need.contains(rows[x][c]); });
            if (!found) return false;
        }
    return true;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

// Euclidean extraction: each world points either into one self-supporting
// cluster of mutually related rows or nowhere at all.
Relation cluster_relation(const Logic& logic, const RowSet& rows, const Relation& candidates) {
    const std::size_t n = rows.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t u = 0; u < n; ++u) {
        if (!candidates.contains(u, u)) continue;
        for (std::uint32_t w : candidates.successors(u))
            if (w != u && candidates.contains(w, w) && candidates.contains(w, u))
                parent[find_root(parent, u)] = find_root(parent, w);
    }
    std::map<std::size_t, std::vector<std::uint32_t>> groups;
    for (std::size_t u = 0; u < n; ++u)
        if (candidates.contains(u, u)) groups[find_root(parent, u)].push_back(static_cast<std::uint32_t>(u));

    std::vector<std::vector<std::uint32_t>> clusters;
    for (auto& [root, members] : groups) {
        for (std::uint32_t a : members)
            for (std::uint32_t b : members)
                if (!candidates.contains(a, b))
                    throw ClosureImpossible("mutually related rows do not form a cluster");
        bool shrunk = true;
        while (shrunk && !members.empty()) {
            shrunk = false;
            std::vector<std::uint32_t> kept;
            for (std::uint32_t x : members)
                if (supports(logic, rows, x, members)) kept.push_back(x);
            shrunk = kept.size() != members.size();
            members = std::move(kept);
        }
        if (!members.empty()) clusters.push_back(members);
    }
    std::sort(clusters.begin(), clusters.end());

    std::vector<int> home(n, -1);
    for (std::size_t k = 0; k < clusters.size(); ++k)
        for (std::uint32_t x : clusters[k]) home[x] = static_cast<int>(k);

    Relation out(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (home[v] >= 0) {
            for (std::uint32_t x : clusters[static_cast<std::size_t>(home[v])]) out.add(v, x);
            continue;
        }
        if (supports(logic, rows, v, {})) continue;
        bool placed = false;
        for (const auto& cluster : clusters) {
            std::vector<std::uint32_t> reachable;
            for (std::uint32_t x : cluster)
                if (candidates.contains(v, x)) reachable.push_back(x);
            if (!reachable.empty() && supports(logic, rows, v, reachable)) {
                for (std::uint32_t x : reachable) out.add(v, x);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw ClosureImpossible("row " + std::to_string(v) + " has no euclidean support");
    }
    return out;
}

}  // namespace

KripkeModel to_kripke(const TableModel& m) {
    const Logic& logic = *m.logic;
    Relation candidates = build_relation(logic, m.rows);
    Relation r;
    try {
        r = frame_closure(m.relation, logic.frame, candidates);
    } catch (const ClosureImpossible&) {
        if (!logic.has(FrameProperty::euclidean)) throw;
        r = frame_closure(cluster_relation(logic, m.rows, candidates), logic.frame, candidates);
    }
    KripkeModel k;
    k.world_count = m.rows.size();
    k.relation = std::move(r);
    for (std::size_t c = 0; c < m.closure.size(); ++c) {
        if (!m.closure[c].is_atom()) continue;
        std::vector<bool> truth(k.world_count);
        for (std::size_t w = 0; w < k.world_count; ++w) truth[w] = is_designated(m.rows[w][c]);
        k.valuation[m.closure[c].name()] = std::move(truth);
    }
    return k;
}

std::vector<bool> truth_set(const KripkeModel& k, const Formula& f) {
    const std::size_t n = k.world_count;
    switch (f.kind()) {
        case Connective::atom: {
            auto it = k.valuation.find(f.name());
            return it == k.valuation.end() ? std::vector<bool>(n, false) : it->second;
        }
        case Connective::falsum: return std::vector<bool>(n, false);
        case Connective::implies: {
            std::vector<bool> a = truth_set(k, f.lhs());
            std::vector<bool> b = truth_set(k, f.rhs());
            for (std::size_t w = 0; w < n; ++w) a[w] = !a[w] || b[w];
            return a;
        }
        case Connective::box: {
            std::vector<bool> a = truth_set(k, f.operand());
            std::vector<bool> out(n, true);
            for (std::size_t w = 0; w < n; ++w)
                for (std::uint32_t x : k.relation.successors(w))
                    if (!a[x]) out[w] = false;
            return out;
        }
    }
    return {};
}

bool forces(const KripkeModel& k, std::size_t world, const Formula& f) {
    return truth_set(k, f).at(world);
}

}  // namespace mcube
