#include "mcube/relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcube {

Relation::Relation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : succ_(n) {
    for (const auto& [a, b] : pairs) add(a, b);
}

std::size_t Relation::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& s : succ_) n += s.size();
    return n;
}

bool Relation::contains(std::size_t from, std::size_t to) const {
    if (from >= succ_.size()) return false;
    const auto& s = succ_[from];
    return std::binary_search(s.begin(), s.end(), static_cast<std::uint32_t>(to));
}

void Relation::add(std::size_t from, std::size_t to) {
    if (from >= succ_.size() || to >= succ_.size())
        throw std::out_of_range("relation pair outside the node range");
    auto& s = succ_[from];
    auto value = static_cast<std::uint32_t>(to);
    auto it = std::lower_bound(s.begin(), s.end(), value);
    if (it == s.end() || *it != value) s.insert(it, value);
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < succ_.size(); ++i)
        for (std::uint32_t j : succ_[i]) out.emplace_back(i, j);
    return out;
}

bool Relation::subset_of(const Relation& other) const {
    for (std::size_t i = 0; i < succ_.size(); ++i)
        for (std::uint32_t j : succ_[i])
            if (!other.contains(i, j)) return false;
    return true;
}

bool is_serial(const Relation& r) {
    for (std::size_t i = 0; i < r.node_count(); ++i)
        if (r.successors(i).empty()) return false;
    return true;
}

bool is_reflexive(const Relation& r) {
    for (std::size_t i = 0; i < r.node_count(); ++i)
        if (!r.contains(i, i)) return false;
    return true;
}

bool is_symmetric(const Relation& r) {
    for (std::size_t i = 0; i < r.node_count(); ++i)
        for (std::uint32_t j : r.successors(i))
            if (!r.contains(j, i)) return false;
    return true;
}

bool is_transitive(const Relation& r) {
    for (std::size_t i = 0; i < r.node_count(); ++i)
        for (std::uint32_t j : r.successors(i))
            for (std::uint32_t k : r.successors(j))
                if (!r.contains(i, k)) return false;
    return true;
}

bool is_euclidean(const Relation& r) {
    for (std::size_t i = 0; i < r.node_count(); ++i)
        for (std::uint32_t j : r.successors(i))
            for (std::uint32_t k : r.successors(i))
                if (!r.contains(j, k)) return false;
    return true;
}

}  // namespace mcube
