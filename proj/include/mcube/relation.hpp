#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace mcube {

// Binary relation on {0..n-1} stored as sorted successor lists.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n) : succ_(n) {}
    Relation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    std::size_t node_count() const noexcept { return succ_.size(); }
    std::size_t edge_count() const noexcept;

    bool contains(std::size_t from, std::size_t to) const;
    // Keeps lists sorted; duplicates are ignored.
    void add(std::size_t from, std::size_t to);
    const std::vector<std::uint32_t>& successors(std::size_t from) const { return succ_[from]; }

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
    bool subset_of(const Relation& other) const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::vector<std::vector<std::uint32_t>> succ_;
};

bool is_serial(const Relation& r);
bool is_reflexive(const Relation& r);
bool is_symmetric(const Relation& r);
bool is_transitive(const Relation& r);
bool is_euclidean(const Relation& r);

}  // namespace mcube
