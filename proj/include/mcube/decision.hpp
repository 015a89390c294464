#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcube/formula.hpp"
#include "mcube/logics.hpp"
#include "mcube/nmatrix.hpp"
#include "mcube/relation.hpp"
#include "mcube/values.hpp"

namespace mcube {

inline constexpr std::size_t default_row_cap = 2'000'000;

// Rows of equal width stored contiguously.
class RowSet {
public:
    RowSet() = default;
    explicit RowSet(std::size_t width) : width_(width) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return size() == 0; }

    std::span<const Value> operator[](std::size_t i) const {
        return {cells_.data() + i * width_, width_};
    }
    void push_back(std::span<const Value> row);
    void push_back(std::initializer_list<Value> row) {
        push_back(std::span<const Value>(row.begin(), row.size()));
    }
    void reserve(std::size_t rows) { cells_.reserve(rows * width_); }

    RowSet select(std::span<const std::size_t> indices) const;
    friend bool operator==(const RowSet&, const RowSet&) = default;

private:
    std::size_t width_ = 0;
    std::size_t count_ = 0;
    std::vector<Value> cells_;
};

struct TableModel {
    const Logic* logic = nullptr;
    Closure closure;
    RowSet rows;
    Relation relation;
};

// Rows compatible with the logic's tables over the closure, sorted.
RowSet enumerate_rows(const Logic& logic, const Closure& c, std::size_t row_cap = default_row_cap);

// Nmatrix compatibility and stability of one row.
bool row_is_admissible(const Logic& logic, const Closure& c, std::span<const Value> row);

ValueSet allowed_successors(const Logic& logic, Value v);
std::vector<ValueSet> support_requirements(const Logic& logic, Value v);

bool may_succeed(const Logic& logic, std::span<const Value> from, std::span<const Value> to);
Relation build_relation(const Logic& logic, const RowSet& rows);

struct FilterResult {
    // Indices of surviving input rows, ascending.
    std::vector<std::size_t> survivors;
    // Passes that deleted at least one row.
    std::size_t rounds = 0;
};

// Greatest subset of rows in which every requirement has a surviving
// successor under the maximal relation.
FilterResult filter_rows(const Logic& logic, const RowSet& rows);

struct FilterOptions {
    std::size_t row_cap = default_row_cap;
    bool with_relation = true;
};

struct FilteredModel {
    TableModel model;
    std::size_t initial_rows = 0;
    std::size_t rounds = 0;
};

FilteredModel filter_model(const Logic& logic, const Closure& c, const FilterOptions& options = {});

// Support check of an explicit model.
bool is_supported(const TableModel& m);

struct Verdict {
    bool valid = false;
    TableModel model;
    std::optional<std::size_t> witness;
    std::size_t rounds = 0;
};

struct DecideOptions {
    std::size_t row_cap = default_row_cap;
    bool with_relation = false;
};

Verdict decide(const Logic& logic, std::span<const Formula> assumptions, const Formula& goal,
               const DecideOptions& options = {});
Verdict decide(const Logic& logic, const Formula& goal, const DecideOptions& options = {});

struct LevelTrace {
    Closure closure;
    RowSet rows;
    // levels[k] lists the row indices kept at level k.
    std::vector<std::vector<std::size_t>> levels;
};

LevelTrace level_filter_demo(const Logic& logic, const Closure& c, std::size_t levels,
                             std::size_t row_cap = default_row_cap);

// Appends one column to a filtered model, choosing one value per row.
TableModel extend_column(const TableModel& m, const Formula& f);

}  // namespace mcube
