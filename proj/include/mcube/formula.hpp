#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mcube {

enum class Connective : std::uint8_t { atom, falsum, implies, box };

// Immutable modal formula over atoms, falsum, implication and box.
// Copies share structure; equality is structural.
class Formula {
public:
    static Formula atom(std::string name);
    static Formula falsum();
    static Formula implies(Formula lhs, Formula rhs);
    static Formula box(Formula operand);

    Connective kind() const noexcept;
    bool is_atom() const noexcept { return kind() == Connective::atom; }
    bool is_falsum() const noexcept { return kind() == Connective::falsum; }
    bool is_implies() const noexcept { return kind() == Connective::implies; }
    bool is_box() const noexcept { return kind() == Connective::box; }

    const std::string& name() const;
    const Formula& lhs() const;
    const Formula& rhs() const;
    const Formula& operand() const;

    // Node count.
    std::size_t size() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(const Formula& a, const Formula& b) noexcept;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

Formula neg(const Formula& a);
Formula dia(const Formula& a);
Formula conj(const Formula& a, const Formula& b);
Formula disj(const Formula& a, const Formula& b);

// Metavariables are uppercase atom names; they are accepted only when
// allow_metavariables is set (axiom schemata).
Formula parse(std::string_view text, bool allow_metavariables = false);

std::string print(const Formula& f, bool resugar = false);

// Atom names occurring in f, sorted.
std::vector<std::string> atoms(const Formula& f);

Formula instantiate(const Formula& schema, const std::map<std::string, Formula>& binding);

// Strict structural ordering used for deterministic closures.
bool closure_less(const Formula& a, const Formula& b);

class Closure {
public:
    Closure() = default;
    // Requires a subformula-closed, topologically ordered sequence.
    explicit Closure(std::vector<Formula> ordered);

    const std::vector<Formula>& formulas() const noexcept { return formulas_; }
    std::size_t size() const noexcept { return formulas_.size(); }
    bool empty() const noexcept { return formulas_.empty(); }
    const Formula& operator[](std::size_t i) const { return formulas_[i]; }
    std::optional<std::size_t> index_of(const Formula& f) const;
    bool contains(const Formula& f) const { return index_.count(f) != 0; }

    // Child positions; -1 when absent.
    int lhs_index(std::size_t i) const { return links_[i].first; }
    int rhs_index(std::size_t i) const { return links_[i].second; }

    // Appends f, whose immediate subformulas must already be present.
    Closure with(const Formula& f) const;
    Closure without_last() const;

    std::vector<std::string> atom_names() const;

private:
    std::vector<Formula> formulas_;
    std::unordered_map<Formula, std::size_t, FormulaHash> index_;
    std::vector<std::pair<int, int>> links_;
};

Closure closure(std::span<const Formula> roots);
Closure closure(std::initializer_list<Formula> roots);

}  // namespace mcube
