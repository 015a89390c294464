#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcube/formula.hpp"
#include "mcube/values.hpp"

namespace mcube {

enum class Family { K, KD, KT, KB5 };

std::string_view family_name(Family f);

enum class FrameProperty : std::uint8_t {
    serial = 1,
    reflexive = 2,
    symmetric = 4,
    transitive = 8,
    euclidean = 16,
};

class FrameProps {
public:
    constexpr FrameProps() = default;
    constexpr FrameProps(std::initializer_list<FrameProperty> ps) {
        for (FrameProperty p : ps) bits_ |= static_cast<std::uint8_t>(p);
    }
    constexpr bool has(FrameProperty p) const { return (bits_ & static_cast<std::uint8_t>(p)) != 0; }
    constexpr std::uint8_t bits() const { return bits_; }
    friend constexpr bool operator==(FrameProps, FrameProps) = default;

private:
    std::uint8_t bits_ = 0;
};

// "D", "T", "B", "4", "5" in that order.
std::string format(FrameProps p);

struct Logic {
    std::string name;
    Family family;
    FrameProps frame;
    // Defining axiom labels, "k" first.
    std::string axiom_labels;
    ValueSet values;
    ValueSet designated;
    ValueSet undesignated;
    std::size_t id;

    bool has(FrameProperty p) const { return frame.has(p); }
    bool admits_stable() const { return stable_values.subset_of(values); }
};

// Registry order: K, KD, KT, KB, KDB, KTB, K4, KD4, KT4, K5, KD5, K45, KD45, KB5, KT45.
const std::vector<Logic>& all_logics();
const Logic& lookup(std::string_view name);
std::vector<std::string> logic_names();

struct Axiom {
    std::string label;
    Formula schema;
};

// Schema over metavariables A and B for label k, d, t, b, 4 or 5.
Formula axiom_schema(char label);

std::vector<Axiom> axioms(const Logic& l);

// Axioms of every frame property the logic satisfies, including derived ones.
std::vector<Axiom> frame_axioms(const Logic& l);

}  // namespace mcube
