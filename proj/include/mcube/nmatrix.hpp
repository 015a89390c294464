#pragma once

#include <array>

#include "mcube/logics.hpp"
#include "mcube/values.hpp"

namespace mcube {

class Nmatrix {
public:
    explicit Nmatrix(const Logic& logic);

    const Logic& logic() const noexcept { return *logic_; }
    ValueSet bot() const noexcept { return bot_; }

    // Checked accessors; arguments outside V(L) raise ValueDomainError.
    ValueSet imp(Value a, Value b) const;
    ValueSet box(Value a) const;
    ValueSet neg(Value a, Value bot_value) const;
    ValueSet dia(Value a, Value bot_value = Value::F) const;

    // Unchecked; empty for arguments outside V(L).
    ValueSet imp_cell(Value a, Value b) const noexcept { return imp_[index(a)][index(b)]; }
    ValueSet box_cell(Value a) const noexcept { return box_[index(a)]; }

private:
    void require(Value v) const;

    const Logic* logic_;
    ValueSet bot_;
    std::array<std::array<ValueSet, 8>, 8> imp_{};
    std::array<ValueSet, 8> box_{};
};

// Shared instance per registered logic.
const Nmatrix& nmatrix(const Logic& logic);

// Unrestricted table entries as printed for all families; empty where the
// logic's box column has no entry.
ValueSet raw_implication(Value a, Value b);
ValueSet raw_box(const Logic& logic, Value a);
inline constexpr ValueSet raw_bot{Value::F, Value::ff};

}  // namespace mcube
