#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcube/formula.hpp"

namespace mcube {

// Declaration order is the canonical output order.
enum class Value : std::uint8_t { F, f, ff, fff, ttt, tt, t, T };

inline constexpr std::array<Value, 8> all_values = {Value::F,   Value::f,  Value::ff, Value::fff,
                                                    Value::ttt, Value::tt, Value::t,  Value::T};

std::string_view name(Value v);
std::optional<Value> value_from_name(std::string_view s);

inline constexpr std::size_t index(Value v) { return static_cast<std::size_t>(v); }

class ValueSet {
public:
    constexpr ValueSet() = default;
    constexpr ValueSet(std::initializer_list<Value> vs) {
        for (Value v : vs) bits_ |= bit(v);
    }
    static constexpr ValueSet from_bits(std::uint8_t b) {
        ValueSet s;
        s.bits_ = b;
        return s;
    }
    static constexpr ValueSet all() { return from_bits(0xFF); }

    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool contains(Value v) const { return (bits_ & bit(v)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return __builtin_popcount(bits_); }
    constexpr bool subset_of(ValueSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(ValueSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr void insert(Value v) { bits_ |= bit(v); }
    constexpr void erase(Value v) { bits_ &= static_cast<std::uint8_t>(~bit(v)); }

    // Lowest value in canonical order; set must be nonempty.
    constexpr Value first() const { return static_cast<Value>(__builtin_ctz(bits_)); }

    friend constexpr ValueSet operator&(ValueSet a, ValueSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr ValueSet operator|(ValueSet a, ValueSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr ValueSet operator-(ValueSet a, ValueSet b) {
        return from_bits(static_cast<std::uint8_t>(a.bits_ & ~b.bits_));
    }
    friend constexpr bool operator==(ValueSet a, ValueSet b) = default;

    class iterator {
    public:
        constexpr explicit iterator(std::uint8_t rest) : rest_(rest) {}
        constexpr Value operator*() const { return static_cast<Value>(__builtin_ctz(rest_)); }
        constexpr iterator& operator++() {
            rest_ &= static_cast<std::uint8_t>(rest_ - 1);
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint8_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Value> to_vector() const;

private:
    static constexpr std::uint8_t bit(Value v) { return static_cast<std::uint8_t>(1u << index(v)); }
    std::uint8_t bits_ = 0;
};

// "{F,f,fff}"
std::string format(ValueSet s);

enum class NamedSet { D, Dc, N, I, P, PN };

inline constexpr ValueSet designated_values{Value::T, Value::t, Value::tt, Value::ttt};
inline constexpr ValueSet undesignated_values{Value::F, Value::f, Value::ff, Value::fff};
inline constexpr ValueSet necessary_values{Value::T, Value::tt, Value::fff, Value::ff};
inline constexpr ValueSet impossible_values{Value::F, Value::ff, Value::ttt, Value::tt};
inline constexpr ValueSet possible_values{Value::T, Value::t, Value::fff, Value::f};
inline constexpr ValueSet possibly_not_values{Value::F, Value::f, Value::ttt, Value::t};
inline constexpr ValueSet stable_values{Value::tt, Value::ff};

ValueSet named_set(NamedSet s);
bool member(Value v, NamedSet s);

inline constexpr bool is_designated(Value v) { return designated_values.contains(v); }
inline constexpr bool is_stable(Value v) { return stable_values.contains(v); }

// Modal characterization of value v for the formula a.
Formula characterization(Value v, const Formula& a);

}  // namespace mcube
