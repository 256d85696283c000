#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace semialg {

// A proof variable. Two flavors exist and never mix inside one proof:
//   Plain(i)         -> canonical name "x{i}"       (direct 0/1 variables)
//   Indicator(i, v)  -> canonical name "x{i}_{v}"   (indicator of value v)
//
// The canonical variable order used everywhere (monomial factors, term
// order, serialization) is plain lexicographic order on the canonical
// names, so e.g. "x10" sorts before "x2".
class VarId {
  public:
    static VarId plain(std::uint32_t index);
    static VarId indicator(std::uint32_t index, std::uint32_t value);

    // Parses "x3" or "x3_2".
    static VarId parse(std::string_view s);

    bool is_indicator() const noexcept { return value_ >= 0; }
    std::uint32_t index() const noexcept { return index_; }
    std::uint32_t value() const noexcept { return static_cast<std::uint32_t>(value_); }

    std::string name() const;
    // Writes the name into buf (size >= 24), returns length.
    std::size_t write_name(char* buf) const;

    std::uint64_t key() const noexcept {
        return (static_cast<std::uint64_t>(index_) << 32) |
               static_cast<std::uint32_t>(value_ + 1);
    }

    friend bool operator==(VarId a, VarId b) noexcept {
        return a.index_ == b.index_ && a.value_ == b.value_;
    }
    // Name-lexicographic order.
    friend std::strong_ordering operator<=>(VarId a, VarId b) noexcept;

  private:
    VarId(std::uint32_t index, std::int32_t value) : index_(index), value_(value) {}
    std::uint32_t index_;
    std::int32_t value_;  // -1 for plain
};

}  // namespace semialg

template <>
struct std::hash<semialg::VarId> {
    std::size_t operator()(semialg::VarId v) const noexcept {
        return std::hash<std::uint64_t>{}(v.key());
    }
};
