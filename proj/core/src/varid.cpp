#include "semialg/varid.hpp"

#include <charconv>
#include <cstring>

#include "semialg/errors.hpp"

namespace semialg {

VarId VarId::plain(std::uint32_t index) {
    if (index == 0) throw Error("variable indices start at 1");
    return VarId(index, -1);
}

VarId VarId::indicator(std::uint32_t index, std::uint32_t value) {
    if (index == 0) throw Error("variable indices start at 1");
    return VarId(index, static_cast<std::int32_t>(value));
}

std::size_t VarId::write_name(char* buf) const {
    // Worst case: 'x' + 10 digits + '_' + 10 digits = 22 of the 24 bytes.
    buf[0] = 'x';
    char* p = buf + 1;
    p = std::to_chars(p, buf + 11, index_).ptr;
    if (is_indicator()) {
        *p = '_';
        p = std::to_chars(p + 1, p + 11, static_cast<std::uint32_t>(value_)).ptr;
    }
    return static_cast<std::size_t>(p - buf);
}

std::string VarId::name() const {
    char buf[24];
    return std::string(buf, write_name(buf));
}

std::strong_ordering operator<=>(VarId a, VarId b) noexcept {
    if (a == b) return std::strong_ordering::equal;
    char ba[24], bb[24];
    const std::size_t la = a.write_name(ba);
    const std::size_t lb = b.write_name(bb);
    const std::size_t n = la < lb ? la : lb;
    const int c = std::memcmp(ba, bb, n);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
}

VarId VarId::parse(std::string_view s) {
    if (s.size() < 2 || s[0] != 'x') throw Error("bad variable name: " + std::string(s));
    std::uint32_t index = 0;
    const char* begin = s.data() + 1;
    const char* end = s.data() + s.size();
    auto r = std::from_chars(begin, end, index);
    if (r.ec != std::errc() || index == 0) throw Error("bad variable name: " + std::string(s));
    if (r.ptr == end) return plain(index);
    if (*r.ptr != '_' || r.ptr + 1 == end) throw Error("bad variable name: " + std::string(s));
    std::uint32_t value = 0;
    auto r2 = std::from_chars(r.ptr + 1, end, value);
    if (r2.ec != std::errc() || r2.ptr != end) throw Error("bad variable name: " + std::string(s));
    return indicator(index, value);
}

}  // namespace semialg
