#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

namespace semialg {

namespace detail {
struct BigRep;  // arbitrary-precision numerator/denominator, defined in rational.cpp
struct RationalOps;
}

// Exact rational number. Always stored in canonical form: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero is 0/1.
//
// Values that fit in int64 numerator/denominator are kept inline; anything
// larger is promoted to a GMP-backed heap representation and demoted back as
// soon as it fits again. All arithmetic is exact.
class Rational {
  public:
    Rational() noexcept : num_(0), den_(1) {}
    template <typename T>
        requires std::integral<T>
    Rational(T n) : num_(static_cast<long long>(n)), den_(1) {  // NOLINT
        if constexpr (std::is_unsigned_v<T> && sizeof(T) >= 8) {
            if (n > static_cast<T>(std::numeric_limits<long long>::max())) {
                throw_too_large();
            }
        }
    }
    Rational(long long num, long long den);

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) {
        o.num_ = 0;
        o.den_ = 1;
    }
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept;
    ~Rational();

    // Parses "a", "-a" or "a/b". Throws Error on malformed input.
    static Rational from_string(std::string_view s);

    bool is_zero() const noexcept { return den_ != 0 ? num_ == 0 : false; }
    bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
    bool is_integer() const;
    int sign() const;  // -1, 0, +1

    bool fits_int64() const noexcept { return den_ != 0; }
    // Preconditions: fits_int64().
    long long num_i64() const { return num_; }
    long long den_i64() const { return den_; }

    // Bit length of |numerator| resp. denominator (0 has bit length 0).
    unsigned num_bits() const;
    unsigned den_bits() const;

    std::string to_string() const;  // "a" or "a/b", reduced

    Rational operator-() const;
    Rational abs() const;
    Rational reciprocal() const;  // throws Error on zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on zero divisor

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    // den_ > 0: inline value num_/den_. den_ == 0: num_ is a BigRep pointer.
    long long num_;
    long long den_;

    bool is_big() const noexcept { return den_ == 0; }
    detail::BigRep* big() const noexcept { return reinterpret_cast<detail::BigRep*>(num_); }
    [[noreturn]] static void throw_too_large();
    friend struct detail::RationalOps;
};

}  // namespace semialg
